#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "lehmer/distributions.hpp"
#include "lehmer/inversion.hpp"
#include "lehmer/io.hpp"
#include "lehmer/signal.hpp"
#include "lehmer/transform.hpp"

namespace py = pybind11;

namespace {

lehmer::PositiveSample make_positive(const std::vector<double>& values,
                                     const std::string& pipeline_spec) {
    const auto pipeline = lehmer::io::parse_pipeline(pipeline_spec);
    if (pipeline.empty()) return lehmer::PositiveSample::from_values(values);
    return lehmer::normalize(lehmer::Sample(values), pipeline);
}

std::vector<std::pair<double, double>> to_pairs(const std::vector<lehmer::SpectrumPoint>& points) {
    std::vector<std::pair<double, double>> out;
    out.reserve(points.size());
    for (const auto& p : points) out.emplace_back(p.s.value(), p.value);
    return out;
}

}  // namespace

PYBIND11_MODULE(_lehmer, m) {
    m.doc() = "discrete Lehmer transform, breve-moment distributions, and sliding-window analysis";

    py::register_exception<lehmer::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<lehmer::IoError>(m, "IoError", PyExc_ValueError);

    m.def(
        "normalize",
        [](const std::vector<double>& values, const std::string& pipeline) {
            const auto h = make_positive(values, pipeline);
            return std::vector<double>(h.values().begin(), h.values().end());
        },
        py::arg("values"), py::arg("pipeline") = "",
        "Apply a normalization pipeline; returns the positive values, sorted ascending.");

    m.def(
        "lehmer",
        [](const std::vector<double>& values, double s, const std::string& pipeline) {
            return lehmer::lehmer(make_positive(values, pipeline), s);
        },
        py::arg("values"), py::arg("s"), py::arg("pipeline") = "",
        "Transform value at breve moment s (math.inf and -math.inf select max/min).");

    m.def(
        "lehmer_spectrum",
        [](const std::vector<double>& values, const std::vector<double>& grid,
           const std::string& pipeline) {
            const auto h = make_positive(values, pipeline);
            std::vector<lehmer::BreveMoment> moments;
            moments.reserve(grid.size());
            for (double s : grid) moments.push_back(lehmer::BreveMoment::from_double(s));
            return to_pairs(lehmer::lehmer_spectrum(h, moments));
        },
        py::arg("values"), py::arg("grid"), py::arg("pipeline") = "");

    m.def(
        "lehmer_derivative",
        [](const std::vector<double>& values, double s, const std::string& pipeline) {
            return lehmer::lehmer_derivative(make_positive(values, pipeline), s);
        },
        py::arg("values"), py::arg("s"), py::arg("pipeline") = "");

    m.def(
        "lehmer_nth_derivative",
        [](const std::vector<double>& values, double s, int order, const std::string& pipeline) {
            return lehmer::lehmer_nth_derivative(make_positive(values, pipeline), s, order);
        },
        py::arg("values"), py::arg("s"), py::arg("order"), py::arg("pipeline") = "");

    m.def(
        "monotonicity_class",
        [](const std::vector<double>& values, const std::string& pipeline) {
            return lehmer::monotonicity_class(make_positive(values, pipeline)) ==
                           lehmer::MonotonicityClass::Constant
                       ? "constant"
                       : "strictly-increasing";
        },
        py::arg("values"), py::arg("pipeline") = "");

    m.def(
        "invert",
        [](const std::vector<double>& values, double target, double tol,
           const std::string& pipeline) {
            const auto result = lehmer::invert(make_positive(values, pipeline), target, tol);
            py::dict d;
            d["moment"] = result.moment.value();
            d["residual"] = result.residual;
            d["iterations"] = result.iterations;
            d["method"] = result.method == lehmer::InversionResult::Method::BisectionNewton
                              ? "bisection-newton"
                              : "lagrange-series";
            return d;
        },
        py::arg("values"), py::arg("target"), py::arg("tol") = 1e-12, py::arg("pipeline") = "");

    m.def(
        "invert_series",
        [](const std::vector<double>& values, double target, double s0, int terms,
           const std::string& pipeline) {
            return lehmer::invert_series(make_positive(values, pipeline), target, s0, terms);
        },
        py::arg("values"), py::arg("target"), py::arg("s0"), py::arg("terms") = 4,
        py::arg("pipeline") = "");

    m.def("lambert_w0", &lehmer::lambert_w0, py::arg("x"));

    m.def(
        "linear_cdf_coeffs",
        [](const std::vector<double>& values, const std::string& pipeline) {
            const auto c = lehmer::linear_cdf_coeffs(make_positive(values, pipeline));
            return std::make_pair(c.a, c.b);
        },
        py::arg("values"), py::arg("pipeline") = "");

    m.def(
        "empirical_cdf",
        [](const std::vector<double>& values, double s, const std::string& pipeline) {
            const auto h = make_positive(values, pipeline);
            return lehmer::empirical_cdf(h, lehmer::linear_cdf_coeffs(h),
                                         lehmer::BreveMoment::from_double(s));
        },
        py::arg("values"), py::arg("s"), py::arg("pipeline") = "");

    m.def(
        "empirical_pdf",
        [](const std::vector<double>& values, double s, const std::string& pipeline) {
            const auto h = make_positive(values, pipeline);
            return lehmer::empirical_pdf(h, lehmer::linear_cdf_coeffs(h), s);
        },
        py::arg("values"), py::arg("s"), py::arg("pipeline") = "");

    m.def(
        "breve_normalize",
        [](const std::vector<double>& values, double alpha, double beta, double eps,
           const std::string& pipeline) {
            const auto hn = lehmer::breve_normalize(make_positive(values, pipeline),
                                                    lehmer::BreveParams(alpha, beta), eps);
            return std::vector<double>(hn.values().begin(), hn.values().end());
        },
        py::arg("values"), py::arg("alpha"), py::arg("beta"), py::arg("eps") = 1e-9,
        py::arg("pipeline") = "");

    m.def(
        "breve_cdf",
        [](const std::vector<double>& normalized, double alpha, double beta, double s) {
            return lehmer::breve_cdf(lehmer::PositiveSample::from_values(normalized),
                                     lehmer::BreveParams(alpha, beta),
                                     lehmer::BreveMoment::from_double(s));
        },
        py::arg("normalized"), py::arg("alpha"), py::arg("beta"), py::arg("s"));

    m.def(
        "breve_pdf",
        [](const std::vector<double>& normalized, double alpha, double beta, double s) {
            return lehmer::breve_pdf(lehmer::PositiveSample::from_values(normalized),
                                     lehmer::BreveParams(alpha, beta), s);
        },
        py::arg("normalized"), py::arg("alpha"), py::arg("beta"), py::arg("s"));

    m.def(
        "find_modes",
        [](const std::vector<double>& normalized, double alpha, double beta,
           const std::vector<double>& grid) {
            return lehmer::find_modes(lehmer::PositiveSample::from_values(normalized),
                                      lehmer::BreveParams(alpha, beta), grid);
        },
        py::arg("normalized"), py::arg("alpha"), py::arg("beta"), py::arg("grid"));

    m.def(
        "log_breve_normalize",
        [](const std::vector<double>& values, double alpha, double beta,
           const std::string& pipeline) {
            const auto hn = lehmer::log_breve_normalize(make_positive(values, pipeline),
                                                        lehmer::BreveParams(alpha, beta));
            return std::vector<double>(hn.values().begin(), hn.values().end());
        },
        py::arg("values"), py::arg("alpha"), py::arg("beta"), py::arg("pipeline") = "");

    m.def(
        "log_breve_pdf",
        [](const std::vector<double>& normalized, double alpha, double beta, double s) {
            return lehmer::log_breve_pdf(lehmer::PositiveSample::from_values(normalized),
                                         lehmer::BreveParams(alpha, beta), s);
        },
        py::arg("normalized"), py::arg("alpha"), py::arg("beta"), py::arg("s"));

    m.def(
        "nonlinear_coeffs",
        [](const std::vector<double>& values, double alpha, double beta,
           const std::string& pipeline) {
            const auto c = lehmer::nonlinear_coeffs(make_positive(values, pipeline),
                                                    lehmer::BreveParams(alpha, beta));
            return std::make_pair(c.a, c.b);
        },
        py::arg("values"), py::arg("alpha"), py::arg("beta"), py::arg("pipeline") = "");

    m.def(
        "breve_spectrogram",
        [](const std::vector<double>& values, int width, int hop, const std::vector<double>& grid,
           const std::string& pipeline, unsigned threads) {
            const lehmer::TimeSeries ts(values);
            std::vector<lehmer::BreveMoment> moments;
            moments.reserve(grid.size());
            for (double s : grid) moments.push_back(lehmer::BreveMoment::from_double(s));
            const auto sg = lehmer::breve_spectrogram(
                ts, lehmer::WindowPlan{width, hop, lehmer::PadMode::DropPartial},
                lehmer::io::parse_pipeline(pipeline), moments, threads);
            py::dict d;
            d["window_starts"] = sg.window_starts();
            std::vector<double> s_grid;
            for (const auto& s : sg.s_grid()) s_grid.push_back(s.value());
            d["s_grid"] = s_grid;
            std::vector<std::vector<double>> rows(sg.rows());
            for (std::size_t w = 0; w < sg.rows(); ++w) {
                rows[w].resize(sg.cols());
                for (std::size_t j = 0; j < sg.cols(); ++j) rows[w][j] = sg.value(w, j);
            }
            d["values"] = rows;
            return d;
        },
        py::arg("values"), py::arg("width"), py::arg("hop"), py::arg("grid"),
        py::arg("pipeline") = "", py::arg("threads") = 1);

    m.def(
        "breve_features",
        [](const std::vector<double>& values, const std::string& pipeline) {
            return to_pairs(
                lehmer::breve_features(lehmer::Sample(values), lehmer::io::parse_pipeline(pipeline)));
        },
        py::arg("values"), py::arg("pipeline") = "");
}
