#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lehmer/distributions.hpp"
#include "lehmer/inversion.hpp"
#include "lehmer/io.hpp"
#include "lehmer/signal.hpp"
#include "lehmer/transform.hpp"

namespace {

using lehmer::BreveMoment;
namespace io = lehmer::io;

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format = "csv";
    std::string normalize;
};

struct GridOpts {
    std::string spec = "-30:30:241";
    bool no_inf = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("-i,--input", opts.input, "input file (CSV with a 'value' or 'time,value' header, or JSON)")
        ->required();
    cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
    cmd->add_option("-f,--format", opts.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-n,--normalize", opts.normalize,
                    "normalization pipeline, e.g. 'affine-unit:0.01,shift-min:1'; "
                    "default requires already-positive input");
}

void add_grid(CLI::App* cmd, GridOpts& opts, bool with_inf_flag) {
    cmd->add_option("-g,--grid", opts.spec, "breve-moment grid as lo:hi:count");
    if (with_inf_flag)
        cmd->add_flag("--no-inf", opts.no_inf, "omit the -inf/+inf sentinel columns");
}

std::vector<double> parse_finite_grid(const std::string& spec) {
    const auto bad = [&] {
        return std::invalid_argument("grid must be lo:hi:count with lo <= hi and count >= 2, got '" +
                                     spec + "'");
    };
    const std::size_t c1 = spec.find(':');
    const std::size_t c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
    double lo, hi;
    long count;
    try {
        lo = std::stod(spec.substr(0, c1));
        hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        count = std::stol(spec.substr(c2 + 1));
    } catch (const std::exception&) {
        throw bad();
    }
    if (!(lo <= hi) || count < 2) throw bad();
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (long j = 0; j < count; ++j)
        grid[static_cast<std::size_t>(j)] = lo + static_cast<double>(j) * (hi - lo) / (count - 1);
    return grid;
}

std::vector<BreveMoment> parse_moment_grid(const GridOpts& opts) {
    std::vector<BreveMoment> grid;
    if (!opts.no_inf) grid.push_back(BreveMoment::neg_infinity());
    for (double s : parse_finite_grid(opts.spec)) grid.push_back(BreveMoment::finite(s));
    if (!opts.no_inf) grid.push_back(BreveMoment::pos_infinity());
    return grid;
}

lehmer::TimeSeries load_series(const CommonOpts& opts) {
    return io::read_series(opts.input, io::infer_format(opts.input));
}

lehmer::PositiveSample load_positive(const CommonOpts& opts) {
    const auto ts = load_series(opts);
    const auto pipeline = io::parse_pipeline(opts.normalize);
    if (pipeline.empty()) return lehmer::PositiveSample::from_values(ts.values());
    return lehmer::normalize(lehmer::Sample(ts.values()), pipeline);
}

void emit(const CommonOpts& opts, const std::function<void(std::ostream&, io::Format)>& writer) {
    const io::Format format = io::format_from_string(opts.format);
    if (opts.output.empty()) {
        writer(std::cout, format);
        return;
    }
    std::ofstream os(opts.output);
    if (!os) throw lehmer::FileError("cannot open '" + opts.output + "' for writing");
    writer(os, format);
}

void emit_record(const CommonOpts& opts, const io::Record& record) {
    emit(opts, [&](std::ostream& os, io::Format f) { io::write_record(os, record, f); });
}

void emit_records(const CommonOpts& opts, const std::vector<io::Record>& records) {
    emit(opts, [&](std::ostream& os, io::Format f) { io::write_records(os, records, f); });
}

io::Record scalar_record(BreveMoment s, double value) {
    io::Record r;
    if (s.is_finite())
        r["s"] = s.value();
    else
        r["s"] = io::moment_to_string(s);
    r["value"] = value;
    return r;
}

const char* method_name(lehmer::InversionResult::Method m) {
    return m == lehmer::InversionResult::Method::BisectionNewton ? "bisection-newton"
                                                                 : "lagrange-series";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Lehmer transform toolkit"};
    app.require_subcommand(1);

    try {
        // transform
        {
            auto opts = std::make_shared<CommonOpts>();
            auto s_arg = std::make_shared<std::string>();
            auto* cmd = app.add_subcommand("transform", "evaluate the transform at one breve moment");
            add_common(cmd, *opts);
            cmd->add_option("-s,--s", *s_arg, "breve moment (number, +inf, or -inf)")->required();
            cmd->callback([opts, s_arg] {
                const auto h = load_positive(*opts);
                const BreveMoment s = io::moment_from_string(*s_arg);
                emit_record(*opts, scalar_record(s, lehmer::lehmer(h, s)));
            });
        }
        // spectrum
        {
            auto opts = std::make_shared<CommonOpts>();
            auto grid = std::make_shared<GridOpts>();
            auto* cmd = app.add_subcommand("spectrum", "evaluate the transform over a moment grid");
            add_common(cmd, *opts);
            add_grid(cmd, *grid, true);
            cmd->callback([opts, grid] {
                const auto h = load_positive(*opts);
                const auto moments = parse_moment_grid(*grid);
                const auto points = lehmer::lehmer_spectrum(h, moments);
                emit_records(*opts, io::spectrum_records(points));
            });
        }
        // invert
        {
            auto opts = std::make_shared<CommonOpts>();
            auto target = std::make_shared<double>();
            auto tol = std::make_shared<double>(1e-12);
            auto* cmd = app.add_subcommand("invert", "map a target statistic back to its breve moment");
            add_common(cmd, *opts);
            cmd->add_option("-t,--target", *target, "target statistic")->required();
            cmd->add_option("--tol", *tol, "residual tolerance");
            cmd->callback([opts, target, tol] {
                const auto h = load_positive(*opts);
                const auto result = lehmer::invert(h, *target, *tol);
                io::Record r;
                r["moment"] = result.moment.is_finite()
                                  ? io::Record(result.moment.value())
                                  : io::Record(io::moment_to_string(result.moment));
                r["residual"] = result.residual;
                r["iterations"] = result.iterations;
                r["method"] = method_name(result.method);
                emit_record(*opts, r);
            });
        }
        // cdf / pdf (linear family)
        {
            auto opts = std::make_shared<CommonOpts>();
            auto s_arg = std::make_shared<std::string>();
            auto* cmd = app.add_subcommand("cdf", "linear-family CDF at one breve moment");
            add_common(cmd, *opts);
            cmd->add_option("-s,--s", *s_arg, "breve moment (number, +inf, or -inf)")->required();
            cmd->callback([opts, s_arg] {
                const auto h = load_positive(*opts);
                const auto coeffs = lehmer::linear_cdf_coeffs(h);
                const BreveMoment s = io::moment_from_string(*s_arg);
                emit_record(*opts, scalar_record(s, lehmer::empirical_cdf(h, coeffs, s)));
            });
        }
        {
            auto opts = std::make_shared<CommonOpts>();
            auto s_arg = std::make_shared<double>();
            auto* cmd = app.add_subcommand("pdf", "linear-family density at one breve moment");
            add_common(cmd, *opts);
            cmd->add_option("-s,--s", *s_arg, "breve moment (finite)")->required();
            cmd->callback([opts, s_arg] {
                const auto h = load_positive(*opts);
                const auto coeffs = lehmer::linear_cdf_coeffs(h);
                emit_record(*opts, scalar_record(BreveMoment::finite(*s_arg),
                                                 lehmer::empirical_pdf(h, coeffs, *s_arg)));
            });
        }
        // breve-pdf / log-breve-pdf
        {
            auto opts = std::make_shared<CommonOpts>();
            auto s_arg = std::make_shared<double>();
            auto alpha = std::make_shared<double>();
            auto beta = std::make_shared<double>();
            auto eps = std::make_shared<double>(1e-9);
            auto* cmd = app.add_subcommand("breve-pdf", "Breve density at one breve moment");
            add_common(cmd, *opts);
            cmd->add_option("-s,--s", *s_arg, "breve moment (finite)")->required();
            cmd->add_option("-a,--alpha", *alpha, "alpha in (0, 1]")->required();
            cmd->add_option("-b,--beta", *beta, "beta > 0")->required();
            cmd->add_option("--eps", *eps, "lower-endpoint floor for the normalization");
            cmd->callback([opts, s_arg, alpha, beta, eps] {
                const auto h = load_positive(*opts);
                const lehmer::BreveParams params(*alpha, *beta);
                const auto hn = lehmer::breve_normalize(h, params, *eps);
                emit_record(*opts, scalar_record(BreveMoment::finite(*s_arg),
                                                 lehmer::breve_pdf(hn, params, *s_arg)));
            });
        }
        {
            auto opts = std::make_shared<CommonOpts>();
            auto s_arg = std::make_shared<double>();
            auto alpha = std::make_shared<double>();
            auto beta = std::make_shared<double>();
            auto* cmd = app.add_subcommand("log-breve-pdf", "Log-Breve density at one breve moment");
            add_common(cmd, *opts);
            cmd->add_option("-s,--s", *s_arg, "breve moment (finite)")->required();
            cmd->add_option("-a,--alpha", *alpha, "alpha in (0, 1]")->required();
            cmd->add_option("-b,--beta", *beta, "beta > 0")->required();
            cmd->callback([opts, s_arg, alpha, beta] {
                const auto h = load_positive(*opts);
                const lehmer::BreveParams params(*alpha, *beta);
                const auto hn = lehmer::log_breve_normalize(h, params);
                emit_record(*opts, scalar_record(BreveMoment::finite(*s_arg),
                                                 lehmer::log_breve_pdf(hn, params, *s_arg)));
            });
        }
        // modes
        {
            auto opts = std::make_shared<CommonOpts>();
            auto grid = std::make_shared<GridOpts>();
            auto alpha = std::make_shared<double>();
            auto beta = std::make_shared<double>();
            auto eps = std::make_shared<double>(1e-9);
            auto* cmd = app.add_subcommand("modes", "extreme points of the Breve density");
            add_common(cmd, *opts);
            add_grid(cmd, *grid, false);
            cmd->add_option("-a,--alpha", *alpha, "alpha in (0, 1]")->required();
            cmd->add_option("-b,--beta", *beta, "beta > 0")->required();
            cmd->add_option("--eps", *eps, "lower-endpoint floor for the normalization");
            cmd->callback([opts, grid, alpha, beta, eps] {
                const auto h = load_positive(*opts);
                const lehmer::BreveParams params(*alpha, *beta);
                const auto hn = lehmer::breve_normalize(h, params, *eps);
                const auto finite_grid = parse_finite_grid(grid->spec);
                std::vector<io::Record> records;
                for (double mode : lehmer::find_modes(hn, params, finite_grid))
                    records.push_back(scalar_record(BreveMoment::finite(mode),
                                                    lehmer::breve_pdf(hn, params, mode)));
                emit_records(*opts, records);
            });
        }
        // spectrogram
        {
            auto opts = std::make_shared<CommonOpts>();
            auto grid = std::make_shared<GridOpts>();
            auto width = std::make_shared<int>();
            auto hop = std::make_shared<int>();
            auto threads = std::make_shared<unsigned>(1);
            auto* cmd = app.add_subcommand("spectrogram", "sliding-window transform of a time series");
            add_common(cmd, *opts);
            add_grid(cmd, *grid, true);
            cmd->add_option("-w,--width", *width, "window width in samples (>= 2)")->required();
            cmd->add_option("--hop", *hop, "hop between window starts (>= 1)")->required();
            cmd->add_option("--threads", *threads, "worker threads (0 = hardware)");
            cmd->callback([opts, grid, width, hop, threads] {
                const auto ts = load_series(*opts);
                const auto pipeline = io::parse_pipeline(opts->normalize);
                const auto moments = parse_moment_grid(*grid);
                const lehmer::WindowPlan plan{*width, *hop, lehmer::PadMode::DropPartial};
                const auto sg = lehmer::breve_spectrogram(ts, plan, pipeline, moments, *threads);
                emit_records(*opts, io::spectrogram_records(sg));
            });
        }
        // features
        {
            auto opts = std::make_shared<CommonOpts>();
            auto* cmd = app.add_subcommand("features", "canonical breve-moment feature vector");
            add_common(cmd, *opts);
            cmd->callback([opts] {
                const auto ts = load_series(*opts);
                const auto pipeline = io::parse_pipeline(opts->normalize);
                const auto points = lehmer::breve_features(lehmer::Sample(ts.values()), pipeline);
                emit_records(*opts, io::spectrum_records(points));
            });
        }

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lehmer::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const lehmer::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
