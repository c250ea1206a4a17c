#include "lehmer/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lehmer/detail/numerics.hpp"

namespace lehmer {

namespace {

constexpr double kNormalizationTol = 1e-9;  // relative

double require_strictly_increasing_range(const PositiveSample& h, const char* what_for) {
    if (monotonicity_class(h) == MonotonicityClass::Constant) throw ConstantSample(what_for);
    return h.max_value() - h.min_value();
}

void check_breve_normalization(const PositiveSample& hn, double target) {
    if (std::abs(hn.max_value() - target) > kNormalizationTol * target)
        throw NormalizationMismatch(target, hn.max_value());
}

double log_nonlinear_g(double x, const BreveParams& p) {
    return std::log(x) / p.alpha + p.beta * x;
}

}  // namespace

BreveParams::BreveParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1]");
    if (!(std::isfinite(beta) && beta > 0.0))
        throw std::invalid_argument("beta must be a positive finite real");
}

double lambert_w0(double x) {
    const double branch = -std::exp(-1.0);
    if (x < branch) throw BelowBranchPoint(x);
    if (x == 0.0) return 0.0;

    double w;
    if (x < -0.3) {
        // Series start near the branch point.
        const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (x < std::numbers::e) {
        w = std::log1p(x);
    } else {
        w = std::log(x) - std::log(std::log(x));
    }

    for (int i = 0; i < 80; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (std::abs(f) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        const double wp1 = w + 1.0;
        double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if (!std::isfinite(denom) || denom == 0.0) denom = ew * wp1;
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(w))) break;
    }
    return w;
}

LinearFamilyCoeffs linear_cdf_coeffs(const PositiveSample& h) {
    const double range = require_strictly_increasing_range(h, "linear family needs two distinct values");
    const double b = 1.0 / range;
    // a is built from the same product the cdf evaluates, so F(-inf) is 0 exactly.
    return {-(b * h.min_value()), b};
}

double empirical_cdf(const PositiveSample& h, const LinearFamilyCoeffs& c, BreveMoment s) {
    return std::clamp(c.a + c.b * lehmer(h, s), 0.0, 1.0);
}

double empirical_pdf(const PositiveSample& h, const LinearFamilyCoeffs& c, double s) {
    return c.b * lehmer_derivative(h, s);
}

double breve_upper_target(const BreveParams& p) {
    const double ab = p.alpha * p.beta;
    return lambert_w0(ab) / ab;
}

double log_breve_upper_target(const BreveParams& p) { return std::exp(breve_upper_target(p)); }

PositiveSample breve_normalize(const PositiveSample& h, const BreveParams& p, double eps) {
    require_strictly_increasing_range(h, "breve normalization needs two distinct values");
    if (!(std::isfinite(eps) && eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("eps must lie in (0, 1)");
    const double target = breve_upper_target(p);
    const double range = h.max_value() - h.min_value();
    std::vector<double> out;
    out.reserve(h.size());
    for (double v : h.values()) {
        const double u = (v - h.min_value()) / range;  // 1.0 exactly at the max
        out.push_back(target * (eps + (1.0 - eps) * u));
    }
    return PositiveSample::from_values(std::move(out));
}

double breve_cdf(const PositiveSample& hn, const BreveParams& p, BreveMoment s) {
    check_breve_normalization(hn, breve_upper_target(p));
    const double l = lehmer(hn, s);
    return std::clamp(std::exp(log_nonlinear_g(l, p)), 0.0, 1.0);
}

double breve_pdf(const PositiveSample& hn, const BreveParams& p, double s) {
    check_breve_normalization(hn, breve_upper_target(p));
    const double lp = lehmer_derivative(hn, s);
    if (lp == 0.0) return 0.0;
    const double l = lehmer(hn, s);
    const double power = std::exp(p.beta * l + (1.0 / p.alpha - 1.0) * std::log(l));
    return lp * (1.0 / p.alpha) * (1.0 + p.alpha * p.beta * l) * power;
}

std::vector<double> find_modes(const PositiveSample& hn, const BreveParams& p,
                               std::span<const double> s_grid) {
    for (std::size_t i = 1; i < s_grid.size(); ++i)
        if (s_grid[i] < s_grid[i - 1]) throw GridNotSorted(i);

    const double delta = 1e-6;
    const auto pdf = [&](double s) { return breve_pdf(hn, p, s); };
    const auto slope = [&](double s) { return (pdf(s + delta) - pdf(s - delta)) / (2.0 * delta); };

    double max_f = 0.0;
    std::vector<double> phi(s_grid.size());
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        max_f = std::max(max_f, pdf(s_grid[i]));
        phi[i] = slope(s_grid[i]);
    }

    std::vector<double> modes;
    for (std::size_t i = 0; i + 1 < s_grid.size(); ++i) {
        double candidate;
        if (phi[i] == 0.0) {
            candidate = s_grid[i];
        } else if (phi[i] * phi[i + 1] < 0.0) {
            double a = s_grid[i], b = s_grid[i + 1];
            double phi_a = phi[i];
            while (b - a > 1e-8) {
                const double mid = 0.5 * (a + b);
                const double phi_m = slope(mid);
                if ((phi_m < 0.0) == (phi_a < 0.0)) {
                    a = mid;
                    phi_a = phi_m;
                } else {
                    b = mid;
                }
            }
            candidate = 0.5 * (a + b);
        } else {
            continue;
        }
        if (std::abs(slope(candidate)) <= 1e-6 * max_f) modes.push_back(candidate);
    }
    return modes;
}

PositiveSample log_breve_normalize(const PositiveSample& h, const BreveParams& p) {
    require_strictly_increasing_range(h, "log-breve normalization needs two distinct values");
    const double upper = log_breve_upper_target(p);
    const double scale = upper - 1.0;
    const double range = h.max_value() - h.min_value();
    std::vector<double> out;
    out.reserve(h.size());
    for (double v : h.values()) {
        const double u = (v - h.min_value()) / range;
        out.push_back(1.0 + scale * u);  // min -> 1, max -> upper, both exact
    }
    return PositiveSample::from_values(std::move(out));
}

double log_breve_normalizer(const BreveParams& p) {
    const double w = lambert_w0(p.alpha * p.beta);
    const double upper = std::exp(w / (p.alpha * p.beta));
    return std::exp(w / (p.alpha * p.alpha * p.beta) + p.beta * upper) - std::exp(p.beta);
}

double log_breve_pdf(const PositiveSample& hn, const BreveParams& p, double s) {
    const double w = lambert_w0(p.alpha * p.beta);
    const double upper = std::exp(w / (p.alpha * p.beta));
    check_breve_normalization(hn, upper);

    // The closed-form normalizer must match G(max) - G(min); both are kept in
    // the log domain so large beta cannot overflow.
    const double log_c_closed =
        detail::log_sub_exp(w / (p.alpha * p.alpha * p.beta) + p.beta * upper, p.beta);
    const double log_c_sample =
        detail::log_sub_exp(log_nonlinear_g(hn.max_value(), p), log_nonlinear_g(hn.min_value(), p));
    if (std::abs(log_c_closed - log_c_sample) > kNormalizationTol)
        throw NormalizationMismatch(std::exp(log_c_closed), std::exp(log_c_sample));

    const double lp = lehmer_derivative(hn, s);
    if (lp == 0.0) return 0.0;
    const double l = lehmer(hn, s);
    const double log_f = std::log(lp) - std::log(p.alpha) + std::log1p(p.alpha * p.beta * l) +
                         p.beta * l + (1.0 / p.alpha - 1.0) * std::log(l) - log_c_closed;
    return std::exp(log_f);
}

NonlinearCoeffs nonlinear_coeffs(const PositiveSample& h, const BreveParams& p) {
    require_strictly_increasing_range(h, "nonlinear family needs two distinct values");
    const double g_min = nonlinear_g(h.min_value(), p);
    const double g_max = nonlinear_g(h.max_value(), p);
    const double span = g_max - g_min;
    const double b = 1.0 / span;
    return {-(b * g_min), b};
}

double nonlinear_g(double x, const BreveParams& p) {
    if (!(x > 0.0)) throw std::invalid_argument("nonlinear family map requires x > 0");
    return std::exp(log_nonlinear_g(x, p));
}

DensityCurve density_curve(std::span<const double> grid,
                           const std::function<double(double)>& pdf) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] < grid[i - 1]) throw GridNotSorted(i);
    DensityCurve curve;
    curve.grid.assign(grid.begin(), grid.end());
    curve.density.reserve(grid.size());
    for (double s : grid) curve.density.push_back(pdf(s));
    curve.mass = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        curve.mass += 0.5 * (curve.density[i] + curve.density[i + 1]) * (grid[i + 1] - grid[i]);
    return curve;
}

}  // namespace lehmer
