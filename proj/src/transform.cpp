#include "lehmer/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lehmer/detail/numerics.hpp"

namespace lehmer {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest |log h| in the sample; the evaluation route is chosen against it.
double log_magnitude(const PositiveSample& h) {
    return std::max(std::abs(h.log_min()), std::abs(h.log_max()));
}

// Plain power sums stay representable well inside the exp budget; prefer
// them there, they round tighter than the exp/log route. Beyond it the
// anchored log-sum-exp route takes over: its exponents are all <= 0, so any
// finite s evaluates without overflow and the transform approaches the
// min/max limits continuously as distant terms underflow.
constexpr double kDirectBudget = 690.0;

bool direct_is_safe(const PositiveSample& h, double s) {
    const double mag = log_magnitude(h);
    return std::max(std::abs(s), std::abs(s - 1.0)) * mag <= kDirectBudget;
}

}  // namespace

BreveMoment BreveMoment::neg_infinity() noexcept { return BreveMoment(-kInf); }

BreveMoment BreveMoment::pos_infinity() noexcept { return BreveMoment(kInf); }

BreveMoment BreveMoment::finite(double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("finite breve moment requires a finite real");
    return BreveMoment(s);
}

BreveMoment BreveMoment::from_double(double s) {
    if (std::isnan(s)) throw std::invalid_argument("breve moment cannot be NaN");
    return BreveMoment(s);
}

bool BreveMoment::is_finite() const noexcept { return std::isfinite(value_); }
bool BreveMoment::is_pos_infinity() const noexcept { return value_ == kInf; }
bool BreveMoment::is_neg_infinity() const noexcept { return value_ == -kInf; }

double lehmer(const PositiveSample& h, BreveMoment s) {
    if (s.is_pos_infinity()) return h.max_value();
    if (s.is_neg_infinity()) return h.min_value();
    const double sv = s.value();
    if (direct_is_safe(h, sv)) {
        double num = 0.0, den = 0.0;
        for (double v : h.values()) {
            num += std::pow(v, sv);
            den += std::pow(v, sv - 1.0);
        }
        return std::clamp(num / den, h.min_value(), h.max_value());
    }

    const auto logs = h.log_values();
    const double shift_num = sv >= 0.0 ? h.log_max() : h.log_min();
    const double shift_den = sv - 1.0 >= 0.0 ? h.log_max() : h.log_min();
    const double ln_num = detail::log_sum_exp_shifted(logs, sv, shift_num);
    const double ln_den = detail::log_sum_exp_shifted(logs, sv - 1.0, shift_den);

    // The shift contributions cancel exactly when both sums use the same
    // anchor; only the 0 < s < 1 case mixes anchors, and there the exponents
    // stay small.
    double expo;
    if (shift_num == shift_den)
        expo = shift_num + (ln_num - ln_den);
    else
        expo = sv * (shift_num - shift_den) + shift_den + (ln_num - ln_den);
    return std::clamp(std::exp(expo), h.min_value(), h.max_value());
}

double lehmer(const PositiveSample& h, double s) { return lehmer(h, BreveMoment::from_double(s)); }

std::vector<SpectrumPoint> lehmer_spectrum(const PositiveSample& h,
                                           std::span<const BreveMoment> grid) {
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] < grid[i - 1]) throw GridNotSorted(i);
    std::vector<SpectrumPoint> out;
    out.reserve(grid.size());
    for (const BreveMoment& s : grid) out.push_back({s, lehmer(h, s)});
    return out;
}

double lehmer_derivative(const PositiveSample& h, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("derivative requires finite s");
    if (h.size() < 2) return 0.0;

    const auto values = h.values();
    const auto logs = h.log_values();
    const double shift = s - 1.0 >= 0.0 ? h.log_max() : h.log_min();
    const double ln_den = detail::log_sum_exp_shifted(logs, s - 1.0, shift);

    double acc = 0.0;
    const std::size_t n = values.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            if (values[i] == values[k]) continue;
            // (h_i - h_k)(ln h_i - ln h_k) >= 0: both factors share a sign.
            const double scale = (values[i] - values[k]) * (logs[i] - logs[k]);
            const double arg = (s - 1.0) * ((logs[i] - shift) + (logs[k] - shift)) - 2.0 * ln_den;
            acc += scale * std::exp(arg);
        }
    }
    return acc;
}

double lehmer_nth_derivative(const PositiveSample& h, double s, int order) {
    if (order < 1) throw OrderZero();
    if (!std::isfinite(s)) throw std::invalid_argument("derivative requires finite s");
    if (order == 1) return lehmer_derivative(h, s);

    const int m = order - 1;  // differentiate the analytic first derivative m times
    const auto stencil = [&](double step) {
        double acc = 0.0;
        double coeff = 1.0;  // binomial C(m, j), alternating sign
        for (int j = 0; j <= m; ++j) {
            const double offset = (0.5 * m - j) * step;
            acc += (j % 2 == 0 ? coeff : -coeff) * lehmer_derivative(h, s + offset);
            coeff = coeff * (m - j) / (j + 1);
        }
        return acc / std::pow(step, m);
    };

    const double h0 = 1e-3;
    const double a1 = stencil(h0);
    const double a2 = stencil(h0 / 2.0);
    const double a3 = stencil(h0 / 4.0);
    const double b1 = (4.0 * a2 - a1) / 3.0;
    const double b2 = (4.0 * a3 - a2) / 3.0;
    return (16.0 * b2 - b1) / 15.0;
}

double lehmer_derivative_via_log(const PositiveSample& h, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("derivative requires finite s");
    const double delta = 1e-5;
    const double dlog =
        (std::log(lehmer(h, s + delta)) - std::log(lehmer(h, s - delta))) / (2.0 * delta);
    return lehmer(h, s) * dlog;
}

MonotonicityClass monotonicity_class(const PositiveSample& h) {
    const auto values = h.values();
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] != values[0]) return MonotonicityClass::StrictlyIncreasing;
    return MonotonicityClass::Constant;
}

}  // namespace lehmer
