#include "lehmer/inversion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lehmer {

namespace {

constexpr double kBracketCap = 512.0;
constexpr double kEndpointSnap = 1e-15;  // relative; ties this close count as the endpoint

bool snaps_to(double target, double endpoint) {
    return target == endpoint || std::abs(target - endpoint) <= kEndpointSnap * std::abs(endpoint);
}

}  // namespace

InversionResult invert(const PositiveSample& h, double target, double tol) {
    if (monotonicity_class(h) == MonotonicityClass::Constant)
        throw ConstantSample("inverse transform undefined for a constant sample");
    if (!std::isfinite(target)) throw std::invalid_argument("target must be finite");

    const double lo_v = h.min_value();
    const double hi_v = h.max_value();
    using Method = InversionResult::Method;
    if (snaps_to(target, hi_v))
        return {BreveMoment::pos_infinity(), std::abs(hi_v - target), 0, Method::BisectionNewton};
    if (snaps_to(target, lo_v))
        return {BreveMoment::neg_infinity(), std::abs(lo_v - target), 0, Method::BisectionNewton};
    if (target < lo_v || target > hi_v) throw TargetOutOfRange(target, lo_v, hi_v);

    int iterations = 0;
    double lo = -1.0, hi = 1.0;
    double flo = lehmer(h, lo);
    double fhi = lehmer(h, hi);
    while (flo > target) {
        lo *= 2.0;
        if (lo < -kBracketCap)
            throw TargetOutOfRange(target, lo_v, hi_v,
                                   "bracket cap reached; residual " +
                                       std::to_string(flo - target));
        flo = lehmer(h, lo);
        ++iterations;
    }
    while (fhi < target) {
        hi *= 2.0;
        if (hi > kBracketCap)
            throw TargetOutOfRange(target, lo_v, hi_v,
                                   "bracket cap reached; residual " +
                                       std::to_string(target - fhi));
        fhi = lehmer(h, hi);
        ++iterations;
    }

    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        const double fm = lehmer(h, mid);
        ++iterations;
        if (fm < target)
            lo = mid;
        else
            hi = mid;
    }

    // Newton polish keeps running past the residual tolerance until the step
    // stalls, so the root is accurate in s even where the transform is flat.
    double s = 0.5 * (lo + hi);
    double fs = lehmer(h, s);
    ++iterations;
    for (int k = 0; k < 100; ++k) {
        const double r = fs - target;
        if (r == 0.0) break;
        if (r < 0.0)
            lo = s;
        else
            hi = s;
        const double d = lehmer_derivative(h, s);
        double next = d > 0.0 ? s - r / d : std::numeric_limits<double>::quiet_NaN();
        if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        const double step = std::abs(next - s);
        s = next;
        fs = lehmer(h, s);
        ++iterations;
        if (step <= 1e-14 * std::max(1.0, std::abs(s))) break;
        if (std::abs(fs - target) <= tol && step <= 1e-10 * std::max(1.0, std::abs(s))) break;
    }
    return {BreveMoment::finite(s), std::abs(fs - target), iterations, Method::BisectionNewton};
}

namespace {

// Taylor coefficients of the transform around s0, from the analytic moment
// sums: the j-th derivatives of numerator and denominator are
// sum_i h_i^s (ln h_i)^j, combined by power-series division. Exponents are
// anchored at the log extremes like the pointwise evaluation.
std::vector<double> transform_taylor(const PositiveSample& h, double s0, int order) {
    const auto logs = h.log_values();
    const double shift_num = s0 >= 0.0 ? h.log_max() : h.log_min();
    const double shift_den = s0 - 1.0 >= 0.0 ? h.log_max() : h.log_min();
    std::vector<double> num(order + 1, 0.0), den(order + 1, 0.0);
    for (double lv : logs) {
        const double en = std::exp(s0 * (lv - shift_num));
        const double ed = std::exp((s0 - 1.0) * (lv - shift_den));
        double pw = 1.0;
        for (int j = 0; j <= order; ++j) {
            num[j] += en * pw;
            den[j] += ed * pw;
            pw *= lv;
        }
    }
    double factorial = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 1) factorial *= j;
        num[j] /= factorial;
        den[j] /= factorial;
    }
    const double scale = shift_num == shift_den
                             ? std::exp(shift_num)
                             : std::exp(s0 * (shift_num - shift_den) + shift_den);
    std::vector<double> a(order + 1, 0.0);
    for (int j = 0; j <= order; ++j) {
        double acc = num[j];
        for (int t = 1; t <= j; ++t) acc -= den[t] * a[j - t];
        a[j] = acc / den[0];
    }
    for (double& c : a) c *= scale;
    return a;  // L(s0 + u) = sum_j a[j] u^j
}

// Reversion of t = sum_{j>=1} a_j u^j into u = sum_k b_k t^k. The degree-k
// coefficient of u^j (j >= 2) never touches b_k itself, so each order is
// solved directly.
std::vector<double> revert_series(const std::vector<double>& a, int order) {
    std::vector<double> u(order + 1, 0.0);
    u[1] = 1.0 / a[1];
    for (int k = 2; k <= order; ++k) {
        std::vector<double> pw(order + 1, 0.0);
        pw[0] = 1.0;
        double tail = 0.0;
        for (int j = 1; j <= k; ++j) {
            std::vector<double> next(order + 1, 0.0);
            for (int p = 0; p < k; ++p)
                if (pw[p] != 0.0)
                    for (int q = 1; p + q <= k; ++q) next[p + q] += pw[p] * u[q];
            pw = std::move(next);
            if (j >= 2) tail += a[j] * pw[k];
        }
        u[k] = -tail / a[1];
    }
    return u;
}

}  // namespace

double invert_series(const PositiveSample& h, double target, double s0, int terms) {
    if (monotonicity_class(h) == MonotonicityClass::Constant)
        throw ConstantSample("inverse transform undefined for a constant sample");
    if (terms < 1 || terms > 6)
        throw std::invalid_argument("series terms must be between 1 and 6");
    if (!(target > h.min_value() && target < h.max_value()))
        throw TargetOutOfRange(target, h.min_value(), h.max_value(),
                               "series requires a strictly interior target");

    const double l0 = lehmer(h, s0);
    const double dt = target - l0;
    if (dt == 0.0) return s0;

    const auto taylor = transform_taylor(h, s0, terms);
    if (!(taylor[1] > 0.0)) throw SeriesDiverging(1);
    const auto coeffs = revert_series(taylor, terms);

    double sum = s0;
    double dt_pow = 1.0;
    double prev_term_mag = std::numeric_limits<double>::infinity();
    int growth_streak = 0;
    for (int k = 1; k <= terms; ++k) {
        dt_pow *= dt;
        const double term = coeffs[k] * dt_pow;
        growth_streak = std::abs(term) > prev_term_mag ? growth_streak + 1 : 0;
        if (growth_streak >= 3) throw SeriesDiverging(k);
        prev_term_mag = std::abs(term);
        sum += term;
    }
    return sum;
}

}  // namespace lehmer
