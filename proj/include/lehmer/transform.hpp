#pragma once

#include <span>
#include <vector>

#include "lehmer/sample.hpp"

namespace lehmer {

// Point on the extended real line; the infinite tags select the max/min
// branches of the transform.
class BreveMoment {
public:
    static BreveMoment neg_infinity() noexcept;
    static BreveMoment pos_infinity() noexcept;
    static BreveMoment finite(double s);       // rejects NaN and +-inf
    static BreveMoment from_double(double s);  // maps +-inf to the tags, rejects NaN

    bool is_finite() const noexcept;
    bool is_pos_infinity() const noexcept;
    bool is_neg_infinity() const noexcept;

    // Finite payload; +-inf for the infinite tags, so ordering works as-is.
    double value() const noexcept { return value_; }

    friend bool operator==(BreveMoment a, BreveMoment b) noexcept { return a.value_ == b.value_; }
    friend bool operator<(BreveMoment a, BreveMoment b) noexcept { return a.value_ < b.value_; }

private:
    explicit BreveMoment(double v) noexcept : value_(v) {}
    double value_;
};

enum class MonotonicityClass { Constant, StrictlyIncreasing };

double lehmer(const PositiveSample& h, BreveMoment s);
double lehmer(const PositiveSample& h, double s);

struct SpectrumPoint {
    BreveMoment s;
    double value;
};

std::vector<SpectrumPoint> lehmer_spectrum(const PositiveSample& h,
                                           std::span<const BreveMoment> grid);

// First derivative of the transform in s, via the pairwise-sum formula.
// Nonnegative everywhere; strictly positive when two values differ.
double lehmer_derivative(const PositiveSample& h, double s);

// order 1 is the analytic derivative; order >= 2 uses Richardson-extrapolated
// central differences of the analytic first derivative.
double lehmer_nth_derivative(const PositiveSample& h, double s, int order);

// Diagnostic route for the first derivative: L(s) * d/ds log L(s) with the
// log-derivative taken by central differences. Independent of the pairwise
// formula; useful as a cross-check only.
double lehmer_derivative_via_log(const PositiveSample& h, double s);

MonotonicityClass monotonicity_class(const PositiveSample& h);

}  // namespace lehmer
