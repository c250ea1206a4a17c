#pragma once

#include "lehmer/transform.hpp"

namespace lehmer {

struct InversionResult {
    enum class Method { BisectionNewton, LagrangeSeries };

    BreveMoment moment;
    double residual;  // |L(moment) - target|
    int iterations;
    Method method;
};

// Maps a target statistic back to its breve moment. Targets equal to the
// sample extremes (or within 1e-15 relative of them) return the exact
// infinite branches; interior targets are solved by a doubling bracket,
// bisection to width 1e-3, then Newton polish with the analytic derivative.
InversionResult invert(const PositiveSample& h, double target, double tol = 1e-12);

// Truncated Lagrange inversion series around s0: the coefficient limits are
// realized by reverting the transform's Taylor expansion, whose derivatives
// are analytic moment sums. Valid only near s0 (the convergence radius is
// data-dependent); growth of the term magnitudes for three consecutive
// orders raises SeriesDiverging.
double invert_series(const PositiveSample& h, double target, double s0, int terms);

}  // namespace lehmer
