#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lehmer/transform.hpp"

namespace lehmer {

struct BreveParams {
    double alpha;  // in (0, 1]
    double beta;   // > 0
    BreveParams(double alpha_, double beta_);
};

// Principal branch of w * e^w = x, for x >= -1/e. Halley iteration; the
// residual |w e^w - x| is driven to ~1e-15 * max(1, |x|).
double lambert_w0(double x);

// Linear family a + b * L(s), normalized so the endpoints hit 0 and 1.
struct LinearFamilyCoeffs {
    double a;
    double b;
};

LinearFamilyCoeffs linear_cdf_coeffs(const PositiveSample& h);
double empirical_cdf(const PositiveSample& h, const LinearFamilyCoeffs& c, BreveMoment s);
double empirical_pdf(const PositiveSample& h, const LinearFamilyCoeffs& c, double s);

// Endpoint targets of the nonlinear families.
double breve_upper_target(const BreveParams& p);      // W0(a*b) / (a*b)
double log_breve_upper_target(const BreveParams& p);  // exp of the above

// Affine rescale so max -> W0(ab)/(ab) and min -> eps * that target. The
// exact lower endpoint 0 is unreachable for a strictly positive sample, so
// the residual lower-tail mass is of order (eps * target)^(1/alpha).
PositiveSample breve_normalize(const PositiveSample& h, const BreveParams& p, double eps = 1e-9);

double breve_cdf(const PositiveSample& hn, const BreveParams& p, BreveMoment s);
double breve_pdf(const PositiveSample& hn, const BreveParams& p, double s);

// Extreme points of the Breve density: sign changes of its numeric
// derivative over the grid, refined by bisection to 1e-8.
std::vector<double> find_modes(const PositiveSample& hn, const BreveParams& p,
                               std::span<const double> s_grid);

// Affine rescale so max -> exp(W0(ab)/(ab)) and min -> 1 exactly.
PositiveSample log_breve_normalize(const PositiveSample& h, const BreveParams& p);

// Closed-form Log-Breve normalizer C(alpha, beta).
double log_breve_normalizer(const BreveParams& p);

double log_breve_pdf(const PositiveSample& hn, const BreveParams& p, double s);

// CDF coefficients of the nonlinear family a + b * G(L(s)) with
// G(x) = x^(1/alpha) e^(beta x); valid for any strictly increasing sample.
struct NonlinearCoeffs {
    double a;
    double b;
};

NonlinearCoeffs nonlinear_coeffs(const PositiveSample& h, const BreveParams& p);

// G evaluated in the log domain; shared by the nonlinear family and tests.
double nonlinear_g(double x, const BreveParams& p);

struct DensityCurve {
    std::vector<double> grid;      // ascending s values
    std::vector<double> density;   // nonnegative
    double mass;                   // trapezoid integral over the grid
};

DensityCurve density_curve(std::span<const double> grid, const std::function<double(double)>& pdf);

}  // namespace lehmer
