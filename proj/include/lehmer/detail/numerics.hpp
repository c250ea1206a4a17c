#pragma once

#include <span>

namespace lehmer::detail {

// ln sum_i exp(factor * (logs[i] - shift)). With shift chosen as the max (or
// min, for negative factors) every exponent is <= 0 and the sum stays in
// [1, n].
double log_sum_exp_shifted(std::span<const double> logs, double factor, double shift);

// ln(e^a - e^b) for a > b.
double log_sub_exp(double a, double b);

}  // namespace lehmer::detail
