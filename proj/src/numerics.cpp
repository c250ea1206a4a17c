#include "lehmer/detail/numerics.hpp"

#include <cassert>
#include <cmath>

namespace lehmer::detail {

double log_sum_exp_shifted(std::span<const double> logs, double factor, double shift) {
    double sum = 0.0;
    for (double lv : logs) sum += std::exp(factor * (lv - shift));
    return std::log(sum);
}

double log_sub_exp(double a, double b) {
    assert(a > b);
    return a + std::log1p(-std::exp(b - a));
}

}  // namespace lehmer::detail
