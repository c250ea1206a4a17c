#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lehmer/errors.hpp"

namespace lehmer {

// Raw finite observations, the input to every pipeline.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

enum class StepKind {
    AbsShift,              // |x| + eps
    AffineToUnitInterval,  // (x - min)/(max - min) + eps
    ScaleToMax,            // x * target / max
    Softplus,              // ln(1 + e^x)
    ExpMap,                // e^x
    AffineShiftMin,        // x - min + eps
};

struct NormalizationStep {
    StepKind kind;
    double param = 0.0;  // eps or target; unused for Softplus/ExpMap
};

NormalizationStep abs_shift(double eps);
NormalizationStep affine_to_unit_interval(double eps);
NormalizationStep scale_to_max(double target);
NormalizationStep softplus();
NormalizationStep exp_map();
NormalizationStep affine_shift_min(double eps);

// Ordered composition of steps mapping a raw sample to positive values.
// Positivity is checked when the pipeline is applied, not statically.
class NormalizationPipeline {
public:
    NormalizationPipeline() = default;
    explicit NormalizationPipeline(std::vector<NormalizationStep> steps);

    const std::vector<NormalizationStep>& steps() const noexcept { return steps_; }
    bool empty() const noexcept { return steps_.empty(); }

    // Runs the steps in order. Finiteness is enforced per step; the final
    // positivity check is normalize()'s job.
    std::vector<double> apply(std::span<const double> values) const;

private:
    std::vector<NormalizationStep> steps_;
};

// Strictly positive sample with cached logs and extremes. Values are stored
// ascending, so evaluation is invariant under permutations of the input.
class PositiveSample {
public:
    static PositiveSample from_values(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> log_values() const noexcept { return log_values_; }
    std::size_t size() const noexcept { return values_.size(); }

    double min_value() const noexcept { return values_.front(); }
    double max_value() const noexcept { return values_.back(); }
    double log_min() const noexcept { return log_values_.front(); }
    double log_max() const noexcept { return log_values_.back(); }

private:
    explicit PositiveSample(std::vector<double> sorted_values);

    std::vector<double> values_;
    std::vector<double> log_values_;
};

PositiveSample normalize(const Sample& sample, const NormalizationPipeline& pipeline);

}  // namespace lehmer
