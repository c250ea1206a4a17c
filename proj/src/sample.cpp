#include "lehmer/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lehmer {

namespace {

void require_positive_param(double value, const char* name) {
    if (!(std::isfinite(value) && value > 0.0))
        throw std::invalid_argument(std::string(name) + " must be a positive finite real");
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("sample must contain at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw std::invalid_argument("sample value at index " + std::to_string(i) +
                                        " is not finite");
    }
}

NormalizationStep abs_shift(double eps) {
    require_positive_param(eps, "abs-shift eps");
    return {StepKind::AbsShift, eps};
}

NormalizationStep affine_to_unit_interval(double eps) {
    require_positive_param(eps, "affine-unit eps");
    return {StepKind::AffineToUnitInterval, eps};
}

NormalizationStep scale_to_max(double target) {
    require_positive_param(target, "scale-max target");
    return {StepKind::ScaleToMax, target};
}

NormalizationStep softplus() { return {StepKind::Softplus, 0.0}; }

NormalizationStep exp_map() { return {StepKind::ExpMap, 0.0}; }

NormalizationStep affine_shift_min(double eps) {
    require_positive_param(eps, "shift-min eps");
    return {StepKind::AffineShiftMin, eps};
}

NormalizationPipeline::NormalizationPipeline(std::vector<NormalizationStep> steps)
    : steps_(std::move(steps)) {
    for (const auto& step : steps_) {
        switch (step.kind) {
            case StepKind::AbsShift:
            case StepKind::AffineToUnitInterval:
            case StepKind::AffineShiftMin:
                require_positive_param(step.param, "step eps");
                break;
            case StepKind::ScaleToMax:
                require_positive_param(step.param, "scale-max target");
                break;
            case StepKind::Softplus:
            case StepKind::ExpMap:
                break;
        }
    }
}

std::vector<double> NormalizationPipeline::apply(std::span<const double> values) const {
    std::vector<double> out(values.begin(), values.end());
    for (std::size_t si = 0; si < steps_.size(); ++si) {
        const auto& step = steps_[si];
        switch (step.kind) {
            case StepKind::AbsShift:
                for (double& v : out) v = std::abs(v) + step.param;
                break;
            case StepKind::AffineToUnitInterval: {
                const auto [mn, mx] = std::minmax_element(out.begin(), out.end());
                const double lo = *mn, span = *mx - *mn;
                // Constant input has no scale; it collapses to eps.
                for (double& v : out) v = (span > 0.0 ? (v - lo) / span : 0.0) + step.param;
                break;
            }
            case StepKind::ScaleToMax: {
                const double mx = *std::max_element(out.begin(), out.end());
                const double factor = step.param / mx;
                for (double& v : out) v *= factor;
                break;
            }
            case StepKind::Softplus:
                for (double& v : out)
                    v = v > 0.0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v));
                break;
            case StepKind::ExpMap:
                for (double& v : out) v = std::exp(v);
                break;
            case StepKind::AffineShiftMin: {
                const double mn = *std::min_element(out.begin(), out.end());
                for (double& v : out) v = v - mn + step.param;
                break;
            }
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!std::isfinite(out[i]))
                throw PipelineYieldsNonPositive("step " + std::to_string(si) +
                                                " produced a non-finite value at index " +
                                                std::to_string(i));
        }
    }
    return out;
}

PositiveSample PositiveSample::from_values(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("sample must contain at least one value");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(std::isfinite(values[i]) && values[i] > 0.0))
            throw PipelineYieldsNonPositive("value at index " + std::to_string(i) + " is " +
                                            std::to_string(values[i]) +
                                            "; expected strictly positive finite");
    }
    std::sort(values.begin(), values.end());
    return PositiveSample(std::move(values));
}

PositiveSample::PositiveSample(std::vector<double> sorted_values)
    : values_(std::move(sorted_values)) {
    log_values_.reserve(values_.size());
    for (double v : values_) log_values_.push_back(std::log(v));
}

PositiveSample normalize(const Sample& sample, const NormalizationPipeline& pipeline) {
    if (pipeline.empty()) throw std::invalid_argument("normalization pipeline must be non-empty");
    return PositiveSample::from_values(pipeline.apply(sample.values()));
}

}  // namespace lehmer
