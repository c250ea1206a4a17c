#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lehmer/sample.hpp"
#include "lehmer/transform.hpp"

namespace lehmer {

class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values,
                        std::optional<std::vector<double>> timestamps = std::nullopt,
                        std::optional<double> sample_rate = std::nullopt);

    const std::vector<double>& values() const noexcept { return values_; }
    const std::optional<std::vector<double>>& timestamps() const noexcept { return timestamps_; }
    std::optional<double> sample_rate() const noexcept { return sample_rate_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
    std::optional<std::vector<double>> timestamps_;
    std::optional<double> sample_rate_;
};

enum class PadMode { None, DropPartial };

struct WindowPlan {
    int width;  // >= 2, in samples
    int hop;    // >= 1, in samples
    PadMode pad = PadMode::DropPartial;
};

// Contiguous slices at offsets 0, hop, 2*hop, ...; trailing partial windows
// are dropped, so count = floor((n - width)/hop) + 1.
std::vector<Sample> sliding_windows(const TimeSeries& ts, const WindowPlan& plan);

// windows x grid matrix of transform values, each window normalized
// independently so a row spans its own order statistics.
class BreveSpectrogram {
public:
    BreveSpectrogram(std::vector<std::size_t> window_starts, std::vector<BreveMoment> s_grid,
                     std::vector<double> values);

    const std::vector<std::size_t>& window_starts() const noexcept { return window_starts_; }
    const std::vector<BreveMoment>& s_grid() const noexcept { return s_grid_; }
    std::size_t rows() const noexcept { return window_starts_.size(); }
    std::size_t cols() const noexcept { return s_grid_.size(); }
    double value(std::size_t window, std::size_t j) const { return values_[window * cols() + j]; }
    const std::vector<double>& raw_values() const noexcept { return values_; }

private:
    std::vector<std::size_t> window_starts_;
    std::vector<BreveMoment> s_grid_;
    std::vector<double> values_;  // row-major
};

// An empty pipeline means identity pass-through: the window must already be
// strictly positive. threads = 0 uses the hardware count; rows are written
// to pre-assigned slots, so output is identical for any thread count.
BreveSpectrogram breve_spectrogram(const TimeSeries& ts, const WindowPlan& plan,
                                   const NormalizationPipeline& pipeline,
                                   std::span<const BreveMoment> grid, unsigned threads = 1);

// Canonical moments [L(-inf), L(0), L(1), L(2), L(+inf)] of the normalized
// sample; the geometric point s = 1/2 is included only for n = 2.
std::vector<SpectrumPoint> breve_features(const Sample& sample,
                                          const NormalizationPipeline& pipeline);

}  // namespace lehmer
