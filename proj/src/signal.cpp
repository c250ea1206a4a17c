#include "lehmer/signal.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace lehmer {

namespace {

PositiveSample positive_window(std::span<const double> slice,
                               const NormalizationPipeline& pipeline) {
    std::vector<double> values(slice.begin(), slice.end());
    if (pipeline.empty()) return PositiveSample::from_values(std::move(values));
    return PositiveSample::from_values(pipeline.apply(values));
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values, std::optional<std::vector<double>> timestamps,
                       std::optional<double> sample_rate)
    : values_(std::move(values)), timestamps_(std::move(timestamps)), sample_rate_(sample_rate) {
    if (values_.empty()) throw std::invalid_argument("time series must contain at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw std::invalid_argument("time series value at index " + std::to_string(i) +
                                        " is not finite");
    if (timestamps_) {
        if (timestamps_->size() != values_.size())
            throw std::invalid_argument("timestamp count must match value count");
        for (std::size_t i = 0; i < timestamps_->size(); ++i) {
            if (!std::isfinite((*timestamps_)[i]))
                throw std::invalid_argument("timestamp at index " + std::to_string(i) +
                                            " is not finite");
            if (i > 0 && !((*timestamps_)[i] > (*timestamps_)[i - 1]))
                throw std::invalid_argument("timestamps must be strictly increasing");
        }
    }
    if (sample_rate_ && !(*sample_rate_ > 0.0 && std::isfinite(*sample_rate_)))
        throw std::invalid_argument("sample rate must be positive");
}

std::vector<Sample> sliding_windows(const TimeSeries& ts, const WindowPlan& plan) {
    if (plan.width < 2) throw std::invalid_argument("window width must be >= 2");
    if (plan.hop < 1) throw std::invalid_argument("window hop must be >= 1");
    const std::size_t n = ts.size();
    const std::size_t width = static_cast<std::size_t>(plan.width);
    if (n < width) throw SeriesTooShort(n, width);

    const std::size_t hop = static_cast<std::size_t>(plan.hop);
    const std::size_t count = (n - width) / hop + 1;
    std::vector<Sample> windows;
    windows.reserve(count);
    const auto& values = ts.values();
    for (std::size_t w = 0; w < count; ++w) {
        const auto begin = values.begin() + static_cast<std::ptrdiff_t>(w * hop);
        windows.emplace_back(std::vector<double>(begin, begin + plan.width));
    }
    return windows;
}

BreveSpectrogram::BreveSpectrogram(std::vector<std::size_t> window_starts,
                                   std::vector<BreveMoment> s_grid, std::vector<double> values)
    : window_starts_(std::move(window_starts)),
      s_grid_(std::move(s_grid)),
      values_(std::move(values)) {}

BreveSpectrogram breve_spectrogram(const TimeSeries& ts, const WindowPlan& plan,
                                   const NormalizationPipeline& pipeline,
                                   std::span<const BreveMoment> grid, unsigned threads) {
    if (plan.width < 2) throw std::invalid_argument("window width must be >= 2");
    if (plan.hop < 1) throw std::invalid_argument("window hop must be >= 1");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] < grid[i - 1]) throw GridNotSorted(i);
    const std::size_t n = ts.size();
    const std::size_t width = static_cast<std::size_t>(plan.width);
    if (n < width) throw SeriesTooShort(n, width);

    const std::size_t hop = static_cast<std::size_t>(plan.hop);
    const std::size_t rows = (n - width) / hop + 1;
    const std::size_t cols = grid.size();

    std::vector<std::size_t> starts(rows);
    for (std::size_t w = 0; w < rows; ++w) starts[w] = w * hop;

    std::vector<double> values(rows * cols);
    const std::span<const double> series(ts.values());

    const auto fill_row = [&](std::size_t w) {
        PositiveSample h = [&] {
            try {
                return positive_window(series.subspan(starts[w], width), pipeline);
            } catch (const DomainError& e) {
                throw PipelineYieldsNonPositive("window " + std::to_string(w) + " (start " +
                                                std::to_string(starts[w]) + "): " + e.what());
            }
        }();
        for (std::size_t j = 0; j < cols; ++j) values[w * cols + j] = lehmer(h, grid[j]);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));

    if (threads <= 1) {
        for (std::size_t w = 0; w < rows; ++w) fill_row(w);
    } else {
        std::mutex error_mutex;
        std::exception_ptr first_error;
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const std::size_t begin = rows * t / threads;
                const std::size_t end = rows * (t + 1) / threads;
                try {
                    for (std::size_t w = begin; w < end; ++w) fill_row(w);
                } catch (...) {
                    const std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) worker.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    return BreveSpectrogram(std::move(starts),
                            std::vector<BreveMoment>(grid.begin(), grid.end()), std::move(values));
}

std::vector<SpectrumPoint> breve_features(const Sample& sample,
                                          const NormalizationPipeline& pipeline) {
    const PositiveSample h = pipeline.empty()
                                 ? PositiveSample::from_values(
                                       std::vector<double>(sample.values().begin(),
                                                           sample.values().end()))
                                 : normalize(sample, pipeline);
    std::vector<BreveMoment> grid;
    grid.push_back(BreveMoment::neg_infinity());
    grid.push_back(BreveMoment::finite(0.0));
    if (sample.size() == 2) grid.push_back(BreveMoment::finite(0.5));
    grid.push_back(BreveMoment::finite(1.0));
    grid.push_back(BreveMoment::finite(2.0));
    grid.push_back(BreveMoment::pos_infinity());
    return lehmer_spectrum(h, grid);
}

}  // namespace lehmer
