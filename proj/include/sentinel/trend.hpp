#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sentinel/series.hpp"

namespace sentinel {

// Spans for the direction-of-change indicator (fast EMA, slow EMA, signal
// EMA over their difference). Defaults are the conventional 12/26/9.
struct MacdConfig {
    std::size_t short_span = 12;
    std::size_t long_span = 26;
    std::size_t signal_span = 9;

    void validate() const;
};

// Recursive EMA with smoothing factor 2/(span+1), seeded with the first
// sample.
std::vector<double> ema(std::span<const double> xs, std::size_t span);

// MACD histogram at index `at`: (ema_short - ema_long) minus its signal EMA.
// A positive value indicates an upward change, negative a downward one.
double trend_indicator(std::span<const double> xs, std::size_t at, const MacdConfig& cfg);
double trend_indicator(const MetricSeries& s, std::size_t at, const MacdConfig& cfg);

}  // namespace sentinel
