#include "sentinel/trend.hpp"

#include <stdexcept>
#include <string>

#include "sentinel/errors.hpp"

namespace sentinel {

void MacdConfig::validate() const {
    if (short_span == 0 || short_span >= long_span)
        throw std::invalid_argument("need 0 < short_span < long_span");
    if (signal_span == 0) throw std::invalid_argument("signal_span must be positive");
}

std::vector<double> ema(std::span<const double> xs, std::size_t span) {
    if (span == 0) throw std::invalid_argument("EMA span must be >= 1");
    if (xs.empty()) throw insufficient_data_error("EMA of empty series");
    const double factor = 2.0 / (static_cast<double>(span) + 1.0);
    std::vector<double> out(xs.size());
    out[0] = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i)
        out[i] = factor * xs[i] + (1.0 - factor) * out[i - 1];
    return out;
}

double trend_indicator(std::span<const double> xs, std::size_t at, const MacdConfig& cfg) {
    cfg.validate();
    if (at >= xs.size() || at < cfg.long_span)
        throw insufficient_data_error("trend indicator needs at least long_span history");

    const std::span<const double> prefix = xs.subspan(0, at + 1);
    const std::vector<double> fast = ema(prefix, cfg.short_span);
    const std::vector<double> slow = ema(prefix, cfg.long_span);
    std::vector<double> macd(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i) macd[i] = fast[i] - slow[i];
    const std::vector<double> signal = ema(macd, cfg.signal_span);
    return macd[at] - signal[at];
}

double trend_indicator(const MetricSeries& s, std::size_t at, const MacdConfig& cfg) {
    return trend_indicator(std::span<const double>(s.values), at, cfg);
}

}  // namespace sentinel
