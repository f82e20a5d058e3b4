#include "sentinel/series.hpp"

#include <stdexcept>
#include <string>

#include "sentinel/errors.hpp"

namespace sentinel {

const char* to_string(MetricKind kind) {
    return kind == MetricKind::DataDeliveryRate ? "delivery_rate" : "control_overhead";
}

MetricKind metric_kind_from_string(std::string_view name) {
    if (name == "delivery_rate") return MetricKind::DataDeliveryRate;
    if (name == "control_overhead") return MetricKind::ControlOverhead;
    throw std::invalid_argument("unknown metric kind: " + std::string(name));
}

void MetricSeries::validate() const {
    if (values.empty()) throw insufficient_data_error("metric series is empty");
    if (kind == MetricKind::DataDeliveryRate) {
        for (double v : values)
            if (v < 0.0 || v > 1.0)
                throw std::invalid_argument("delivery rate sample outside [0, 1]");
    } else {
        for (double v : values)
            if (v < 0.0) throw std::invalid_argument("negative control overhead sample");
    }
}

MetricSeries slice(const MetricSeries& s, std::size_t from, std::size_t to) {
    if (from >= to || to > s.values.size())
        throw std::out_of_range("slice range [" + std::to_string(from) + ", " +
                                std::to_string(to) + ") invalid for series of length " +
                                std::to_string(s.values.size()));
    MetricSeries out;
    out.kind = s.kind;
    out.sample_interval = s.sample_interval;
    out.start_index_offset = s.start_index_offset + static_cast<int>(from);
    out.values.assign(s.values.begin() + static_cast<std::ptrdiff_t>(from),
                      s.values.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
}

MetricSeries discard_bootstrap(const MetricSeries& s, int count) {
    if (count < 0) throw std::invalid_argument("bootstrap discard count must be >= 0");
    if (static_cast<std::size_t>(count) >= s.values.size())
        throw insufficient_data_error("bootstrap discard would empty the series");
    if (count == 0) return s;
    return slice(s, static_cast<std::size_t>(count), s.values.size());
}

double sample_mean(const MetricSeries& s) {
    if (s.values.empty()) throw insufficient_data_error("mean of empty series");
    double sum = 0.0;
    for (double v : s.values) sum += v;
    return sum / static_cast<double>(s.values.size());
}

double sample_autocovariance(const MetricSeries& s, std::size_t lag) {
    const std::size_t n = s.values.size();
    if (lag + 2 > n)
        throw std::out_of_range("autocovariance lag " + std::to_string(lag) +
                                " too large for series of length " + std::to_string(n));
    const double mean = sample_mean(s);
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i)
        acc += (s.values[i] - mean) * (s.values[i + lag] - mean);
    return acc / static_cast<double>(n);
}

}  // namespace sentinel
