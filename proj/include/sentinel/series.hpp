#pragma once

#include <chrono>
#include <cstddef>
#include <string_view>
#include <vector>

namespace sentinel {

enum class MetricKind { DataDeliveryRate, ControlOverhead };

const char* to_string(MetricKind kind);
MetricKind metric_kind_from_string(std::string_view name);

// Uniformly sampled values of one network metric. Samples arrive once per
// observation window (2 minutes by default); the first `start_index_offset`
// bootstrap samples have already been removed, so index 0 is the first
// sample the detectors see.
struct MetricSeries {
    MetricKind kind = MetricKind::DataDeliveryRate;
    std::vector<double> values;
    std::chrono::seconds sample_interval{120};
    int start_index_offset = 15;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }

    // Checks the per-kind value ranges; throws on violation.
    void validate() const;
};

// Contiguous subseries over [from, to). Preserves kind and interval and
// advances start_index_offset so absolute sample positions stay recoverable.
MetricSeries slice(const MetricSeries& s, std::size_t from, std::size_t to);

// Drops the first `count` bootstrap samples.
MetricSeries discard_bootstrap(const MetricSeries& s, int count);

double sample_mean(const MetricSeries& s);

// Biased (divide-by-N) autocovariance at the given lag. Requires
// lag + 2 <= N so at least two products enter the sum.
double sample_autocovariance(const MetricSeries& s, std::size_t lag);

}  // namespace sentinel
