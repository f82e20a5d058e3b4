#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sentinel/critical_values.hpp"
#include "sentinel/lrv.hpp"
#include "sentinel/series.hpp"

namespace sentinel {

// Retrospective max-type CUSUM test for a single mean change over a fixed
// window.
struct OfflineTestResult {
    double statistic = 0.0;       // M = max_n C_n^2 / omega
    double critical_value = 0.0;
    bool reject_h0 = false;
    // Number of pre-change samples, equivalently the 0-based index of the
    // first post-change sample. Present only when H0 is rejected.
    std::optional<std::size_t> cp_index;
    std::optional<double> cp_fraction;  // cp_index / N
};

// CUSUM path C_1..C_N with C_n = (sum_{i<=n} x_i - (n/N) sum_i x_i) / sqrt(N).
// The last entry is exactly zero by construction.
std::vector<double> cusum_path(const MetricSeries& s);

OfflineTestResult offline_test(const MetricSeries& s, const LrvConfig& lrv, double alpha,
                               const CriticalValueTable& critical_values);

// Variant with an externally supplied long-run variance and threshold,
// used for calibration checks against the plain statistic.
OfflineTestResult offline_test_with_lrv(const MetricSeries& s, double long_run_variance,
                                        double critical_value);

}  // namespace sentinel
