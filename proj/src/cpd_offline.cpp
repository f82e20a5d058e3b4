#include "sentinel/cpd_offline.hpp"

#include <cmath>
#include <stdexcept>

#include "sentinel/errors.hpp"

namespace sentinel {

namespace {

constexpr std::size_t kMinOfflineWindow = 20;

OfflineTestResult scan(const MetricSeries& s, double omega, double critical_value) {
    const std::vector<double> path = cusum_path(s);
    const std::size_t n = path.size();

    double best = -1.0;
    std::size_t best_n = 0;  // 1-based position of the maximum
    for (std::size_t i = 0; i < n; ++i) {
        const double stat = path[i] * path[i] / omega;
        if (stat > best) {
            best = stat;
            best_n = i + 1;
        }
    }

    OfflineTestResult result;
    result.statistic = best;
    result.critical_value = critical_value;
    result.reject_h0 = best >= critical_value;
    if (result.reject_h0) {
        result.cp_index = best_n;
        result.cp_fraction = static_cast<double>(best_n) / static_cast<double>(n);
    }
    return result;
}

}  // namespace

std::vector<double> cusum_path(const MetricSeries& s) {
    const std::size_t n = s.values.size();
    if (n < 2) throw insufficient_data_error("CUSUM path needs at least 2 samples");

    double total = 0.0;
    for (double v : s.values) total += v;

    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> path(n);
    double prefix = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        prefix += s.values[i];
        const double share = static_cast<double>(i + 1) / static_cast<double>(n);
        path[i] = inv_sqrt_n * (prefix - share * total);
    }
    path[n - 1] = 0.0;  // telescoping; forces exactness against rounding
    return path;
}

OfflineTestResult offline_test(const MetricSeries& s, const LrvConfig& lrv, double alpha,
                               const CriticalValueTable& critical_values) {
    if (s.values.size() < kMinOfflineWindow)
        throw insufficient_data_error("offline test needs at least 20 samples");
    const double omega = bartlett_lrv(s, lrv);
    return scan(s, omega, critical_values.offline_value(alpha));
}

OfflineTestResult offline_test_with_lrv(const MetricSeries& s, double long_run_variance,
                                        double critical_value) {
    if (long_run_variance <= 0.0)
        throw degenerate_variance_error("long-run variance must be positive");
    return scan(s, long_run_variance, critical_value);
}

}  // namespace sentinel
