#include "sentinel/lrv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sentinel/errors.hpp"

namespace sentinel {

LrvConfig LrvConfig::fixed(std::size_t q) {
    LrvConfig cfg;
    cfg.rule = Bandwidth::FixedLag;
    cfg.fixed_lag = q;
    return cfg;
}

std::size_t LrvConfig::bandwidth_for(std::size_t n) const {
    if (rule == Bandwidth::FixedLag) return fixed_lag;
    return static_cast<std::size_t>(std::cbrt(static_cast<double>(n)));
}

void LrvConfig::validate() const {
    if (min_variance_floor <= 0.0)
        throw std::invalid_argument("min_variance_floor must be positive");
}

double bartlett_lrv(const MetricSeries& s, const LrvConfig& cfg) {
    cfg.validate();
    const std::size_t n = s.values.size();
    if (n < 4) throw insufficient_data_error("Bartlett estimator needs at least 4 samples");

    const double gamma0 = sample_autocovariance(s, 0);
    if (gamma0 <= cfg.min_variance_floor)
        throw degenerate_variance_error("window has (numerically) zero variance");

    // Autocovariances are only defined up to lag N-2 here.
    const std::size_t q = std::min(cfg.bandwidth_for(n), n - 2);
    double omega = gamma0;
    for (std::size_t lag = 1; lag <= q; ++lag) {
        const double w = 1.0 - static_cast<double>(lag) / static_cast<double>(q + 1);
        omega += 2.0 * w * sample_autocovariance(s, lag);
    }
    return std::max(omega, cfg.min_variance_floor);
}

}  // namespace sentinel
