#pragma once

#include <cstddef>

#include "sentinel/series.hpp"

namespace sentinel {

// Bandwidth and floor settings for the Bartlett long-run variance estimator.
struct LrvConfig {
    enum class Bandwidth { FixedLag, Automatic };

    Bandwidth rule = Bandwidth::Automatic;
    std::size_t fixed_lag = 0;          // used when rule == FixedLag
    double min_variance_floor = 1e-12;  // below this the window counts as degenerate

    static LrvConfig fixed(std::size_t q);

    // Automatic rule: floor(N^(1/3)), the standard rate.
    std::size_t bandwidth_for(std::size_t n) const;

    void validate() const;
};

// Bartlett kernel estimate of the long-run variance:
//   omega = gamma(0) + 2 * sum_{s=1..q} (1 - s/(q+1)) * gamma(s)
// with biased autocovariances gamma(s). Throws degenerate_variance_error when
// the sample variance is at or below the floor; otherwise the result is
// clamped from below by the floor.
double bartlett_lrv(const MetricSeries& s, const LrvConfig& cfg);

}  // namespace sentinel
