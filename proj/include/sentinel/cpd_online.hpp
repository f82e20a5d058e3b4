#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "sentinel/critical_values.hpp"
#include "sentinel/lrv.hpp"
#include "sentinel/series.hpp"

namespace sentinel {

// Settings for the sequential detector. `critical_value` is the tabulated
// constant for (alpha, gamma); resolve it once via resolve_critical_value.
struct OnlineConfig {
    double gamma = 0.0;              // threshold sensitivity, in [0, 0.5)
    double alpha = 0.95;             // confidence level
    std::size_t horizon = 100;       // K, monitoring length in samples
    std::size_t min_training = 250;  // minimum m
    LrvConfig lrv;
    double critical_value = 0.0;

    void validate() const;
};

OnlineConfig resolve_critical_value(OnlineConfig cfg, const CriticalValueTable& table);

// Training summary plus running detector state. Updated functionally: step()
// returns the successor state.
struct OnlineMonitorState {
    std::size_t m = 0;          // training length
    double train_sum = 0.0;
    double omega_hat = 0.0;     // long-run scale (sqrt of the Bartlett estimate)
    std::size_t k = 0;          // monitored samples consumed
    double detector_value = 0.0;
    double monitor_sum = 0.0;
    std::optional<std::size_t> stopped_at;  // k*, terminal once set
};

struct OnlineDecision {
    bool detected = false;
    std::size_t k_star = 0;
};

// Threshold weight g_gamma(m, k) = sqrt(m) (1 + k/m) (k/(k+m))^gamma.
double weight(std::size_t m, std::size_t k, double gamma);

// Estimates the training summary on the whole given series.
OnlineMonitorState train(const MetricSeries& training, const OnlineConfig& cfg);

// Builds a state from externally supplied training figures (tests and
// cross-checks).
OnlineMonitorState make_trained_state(std::size_t m, double train_sum, double omega_hat);

// Feeds one monitored sample. Detects when |Gamma(m,k)| >= c * g_gamma(m,k);
// the first crossing is terminal.
std::pair<OnlineMonitorState, OnlineDecision> step(const OnlineMonitorState& state, double x,
                                                   const OnlineConfig& cfg);

}  // namespace sentinel
