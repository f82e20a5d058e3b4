#include "sentinel/cpd_online.hpp"

#include <cmath>
#include <stdexcept>

#include "sentinel/errors.hpp"

namespace sentinel {

void OnlineConfig::validate() const {
    if (gamma < 0.0 || gamma >= 0.5) throw std::invalid_argument("gamma must be in [0, 0.5)");
    if (horizon == 0) throw std::invalid_argument("monitoring horizon K must be positive");
    if (min_training == 0) throw std::invalid_argument("min_training must be positive");
    lrv.validate();
}

OnlineConfig resolve_critical_value(OnlineConfig cfg, const CriticalValueTable& table) {
    cfg.critical_value = table.online_value(cfg.alpha, cfg.gamma);
    return cfg;
}

double weight(std::size_t m, std::size_t k, double gamma) {
    const double md = static_cast<double>(m);
    const double kd = static_cast<double>(k);
    const double base = std::sqrt(md) * (1.0 + kd / md);
    if (gamma == 0.0) return base;
    if (k == 0) return 0.0;
    return base * std::pow(kd / (kd + md), gamma);
}

OnlineMonitorState train(const MetricSeries& training, const OnlineConfig& cfg) {
    cfg.validate();
    const std::size_t m = training.values.size();
    if (m < cfg.min_training)
        throw insufficient_training_error("training slice has " + std::to_string(m) +
                                          " samples, need " + std::to_string(cfg.min_training));

    double sum = 0.0;
    for (double v : training.values) sum += v;

    // The detector normalises a partial sum, so the scale estimate is the
    // square root of the Bartlett long-run variance.
    const double omega_sq = bartlett_lrv(training, cfg.lrv);
    return make_trained_state(m, sum, std::sqrt(omega_sq));
}

OnlineMonitorState make_trained_state(std::size_t m, double train_sum, double omega_hat) {
    if (m == 0) throw insufficient_training_error("empty training window");
    if (omega_hat <= 0.0) throw degenerate_variance_error("omega_hat must be positive");
    OnlineMonitorState state;
    state.m = m;
    state.train_sum = train_sum;
    state.omega_hat = omega_hat;
    return state;
}

std::pair<OnlineMonitorState, OnlineDecision> step(const OnlineMonitorState& state, double x,
                                                   const OnlineConfig& cfg) {
    if (state.stopped_at) throw std::logic_error("step() on a stopped monitor");
    if (state.k + 1 > cfg.horizon) throw std::logic_error("monitoring horizon exhausted");
    if (cfg.critical_value <= 0.0)
        throw std::invalid_argument("critical value not resolved in OnlineConfig");

    OnlineMonitorState next = state;
    next.k = state.k + 1;
    next.monitor_sum = state.monitor_sum + x;

    const double md = static_cast<double>(next.m);
    const double kd = static_cast<double>(next.k);
    next.detector_value = (next.monitor_sum - (kd / md) * next.train_sum) / next.omega_hat;

    OnlineDecision decision;
    const double threshold = cfg.critical_value * weight(next.m, next.k, cfg.gamma);
    if (std::abs(next.detector_value) >= threshold) {
        next.stopped_at = next.k;
        decision.detected = true;
        decision.k_star = next.k;
    }
    return {next, decision};
}

}  // namespace sentinel
