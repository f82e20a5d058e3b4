#include "sentinel/monitor.hpp"

#include <algorithm>
#include <cmath>

#include "sentinel/errors.hpp"

namespace sentinel {

namespace {

double mean_of(std::span<const double> xs) {
    double sum = 0.0;
    for (double v : xs) sum += v;
    return sum / static_cast<double>(xs.size());
}

double change_magnitude(const MetricSeries& s, std::size_t cp) {
    const std::size_t n = s.values.size();
    const std::size_t w = std::min({std::size_t{20}, cp, n - cp});
    if (w == 0) return 0.0;
    const std::span<const double> values(s.values);
    return mean_of(values.subspan(cp, w)) - mean_of(values.subspan(cp - w, w));
}

}  // namespace

const char* to_string(Direction d) {
    return d == Direction::Up ? "up" : "down";
}

const char* to_string(AttackHint h) {
    switch (h) {
        case AttackHint::FdffLike: return "fdff_like";
        case AttackHint::FniLike: return "fni_like";
        default: return "unknown";
    }
}

std::vector<ChangeEvent> run_monitor(const MetricSeries& s, const MonitorConfig& cfg,
                                     const CriticalValueTable& critical_values) {
    const std::size_t n = s.values.size();
    if (n < cfg.min_training + 1)
        throw insufficient_data_error("series shorter than min_training + 1");

    OnlineConfig online_cfg;
    online_cfg.gamma = cfg.gamma;
    online_cfg.alpha = cfg.alpha;
    online_cfg.min_training = cfg.min_training;
    online_cfg.lrv = cfg.lrv;
    online_cfg = resolve_critical_value(online_cfg, critical_values);

    std::vector<ChangeEvent> events;
    std::size_t monitor_start = cfg.min_training;

    while (monitor_start < n) {
        // Step 2: offline pretest over the history, trim training to the
        // most recent change point. A history too short or too flat for the
        // pretest simply skips the trimming; train() re-checks what matters.
        std::size_t train_begin = 0;
        try {
            const OfflineTestResult pretest =
                offline_test(slice(s, 0, monitor_start), cfg.lrv, cfg.alpha, critical_values);
            if (pretest.reject_h0) {
                const std::size_t cp_last = *pretest.cp_index;
                if (monitor_start - cp_last >= cfg.min_training) {
                    train_begin = cp_last;
                } else if (cp_last + cfg.min_training < n) {
                    // Remainder too short: consume samples into training
                    // until it reaches the minimum.
                    train_begin = cp_last;
                    monitor_start = cp_last + cfg.min_training;
                } else {
                    // No room left to retrain past the CP.
                    break;
                }
            }
        } catch (const degenerate_variance_error&) {
        } catch (const insufficient_data_error&) {
        }

        // Step 3: sequential monitoring over (monitor_start, monitor_start + K'].
        const std::size_t window = std::min(cfg.horizon, n - monitor_start);
        OnlineConfig window_cfg = online_cfg;
        window_cfg.horizon = window;
        OnlineMonitorState state;
        try {
            state = train(slice(s, train_begin, monitor_start), window_cfg);
        } catch (const degenerate_variance_error&) {
            // Constant history: nothing to test against yet, move the window
            // forward and retry once more data is in.
            monitor_start += window;
            continue;
        }

        bool detected = false;
        std::size_t k_star = 0;
        for (std::size_t k = 1; k <= window; ++k) {
            auto [next, decision] = step(state, s.values[monitor_start + k - 1], window_cfg);
            state = next;
            if (decision.detected) {
                detected = true;
                k_star = decision.k_star;
                break;
            }
        }

        if (!detected) {
            monitor_start += window;  // Step 5, no CP: tile to the next window
            continue;
        }

        // Step 4: direction from the trend indicator at the detection index.
        const std::size_t cp_abs = monitor_start + k_star - 1;
        const double ti =
            trend_indicator(std::span<const double>(s.values).subspan(0, cp_abs + 1), cp_abs,
                            cfg.macd);
        ChangeEvent event;
        event.cp_index = cp_abs;
        event.direction = ti > 0.0 ? Direction::Up : Direction::Down;
        event.metric = s.kind;
        event.detection_delay = k_star;
        event.magnitude = change_magnitude(s, cp_abs);
        events.push_back(event);

        // Step 5: restart after the CP plus the quiet period. Always move
        // past the detected sample so the loop advances even with d = 0.
        monitor_start = cp_abs + std::max<std::size_t>(cfg.quiet_period, 1);
    }

    return events;
}

AttackHint classify_attack_hint(const std::map<MetricKind, std::vector<ChangeEvent>>& events) {
    bool found = false;
    std::size_t best_index = 0;
    MetricKind best_metric = MetricKind::DataDeliveryRate;
    bool tie = false;
    for (const auto& [metric, list] : events) {
        for (const ChangeEvent& e : list) {
            if (!found || e.cp_index < best_index) {
                found = true;
                best_index = e.cp_index;
                best_metric = e.metric;
                tie = false;
            } else if (e.cp_index == best_index && e.metric != best_metric) {
                tie = true;
            }
        }
    }
    if (!found || tie) return AttackHint::Unknown;
    return best_metric == MetricKind::ControlOverhead ? AttackHint::FdffLike
                                                      : AttackHint::FniLike;
}

}  // namespace sentinel
