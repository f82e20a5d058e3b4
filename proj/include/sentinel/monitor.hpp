#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sentinel/cpd_offline.hpp"
#include "sentinel/cpd_online.hpp"
#include "sentinel/critical_values.hpp"
#include "sentinel/series.hpp"
#include "sentinel/trend.hpp"

namespace sentinel {

enum class Direction { Up, Down };

const char* to_string(Direction d);

struct ChangeEvent {
    std::size_t cp_index = 0;         // absolute index in the monitored series
    Direction direction = Direction::Up;
    MetricKind metric = MetricKind::DataDeliveryRate;
    std::size_t detection_delay = 0;  // k* for online detections
    double magnitude = 0.0;           // mean after minus mean before
};

struct MonitorConfig {
    std::size_t horizon = 100;       // K
    double alpha = 0.95;
    double gamma = 0.0;
    std::size_t quiet_period = 10;   // d, samples assumed change-free after a CP
    std::size_t min_training = 250;
    MacdConfig macd;
    LrvConfig lrv;
};

// Runs the full detection loop over one metric stream:
//   1. place a monitoring window after the current history,
//   2. offline-test the history and trim training to the last CP,
//   3. monitor sequentially until detection or window end,
//   4. label detected changes with the trend indicator,
//   5. restart after the CP plus a quiet period (or tile to the next window)
// until the series is exhausted. Events come back ordered by cp_index.
std::vector<ChangeEvent> run_monitor(const MetricSeries& s, const MonitorConfig& cfg,
                                     const CriticalValueTable& critical_values);

enum class AttackHint { FdffLike, FniLike, Unknown };

const char* to_string(AttackHint h);

// The metric that reacts first hints at the attack type: control overhead
// first points to request flooding, delivery rate first to misrouting.
AttackHint classify_attack_hint(const std::map<MetricKind, std::vector<ChangeEvent>>& events);

}  // namespace sentinel
