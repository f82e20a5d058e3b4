#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sentinel/monitor.hpp"
#include "sentinel/series.hpp"

namespace sentinel {

enum class ReplicationOutcome { TruePositive, FalsePositive, FalseNegative };

// Per-replication verdict from the earliest event only: an event before the
// attack onset is a false positive, one at or after it a true positive, and
// no event at all a false negative. A missing onset (no-attack run) makes
// every event a false positive.
struct Classification {
    ReplicationOutcome outcome = ReplicationOutcome::FalseNegative;
    std::optional<std::size_t> delay;  // samples from onset, true positives only
};

Classification classify_replication(std::span<const ChangeEvent> events,
                                    std::optional<std::size_t> onset);

// Median with the midpoint convention for even counts.
double median(std::vector<double> xs);

// Median absolute deviation: median(|x_i - median(x)|).
double mad(std::vector<double> xs);

struct EvalCellKey {
    MetricKind metric = MetricKind::DataDeliveryRate;
    std::size_t horizon = 0;  // K
    int alpha_permille = 0;

    auto operator<=>(const EvalCellKey&) const = default;
};

struct EvalCell {
    MetricKind metric = MetricKind::DataDeliveryRate;
    std::size_t horizon = 0;
    double alpha = 0.0;
    double dr = 0.0;   // percentages over replications
    double fpr = 0.0;
    double fnr = 0.0;
    std::optional<double> dtm;  // median detection delay, samples
    std::optional<double> mad;  // spread of those delays
    std::size_t n_replications = 0;

    int dr_pct() const;  // rounded for table rendering
    int fpr_pct() const;
    int fnr_pct() const;
};

// Aggregates per-replication classifications into one cell per
// (metric, K, alpha) combination, ordered by key.
std::vector<EvalCell> aggregate(
    const std::map<EvalCellKey, std::vector<Classification>>& by_cell);

}  // namespace sentinel
