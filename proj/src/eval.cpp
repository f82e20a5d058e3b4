#include "sentinel/eval.hpp"

#include <algorithm>
#include <cmath>

#include "sentinel/errors.hpp"

namespace sentinel {

Classification classify_replication(std::span<const ChangeEvent> events,
                                    std::optional<std::size_t> onset) {
    Classification result;
    if (events.empty()) {
        result.outcome = ReplicationOutcome::FalseNegative;
        return result;
    }
    const ChangeEvent* earliest = &events.front();
    for (const ChangeEvent& e : events)
        if (e.cp_index < earliest->cp_index) earliest = &e;

    if (!onset || earliest->cp_index < *onset) {
        result.outcome = ReplicationOutcome::FalsePositive;
        return result;
    }
    result.outcome = ReplicationOutcome::TruePositive;
    result.delay = earliest->cp_index - *onset;
    return result;
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw insufficient_data_error("median of empty list");
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n % 2 == 1) return xs[n / 2];
    return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double mad(std::vector<double> xs) {
    const double med = median(xs);
    for (double& x : xs) x = std::abs(x - med);
    return median(std::move(xs));
}

int EvalCell::dr_pct() const { return static_cast<int>(std::lround(dr)); }
int EvalCell::fpr_pct() const { return static_cast<int>(std::lround(fpr)); }
int EvalCell::fnr_pct() const { return static_cast<int>(std::lround(fnr)); }

std::vector<EvalCell> aggregate(
    const std::map<EvalCellKey, std::vector<Classification>>& by_cell) {
    std::vector<EvalCell> cells;
    cells.reserve(by_cell.size());
    for (const auto& [key, classifications] : by_cell) {
        if (classifications.empty()) continue;
        EvalCell cell;
        cell.metric = key.metric;
        cell.horizon = key.horizon;
        cell.alpha = key.alpha_permille / 1000.0;
        cell.n_replications = classifications.size();

        std::size_t tp = 0, fp = 0, fn = 0;
        std::vector<double> delays;
        for (const Classification& c : classifications) {
            switch (c.outcome) {
                case ReplicationOutcome::TruePositive:
                    ++tp;
                    delays.push_back(static_cast<double>(*c.delay));
                    break;
                case ReplicationOutcome::FalsePositive: ++fp; break;
                case ReplicationOutcome::FalseNegative: ++fn; break;
            }
        }
        const double total = static_cast<double>(classifications.size());
        cell.dr = 100.0 * static_cast<double>(tp) / total;
        cell.fpr = 100.0 * static_cast<double>(fp) / total;
        cell.fnr = 100.0 * static_cast<double>(fn) / total;
        if (!delays.empty()) {
            cell.dtm = median(delays);
            cell.mad = mad(delays);
        }
        cells.push_back(cell);
    }
    return cells;
}

}  // namespace sentinel
