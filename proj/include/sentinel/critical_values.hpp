#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sentinel {

// Monte-Carlo settings for critical-value simulation. Paths are seeded
// individually from `seed`, so results do not depend on thread count.
struct McParams {
    std::size_t paths = 100000;
    std::size_t grid = 1000;
    std::uint64_t seed = 0x5eedc0de;

    void validate() const;
};

// Quantile tables for both test families, keyed on integer permille so
// lookups never compare floating point for equality.
//  - offline: alpha-quantile of sup_{t in [0,1]} B(t)^2, B a Brownian bridge
//  - online:  alpha-quantile of sup_{t in (0,1]} |W(t)| / t^gamma, W a Wiener
//    process (two-sided, matching the |detector| stopping rule)
class CriticalValueTable {
public:
    static int permille(double x);

    void set_offline(double alpha, double value);
    void set_online(double alpha, double gamma, double value);

    double offline_value(double alpha) const;
    double online_value(double alpha, double gamma) const;
    bool has_offline(double alpha) const;
    bool has_online(double alpha, double gamma) const;

    struct Row {
        double alpha;
        std::optional<double> gamma;  // empty for offline rows
        double value;
    };
    std::vector<Row> rows() const;

private:
    std::map<int, double> offline_;
    std::map<std::pair<int, int>, double> online_;
};

// Simulates both suprema from shared Wiener paths and returns empirical
// quantiles for every requested (alpha) and (alpha, gamma) pair.
// The parallel version uses OpenMP when available; the serial one is the
// reference implementation and must produce bit-identical tables.
CriticalValueTable simulate_critical_values(const McParams& params,
                                            std::span<const double> alphas,
                                            std::span<const double> gammas);
CriticalValueTable simulate_critical_values_serial(const McParams& params,
                                                   std::span<const double> alphas,
                                                   std::span<const double> gammas);

// Single-value convenience wrappers.
double offline_critical_value(double alpha, std::size_t mc_paths, std::size_t grid,
                              std::uint64_t seed = McParams{}.seed);
double online_critical_value(double alpha, double gamma, std::size_t mc_paths,
                             std::size_t grid, std::uint64_t seed = McParams{}.seed);

// Plain-text cache: header line "alpha,gamma,value", one row per entry,
// gamma column left blank for offline values.
void save_critical_values(const std::filesystem::path& file, const CriticalValueTable& table);
CriticalValueTable load_critical_values(const std::filesystem::path& file);

// Loads the cache if present and complete for the requested levels,
// otherwise simulates the missing entries and rewrites the file.
CriticalValueTable load_or_create_critical_values(const std::filesystem::path& file,
                                                  std::span<const double> alphas,
                                                  std::span<const double> gammas,
                                                  const McParams& params = {});

}  // namespace sentinel
