#include "sentinel/critical_values.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sentinel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Exact conditional extremes of a Brownian bridge between (0, a) and (dt, b)
// with unit diffusion. Sampling the in-interval maximum and minimum removes
// the O(1/sqrt(grid)) discretisation bias of a pointwise supremum.
double bridge_max(double a, double b, double dt, double u) {
    const double d = b - a;
    return 0.5 * (a + b + std::sqrt(d * d - 2.0 * dt * std::log(u)));
}

double bridge_min(double a, double b, double dt, double u) {
    const double d = b - a;
    return 0.5 * (a + b - std::sqrt(d * d - 2.0 * dt * std::log(u)));
}

struct SupAccumulators {
    double bridge_abs = 0.0;                 // sup |B(t)|
    std::vector<double> weighted_wiener;     // sup |W(t)| / t^gamma per gamma
};

// One Monte-Carlo path. Draw order is fixed, so a path depends only on its
// seed and the grid, never on scheduling.
void run_path(std::uint64_t path_seed, std::size_t grid, std::span<const double> gammas,
              const std::vector<std::vector<double>>& inv_t_pow, std::vector<double>& wiener_buf,
              SupAccumulators& out) {
    std::mt19937_64 rng(path_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    const double dt = 1.0 / static_cast<double>(grid);
    const double sqrt_dt = std::sqrt(dt);

    wiener_buf[0] = 0.0;
    for (std::size_t i = 1; i <= grid; ++i)
        wiener_buf[i] = wiener_buf[i - 1] + sqrt_dt * normal(rng);
    const double w1 = wiener_buf[grid];

    double sup_w_abs = 0.0;      // gamma == 0 case, refined per interval
    double sup_b_abs = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double wa = wiener_buf[i];
        const double wb = wiener_buf[i + 1];
        const double u1 = 1.0 - uniform(rng);
        const double u2 = 1.0 - uniform(rng);
        sup_w_abs = std::max({sup_w_abs, bridge_max(wa, wb, dt, u1), -bridge_min(wa, wb, dt, u2)});

        const double ta = static_cast<double>(i) * dt;
        const double tb = static_cast<double>(i + 1) * dt;
        const double ba = wa - ta * w1;
        const double bb = wb - tb * w1;
        const double u3 = 1.0 - uniform(rng);
        const double u4 = 1.0 - uniform(rng);
        sup_b_abs = std::max({sup_b_abs, bridge_max(ba, bb, dt, u3), -bridge_min(ba, bb, dt, u4)});
    }
    out.bridge_abs = sup_b_abs;

    for (std::size_t g = 0; g < gammas.size(); ++g) {
        if (gammas[g] == 0.0) {
            out.weighted_wiener[g] = sup_w_abs;
            continue;
        }
        // For gamma > 0 the weight varies inside an interval, so use the
        // grid-point supremum with precomputed t^(-gamma).
        double sup = 0.0;
        const std::vector<double>& weights = inv_t_pow[g];
        for (std::size_t i = 1; i <= grid; ++i)
            sup = std::max(sup, std::abs(wiener_buf[i]) * weights[i]);
        out.weighted_wiener[g] = sup;
    }
}

// Linear-interpolation empirical quantile (sorts its input).
double empirical_quantile(std::vector<double>& xs, double alpha) {
    std::sort(xs.begin(), xs.end());
    const double h = alpha * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= xs.size()) return xs.back();
    return xs[lo] + (h - static_cast<double>(lo)) * (xs[lo + 1] - xs[lo]);
}

void validate_levels(std::span<const double> alphas, std::span<const double> gammas) {
    if (alphas.empty()) throw std::invalid_argument("no confidence levels requested");
    for (double a : alphas)
        if (a <= 0.0 || a >= 1.0) throw std::invalid_argument("alpha must be in (0, 1)");
    for (double g : gammas)
        if (g < 0.0 || g >= 0.5) throw std::invalid_argument("gamma must be in [0, 0.5)");
}

CriticalValueTable simulate_impl(const McParams& params, std::span<const double> alphas,
                                 std::span<const double> gammas, bool parallel) {
    params.validate();
    validate_levels(alphas, gammas);

    const std::size_t grid = params.grid;
    const std::size_t paths = params.paths;

    std::vector<std::vector<double>> inv_t_pow(gammas.size());
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        if (gammas[g] == 0.0) continue;
        inv_t_pow[g].assign(grid + 1, 0.0);
        for (std::size_t i = 1; i <= grid; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(grid);
            inv_t_pow[g][i] = std::pow(t, -gammas[g]);
        }
    }

    std::vector<double> bridge_sups(paths);
    std::vector<std::vector<double>> wiener_sups(gammas.size(), std::vector<double>(paths));

    const auto worker = [&](std::size_t p) {
        thread_local std::vector<double> wiener_buf;
        if (wiener_buf.size() != grid + 1) wiener_buf.assign(grid + 1, 0.0);
        SupAccumulators acc;
        acc.weighted_wiener.resize(gammas.size());
        run_path(splitmix64(params.seed ^ (0x9e3779b97f4a7c15ULL * (p + 1))), grid, gammas,
                 inv_t_pow, wiener_buf, acc);
        bridge_sups[p] = acc.bridge_abs;
        for (std::size_t g = 0; g < gammas.size(); ++g) wiener_sups[g][p] = acc.weighted_wiener[g];
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(paths); ++p)
            worker(static_cast<std::size_t>(p));
    } else {
        for (std::size_t p = 0; p < paths; ++p) worker(p);
    }

    CriticalValueTable table;
    for (double alpha : alphas) {
        std::vector<double> sq(paths);
        for (std::size_t p = 0; p < paths; ++p) sq[p] = bridge_sups[p] * bridge_sups[p];
        table.set_offline(alpha, empirical_quantile(sq, alpha));
    }
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        for (double alpha : alphas) {
            std::vector<double> copy = wiener_sups[g];
            table.set_online(alpha, gammas[g], empirical_quantile(copy, alpha));
        }
    }
    return table;
}

}  // namespace

void McParams::validate() const {
    if (paths < 10000) throw std::invalid_argument("need at least 10000 Monte-Carlo paths");
    if (grid < 500) throw std::invalid_argument("need a time grid of at least 500 points");
}

int CriticalValueTable::permille(double x) {
    return static_cast<int>(std::lround(x * 1000.0));
}

void CriticalValueTable::set_offline(double alpha, double value) {
    offline_[permille(alpha)] = value;
}

void CriticalValueTable::set_online(double alpha, double gamma, double value) {
    online_[{permille(alpha), permille(gamma)}] = value;
}

double CriticalValueTable::offline_value(double alpha) const {
    auto it = offline_.find(permille(alpha));
    if (it == offline_.end())
        throw std::invalid_argument("no offline critical value tabulated for alpha=" +
                                    std::to_string(alpha));
    return it->second;
}

double CriticalValueTable::online_value(double alpha, double gamma) const {
    auto it = online_.find({permille(alpha), permille(gamma)});
    if (it == online_.end())
        throw std::invalid_argument("no online critical value tabulated for alpha=" +
                                    std::to_string(alpha) + ", gamma=" + std::to_string(gamma));
    return it->second;
}

bool CriticalValueTable::has_offline(double alpha) const {
    return offline_.count(permille(alpha)) > 0;
}

bool CriticalValueTable::has_online(double alpha, double gamma) const {
    return online_.count({permille(alpha), permille(gamma)}) > 0;
}

std::vector<CriticalValueTable::Row> CriticalValueTable::rows() const {
    std::vector<Row> out;
    for (const auto& [alpha_pm, value] : offline_)
        out.push_back({alpha_pm / 1000.0, std::nullopt, value});
    for (const auto& [key, value] : online_)
        out.push_back({key.first / 1000.0, key.second / 1000.0, value});
    return out;
}

CriticalValueTable simulate_critical_values(const McParams& params,
                                            std::span<const double> alphas,
                                            std::span<const double> gammas) {
    return simulate_impl(params, alphas, gammas, true);
}

CriticalValueTable simulate_critical_values_serial(const McParams& params,
                                                   std::span<const double> alphas,
                                                   std::span<const double> gammas) {
    return simulate_impl(params, alphas, gammas, false);
}

double offline_critical_value(double alpha, std::size_t mc_paths, std::size_t grid,
                              std::uint64_t seed) {
    McParams params{mc_paths, grid, seed};
    const double alphas[] = {alpha};
    return simulate_critical_values(params, alphas, {}).offline_value(alpha);
}

double online_critical_value(double alpha, double gamma, std::size_t mc_paths, std::size_t grid,
                             std::uint64_t seed) {
    McParams params{mc_paths, grid, seed};
    const double alphas[] = {alpha};
    const double gammas[] = {gamma};
    return simulate_critical_values(params, alphas, gammas).online_value(alpha, gamma);
}

void save_critical_values(const std::filesystem::path& file, const CriticalValueTable& table) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write critical-value cache: " + file.string());
    out << "alpha,gamma,value\n";
    out.precision(17);
    for (const auto& row : table.rows()) {
        out << row.alpha << ',';
        if (row.gamma) out << *row.gamma;
        out << ',' << row.value << '\n';
    }
}

CriticalValueTable load_critical_values(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read critical-value cache: " + file.string());
    CriticalValueTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("alpha", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::istringstream ss(line);
        std::string alpha_s, gamma_s, value_s;
        if (!std::getline(ss, alpha_s, ',') || !std::getline(ss, gamma_s, ',') ||
            !std::getline(ss, value_s))
            throw std::runtime_error("malformed cache row: " + line);
        const double alpha = std::stod(alpha_s);
        const double value = std::stod(value_s);
        if (gamma_s.empty())
            table.set_offline(alpha, value);
        else
            table.set_online(alpha, std::stod(gamma_s), value);
    }
    return table;
}

CriticalValueTable load_or_create_critical_values(const std::filesystem::path& file,
                                                  std::span<const double> alphas,
                                                  std::span<const double> gammas,
                                                  const McParams& params) {
    if (std::filesystem::exists(file)) {
        CriticalValueTable table = load_critical_values(file);
        bool complete = true;
        for (double a : alphas) {
            complete = complete && table.has_offline(a);
            for (double g : gammas) complete = complete && table.has_online(a, g);
        }
        if (complete) return table;
    }
    CriticalValueTable table = simulate_critical_values(params, alphas, gammas);
    if (!file.parent_path().empty()) std::filesystem::create_directories(file.parent_path());
    save_critical_values(file, table);
    return table;
}

}  // namespace sentinel
