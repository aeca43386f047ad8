#include "bubblecut/oracle.hpp"

#include "bubblecut/dp_solver.hpp"
#include "bubblecut/generator.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>

namespace bubblecut {

long long brute_force_max_cut(const Graph& g, int cap) {
    int n = g.n();
    if (n > cap)
        throw contract_error("brute_force_max_cut: n = " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(cap));
    if (n <= 1) return 0;
    std::vector<uint32_t> mask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        mask[u] |= 1u << v;
        mask[v] |= 1u << u;
    }
    long long best = 0;
    uint32_t half = 1u << (n - 1);
    for (uint32_t rest = 0; rest < half; ++rest) {
        uint32_t set = rest << 1 | 1u;  // vertex 0 pinned to S
        long long cut = 0;
        for (int v = 0; v < n; ++v)
            if (set >> v & 1u) cut += std::popcount(mask[v] & ~set);
        best = std::max(best, cut);
    }
    return best;
}

bool exhaustive_proper_interval_check(const Graph& g, int cap) {
    int n = g.n();
    if (n > cap)
        throw contract_error("exhaustive_proper_interval_check: n = " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(cap));
    if (n <= 2) return true;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int p = 0; ok && p < n; ++p) {
            for (int t = p + 2; ok && t < n; ++t) {
                if (!g.adjacent(order[p], order[t])) continue;
                for (int q = p + 1; q < t; ++q) {
                    if (!g.adjacent(order[p], order[q]) || !g.adjacent(order[q], order[t])) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

namespace {

// Stable per-trial seed derived from the master seed (splitmix64 step).
uint64_t trial_seed(uint64_t seed, int trial) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

VerificationReport verify_dp(int trials, int max_n, uint64_t seed) {
    if (max_n > kBruteForceCap)
        throw contract_error("verify_dp: max_n exceeds the brute-force cap");
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        uint64_t ts = trial_seed(seed, t);
        int n = 1 + static_cast<int>(ts % static_cast<uint64_t>(std::max(1, max_n)));
        BubbleModel m = random_model(n, ts);
        long long dp = solve_max_cut(m, false).max_cut_size;
        long long oracle = brute_force_max_cut(realize_graph(m));
        if (dp != oracle) report.mismatches.push_back({ts, m, dp, oracle});
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json out;
    out["trials"] = report.trials;
    out["passed"] = report.passed();
    out["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& mm : report.mismatches) {
        nlohmann::ordered_json doc;
        doc["seed"] = mm.seed;
        doc["model"] = nlohmann::ordered_json::parse(model_to_json(mm.model));
        doc["dp_value"] = mm.dp_value;
        doc["oracle_value"] = mm.oracle_value;
        out["mismatches"].push_back(std::move(doc));
    }
    return out.dump();
}

}  // namespace bubblecut
