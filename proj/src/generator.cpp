#include "bubblecut/generator.hpp"

#include <algorithm>
#include <random>

namespace bubblecut {

namespace {

// All randomness below goes through these helpers rather than the standard
// distributions, whose output is implementation-defined; byte-identical
// output across platforms is part of the CLI contract.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}

    uint64_t next() { return engine(); }
    // uniform integer in [0, bound)
    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
    // uniform double in [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }
};

}  // namespace

BubbleModel random_model(int n, uint64_t seed, const GenParams& params) {
    if (n < 1) throw contract_error("random_model: n must be positive");
    Rng rng(seed);
    double empty_rate = std::clamp(params.empty_rate, 0.0, 0.9);

    int k = params.columns;
    if (k <= 0) k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    k = std::min(k, n);

    // Scatter vertices over columns, then shuffle ids within each column so
    // bubble contents are not always consecutive ranges.
    std::vector<std::vector<int>> members(k);
    for (int v = 0; v < n; ++v)
        members[rng.below(static_cast<uint64_t>(k))].push_back(v);
    for (auto& col : members) rng.shuffle(col);

    BubbleModel m;
    m.n = n;
    m.columns.resize(k);
    for (int j = 0; j < k; ++j) {
        auto& rows = m.columns[j];
        size_t used = 0;
        while (used < members[j].size()) {
            if (rng.unit() < empty_rate) {
                rows.push_back({});
                continue;
            }
            size_t left = members[j].size() - used;
            size_t take = 1 + rng.below(left);
            rows.emplace_back(members[j].begin() + used, members[j].begin() + used + take);
            used += take;
        }
        // Occasionally leave empty rows above the occupied ones too.
        while (rows.size() < static_cast<size_t>(2 * n) && rng.unit() < empty_rate)
            rows.push_back({});
    }
    // Empty columns in the middle are legal; trailing ones are not.
    while (!m.columns.empty()) {
        bool all_empty = true;
        for (const auto& b : m.columns.back())
            if (!b.empty()) all_empty = false;
        if (!all_empty) break;
        m.columns.pop_back();
    }

    if (auto bad = validate_model(m))
        throw contract_error("random_model produced an invalid model: " + *bad);
    return m;
}

Graph random_graph(int n, uint64_t seed, double edge_prob) {
    if (n < 0) throw contract_error("random_graph: n must be non-negative");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < edge_prob) g.add_edge(u, v);
    return g;
}

}  // namespace bubblecut
