#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bubblecut {

// Thrown on malformed external input (edge lists, model JSON).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation's precondition is violated by the caller.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Simple undirected graph with dense 0-based vertex ids. Immutable once
// built; adjacency tests are O(1) via a packed matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Rejects loops, out-of-range endpoints and duplicate edges.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const {
        return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
    }

    // Edges as (min,max) pairs, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const;

    std::vector<int> neighbors(int v) const;

private:
    int n_ = 0;
    std::vector<uint8_t> matrix_;                   // n*n symmetric
    mutable std::vector<std::pair<int, int>> edges_;  // kept sorted lazily
    mutable bool sorted_ = true;
};

// One side of a cut: membership[v] != 0 means v is in S.
struct Cut {
    std::vector<uint8_t> membership;

    size_t size() const { return membership.size(); }
    bool in_s(int v) const { return membership[v] != 0; }
};

// Number of edges with exactly one endpoint in s. Throws contract_error on
// length mismatch.
long long cut_size(const Graph& g, const Cut& s);

// Flips every membership bit.
Cut complement_cut(const Cut& s);

// Edge-list text format: header "n m", then m lines "u v", each undirected
// edge once in either orientation. Throws parse_error naming the bad line.
Graph parse_edge_list(const std::string& text);

// Canonical form: header, then edges as "u v" with u < v, sorted.
std::string serialize_edge_list(const Graph& g);

}  // namespace bubblecut
