#pragma once

#include "bubblecut/bubble.hpp"
#include "bubblecut/graph.hpp"

#include <cstdint>

namespace bubblecut {

struct GenParams {
    // Desired number of columns; 0 picks a count from the seed.
    int columns = 0;
    // Approximate fraction of bubbles left empty (clamped to [0, 0.9]).
    double empty_rate = 0.15;
};

// Deterministic random bubble model on vertices 0..n-1. The same
// (n, seed, params) triple always yields the same model on every platform;
// the result always passes validate_model. Empty bubbles appear at roughly
// the configured rate, including above the last occupied row of a column.
BubbleModel random_model(int n, uint64_t seed, const GenParams& params = {});

// Deterministic Erdos-Renyi style graph: every pair is an edge with
// probability edge_prob, drawn from the seed.
Graph random_graph(int n, uint64_t seed, double edge_prob);

}  // namespace bubblecut
