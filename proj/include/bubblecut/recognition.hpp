#pragma once

#include "bubblecut/bubble.hpp"
#include "bubblecut/graph.hpp"

#include <optional>
#include <vector>

namespace bubblecut {

// True iff `order` is a permutation of the vertices in which every closed
// neighborhood occupies consecutive positions. That interval condition is
// equivalent to the umbrella property: whenever p < q < t and order[p] is
// adjacent to order[t], both order[p]-order[q] and order[q]-order[t] are
// edges as well.
bool is_umbrella_ordering(const Graph& g, const std::vector<int>& order);

// Computes an umbrella ordering via three lexicographic BFS sweeps, or
// returns nothing when the graph has no such ordering (i.e. it is not a
// proper interval graph). The candidate is always checked with
// is_umbrella_ordering before being returned, so a returned ordering is
// trustworthy regardless of how it was found. Deterministic: ties in the
// first sweep break toward lower vertex ids.
std::optional<std::vector<int>> umbrella_ordering(const Graph& g);

// Builds a bubble model whose realization equals g, or returns nothing when
// g is not a proper interval graph. Vertices sharing a bubble are pairwise
// twins. The result is self-certified with validate_model(m, g) before
// being returned.
std::optional<BubbleModel> build_bubble_model(const Graph& g);

}  // namespace bubblecut
