#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubblecut/graph.hpp"

namespace bubblecut {

// Two-dimensional near-partition of the vertex set. columns[j][i] holds the
// vertex ids of the bubble in column j+1, row i+1 (both 1-based in the
// mathematical indexing used throughout comments). Empty bubbles are legal;
// the number of rows of a column is columns[j].size().
//
// Realized graph: u~v iff they share a column, or u sits one column to the
// right of v in a strictly smaller row. Every column induces a clique; a
// column is fully adjacent to the tail rows of its left neighbor.
struct BubbleModel {
    int n = 0;
    std::vector<std::vector<std::vector<int>>> columns;

    int k() const { return static_cast<int>(columns.size()); }
    int rows(int j) const { return static_cast<int>(columns[j].size()); }

    int bubble_size(int j, int i) const {
        return static_cast<int>(columns[j][i].size());
    }

    int column_size(int j) const {
        int total = 0;
        for (const auto& b : columns[j]) total += static_cast<int>(b.size());
        return total;
    }

    long long total_rows() const {
        long long total = 0;
        for (const auto& col : columns) total += static_cast<long long>(col.size());
        return total;
    }
};

// Structural validation: near-partition of 0..n-1, no trailing empty
// columns, row-count bound (total rows <= 2n^2 + 2). Returns std::nullopt on
// success, otherwise a message naming the first violation.
std::optional<std::string> validate_model(const BubbleModel& m);

// As above, and additionally checks realize_graph(m) == g edge-for-edge,
// naming one witness pair on mismatch.
std::optional<std::string> validate_model(const BubbleModel& m, const Graph& g);

// Builds the graph the model describes. Throws contract_error if the model
// fails structural validation.
Graph realize_graph(const BubbleModel& m);

// Number of edges of realize_graph(m), computed from bubble sizes alone.
long long realized_edge_count(const BubbleModel& m);

// Flattening column by column, rows ascending within each column. For any
// valid model this is an umbrella ordering of the realized graph.
std::vector<int> flatten_model(const BubbleModel& m);

// JSON schema: {"n": int, "columns": [[{"row": int, "vertices": [int,...]},
// ...], ...]}; rows strictly increasing within a column, omitted rows are
// empty bubbles. The serializer emits an explicit empty top row only when
// needed to witness the row count, and never emits trailing empty columns.
std::string model_to_json(const BubbleModel& m);
BubbleModel model_from_json(const std::string& text);  // throws parse_error

}  // namespace bubblecut
