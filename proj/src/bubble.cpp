#include "bubblecut/bubble.hpp"

#include <json.hpp>

#include <algorithm>

namespace bubblecut {

namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<std::string> check_structure(const BubbleModel& m) {
    if (m.n < 0) return "negative vertex count";
    if (m.n >= 1 && m.k() < 1) return "no columns for a non-empty vertex set";
    if (m.k() > 0 && m.column_size(m.k() - 1) == 0)
        return "trailing empty column " + std::to_string(m.k());

    std::vector<uint8_t> seen(m.n, 0);
    long long placed = 0;
    for (int j = 0; j < m.k(); ++j) {
        for (int i = 0; i < m.rows(j); ++i) {
            for (int v : m.columns[j][i]) {
                if (v < 0 || v >= m.n)
                    return "vertex " + std::to_string(v) + " out of range in column " +
                           std::to_string(j + 1) + " row " + std::to_string(i + 1);
                if (seen[v]) return "duplicate vertex " + std::to_string(v);
                seen[v] = 1;
                ++placed;
            }
        }
    }
    if (placed != m.n) {
        for (int v = 0; v < m.n; ++v)
            if (!seen[v]) return "missing vertex " + std::to_string(v);
    }

    // Row-count bound: a model this library builds or accepts keeps the
    // total bubble count quadratic in n.
    if (m.total_rows() > 2LL * m.n * m.n + 2)
        return "row count " + std::to_string(m.total_rows()) + " exceeds bound " +
               std::to_string(2LL * m.n * m.n + 2);
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_model(const BubbleModel& m) {
    return check_structure(m);
}

std::optional<std::string> validate_model(const BubbleModel& m, const Graph& g) {
    if (auto bad = check_structure(m)) return bad;
    if (g.n() != m.n) return "vertex count mismatch with graph";
    Graph realized = realize_graph(m);
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (realized.adjacent(u, v) != g.adjacent(u, v))
                return std::string(realized.adjacent(u, v) ? "extra" : "missing") +
                       " edge {" + std::to_string(u) + "," + std::to_string(v) + "}";
    return std::nullopt;
}

Graph realize_graph(const BubbleModel& m) {
    if (auto bad = check_structure(m)) throw contract_error("invalid model: " + *bad);
    Graph g(m.n);
    for (int j = 0; j < m.k(); ++j) {
        // Column cliques.
        std::vector<int> col;
        for (const auto& b : m.columns[j]) col.insert(col.end(), b.begin(), b.end());
        for (size_t a = 0; a < col.size(); ++a)
            for (size_t b = a + 1; b < col.size(); ++b) g.add_edge(col[a], col[b]);
        // Cross edges: row i of column j+1 is adjacent to rows > i of column j.
        if (j + 1 < m.k()) {
            for (int i2 = 0; i2 < m.rows(j + 1); ++i2)
                for (int u : m.columns[j + 1][i2])
                    for (int i1 = i2 + 1; i1 < m.rows(j); ++i1)
                        for (int v : m.columns[j][i1]) g.add_edge(u, v);
        }
    }
    return g;
}

long long realized_edge_count(const BubbleModel& m) {
    long long total = 0;
    for (int j = 0; j < m.k(); ++j) {
        long long c = m.column_size(j);
        total += c * (c - 1) / 2;
        if (j + 1 < m.k()) {
            // Each bubble of column j+1 sees the strictly larger rows of column j.
            for (int i2 = 0; i2 < m.rows(j + 1); ++i2) {
                long long above = 0;
                for (int i1 = i2 + 1; i1 < m.rows(j); ++i1) above += m.bubble_size(j, i1);
                total += above * m.bubble_size(j + 1, i2);
            }
        }
    }
    return total;
}

std::vector<int> flatten_model(const BubbleModel& m) {
    std::vector<int> order;
    order.reserve(m.n);
    for (const auto& col : m.columns)
        for (const auto& bubble : col) order.insert(order.end(), bubble.begin(), bubble.end());
    return order;
}

std::string model_to_json(const BubbleModel& m) {
    ordered_json out;
    out["n"] = m.n;
    out["columns"] = ordered_json::array();
    int last_nonempty = -1;
    for (int j = 0; j < m.k(); ++j)
        if (m.column_size(j) > 0) last_nonempty = j;
    for (int j = 0; j <= last_nonempty; ++j) {
        ordered_json col = ordered_json::array();
        int top_written = 0;
        for (int i = 0; i < m.rows(j); ++i) {
            if (m.columns[j][i].empty()) continue;
            ordered_json bubble;
            bubble["row"] = i + 1;
            std::vector<int> ids = m.columns[j][i];
            std::sort(ids.begin(), ids.end());
            bubble["vertices"] = ids;
            col.push_back(std::move(bubble));
            top_written = i + 1;
        }
        // Witness the row count when the top rows are all empty.
        if (top_written < m.rows(j)) {
            ordered_json bubble;
            bubble["row"] = m.rows(j);
            bubble["vertices"] = ordered_json::array();
            col.push_back(std::move(bubble));
        }
        out["columns"].push_back(std::move(col));
    }
    return out.dump();
}

BubbleModel model_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad model JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("columns") ||
        !doc["n"].is_number_integer() || !doc["columns"].is_array())
        throw parse_error("bad model JSON: expected {\"n\": int, \"columns\": [...]}");

    BubbleModel m;
    m.n = doc["n"].get<int>();
    for (const auto& col : doc["columns"]) {
        if (!col.is_array()) throw parse_error("bad model JSON: column is not an array");
        std::vector<std::vector<int>> rows;
        int prev_row = 0;
        for (const auto& bubble : col) {
            if (!bubble.is_object() || !bubble.contains("row") || !bubble.contains("vertices") ||
                !bubble["row"].is_number_integer() || !bubble["vertices"].is_array())
                throw parse_error("bad model JSON: bubble must be {\"row\": int, \"vertices\": [...]}");
            int row = bubble["row"].get<int>();
            if (row <= prev_row)
                throw parse_error("bad model JSON: rows must be strictly increasing, got " +
                                  std::to_string(row) + " after " + std::to_string(prev_row));
            rows.resize(row);
            for (const auto& v : bubble["vertices"]) {
                if (!v.is_number_integer())
                    throw parse_error("bad model JSON: vertex ids must be integers");
                rows[row - 1].push_back(v.get<int>());
            }
            prev_row = row;
        }
        m.columns.push_back(std::move(rows));
    }
    if (auto bad = validate_model(m)) throw parse_error("invalid model: " + *bad);
    return m;
}

}  // namespace bubblecut
