#include "bubblecut/recognition.hpp"

#include <algorithm>
#include <cassert>
#include <list>

namespace bubblecut {

namespace {

// One lexicographic BFS sweep using partition refinement over slices.
// Within the front slice the vertex with the highest tie_rank is taken, so
// the caller controls tie-breaking; neighbors of the chosen vertex are
// split off ahead of non-neighbors in every remaining slice.
std::vector<int> lex_bfs(const Graph& g, const std::vector<int>& tie_rank) {
    int n = g.n();
    std::list<std::vector<int>> slices;
    if (n > 0) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        slices.push_back(std::move(all));
    }
    std::vector<int> order;
    order.reserve(n);
    while (!slices.empty()) {
        std::vector<int>& front = slices.front();
        size_t pick = 0;
        for (size_t i = 1; i < front.size(); ++i)
            if (tie_rank[front[i]] > tie_rank[front[pick]]) pick = i;
        int v = front[pick];
        front.erase(front.begin() + pick);
        if (front.empty()) slices.pop_front();
        order.push_back(v);
        for (auto it = slices.begin(); it != slices.end();) {
            std::vector<int> in, out;
            for (int u : *it) (g.adjacent(v, u) ? in : out).push_back(u);
            if (in.empty() || out.empty()) {
                ++it;
                continue;
            }
            *it = std::move(in);
            ++it;
            it = slices.insert(it, std::move(out));
            ++it;
        }
    }
    return order;
}

std::vector<int> positions_of(const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
    return pos;
}

// u and v agree on every vertex outside the pair and are adjacent to each
// other, i.e. their closed neighborhoods coincide.
bool closed_twins(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) return false;
    for (int w = 0; w < g.n(); ++w) {
        if (w == u || w == v) continue;
        if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
    }
    return true;
}

}  // namespace

bool is_umbrella_ordering(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) {
        int v = order[p];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = p;
    }
    // Consecutive closed neighborhoods: for each vertex the positions of
    // N[v] fill an interval exactly (distinctness + count = span).
    for (int v = 0; v < n; ++v) {
        int lo = pos[v], hi = pos[v], cnt = 1;
        for (int u : g.neighbors(v)) {
            lo = std::min(lo, pos[u]);
            hi = std::max(hi, pos[u]);
            ++cnt;
        }
        if (hi - lo + 1 != cnt) return false;
    }
    return true;
}

std::optional<std::vector<int>> umbrella_ordering(const Graph& g) {
    int n = g.n();
    std::vector<int> rank(n);
    for (int v = 0; v < n; ++v) rank[v] = n - 1 - v;  // prefer lower ids
    std::vector<int> sweep = lex_bfs(g, rank);
    sweep = lex_bfs(g, positions_of(sweep));
    sweep = lex_bfs(g, positions_of(sweep));
    if (!is_umbrella_ordering(g, sweep)) return std::nullopt;
    return sweep;
}

std::optional<BubbleModel> build_bubble_model(const Graph& g) {
    int n = g.n();
    if (n == 0) return BubbleModel{0, {}};
    auto maybe_order = umbrella_ordering(g);
    if (!maybe_order) return std::nullopt;
    const std::vector<int>& order = *maybe_order;

    // Maximal runs of consecutive twins become the candidate bubbles.
    std::vector<std::vector<int>> cls;
    for (int p = 0; p < n; ++p) {
        if (p == 0 || !closed_twins(g, order[p - 1], order[p]))
            cls.push_back({});
        cls.back().push_back(order[p]);
    }
    int q = static_cast<int>(cls.size());

    // ell[t]: the earliest class seen from class t's closed neighborhood.
    // By the umbrella property the left neighbors of t are exactly the
    // classes ell[t] .. t-1.
    std::vector<int> ell(q);
    for (int t = 0; t < q; ++t) {
        ell[t] = t;
        for (int a = 0; a < t; ++a) {
            if (g.adjacent(cls[a][0], cls[t][0])) {
                ell[t] = a;
                break;
            }
        }
    }

    // Column assignment: a class joins the current column exactly when it is
    // adjacent to the column's first class (hence, by the umbrella property,
    // to the whole column); otherwise it starts the next column.
    std::vector<std::vector<int>> col_classes;
    std::vector<int> col_of(q), pos_in_col(q);
    for (int t = 0; t < q; ++t) {
        if (col_classes.empty() || ell[t] > col_classes.back().front())
            col_classes.push_back({});
        col_of[t] = static_cast<int>(col_classes.size()) - 1;
        pos_in_col[t] = static_cast<int>(col_classes.back().size());
        col_classes.back().push_back(t);
    }
    int k = static_cast<int>(col_classes.size());

    // A class with neighbors in the previous column attaches to its lowest
    // such neighbor; the attachment forest's subtree sizes tell how much
    // vertical room a class must reserve for its descendants.
    std::vector<int> parent(q, -1);
    for (int t = 0; t < q; ++t) {
        if (col_of[t] > 0 && ell[t] < col_classes[col_of[t]].front()) {
            parent[t] = ell[t];
            assert(col_of[parent[t]] == col_of[t] - 1);
        }
    }
    std::vector<long long> extent(q, 1);
    for (int t = q - 1; t >= 0; --t)
        if (parent[t] >= 0) extent[parent[t]] += extent[t];

    // Row placement, one column at a time. Each class sits strictly above
    // its column predecessor with a gap reserving room for its subtree; an
    // attached class must also clear the row of the class just below its
    // parent (so its left neighbors are exactly the parent and everything
    // above), and an unattached class must clear the previous column
    // entirely.
    std::vector<long long> row(q, 0);
    std::vector<long long> col_height(k, 0);
    for (int j = 0; j < k; ++j) {
        long long prev = 0;
        for (int t : col_classes[j]) {
            long long at = prev + std::max(1LL, extent[t] - 1);
            long long floor_row = 0;
            if (parent[t] >= 0) {
                if (pos_in_col[parent[t]] > 0) {
                    int pred = col_classes[j - 1][pos_in_col[parent[t]] - 1];
                    floor_row = row[pred];
                }
            } else if (j > 0) {
                floor_row = col_height[j - 1];
            }
            row[t] = std::max(at, floor_row);
            if (parent[t] >= 0) assert(row[t] < row[parent[t]]);
            prev = row[t];
        }
        col_height[j] = prev;
    }

    BubbleModel m;
    m.n = n;
    m.columns.resize(k);
    for (int j = 0; j < k; ++j)
        m.columns[j].assign(static_cast<size_t>(col_height[j]), {});
    for (int t = 0; t < q; ++t) {
        std::vector<int> ids = cls[t];
        std::sort(ids.begin(), ids.end());
        m.columns[col_of[t]][static_cast<size_t>(row[t]) - 1] = std::move(ids);
    }

    // Self-certification: only a model that realizes the input exactly is
    // ever returned.
    if (validate_model(m, g)) return std::nullopt;
    return m;
}

}  // namespace bubblecut
