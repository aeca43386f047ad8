#include "bubblecut/graph.hpp"

#include <algorithm>
#include <sstream>

namespace bubblecut {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw contract_error("vertex count must be non-negative");
    matrix_.assign(static_cast<size_t>(n) * n, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw contract_error("edge endpoint out of range");
    if (u == v) throw contract_error("loops are not allowed");
    if (adjacent(u, v)) throw contract_error("duplicate edge");
    matrix_[static_cast<size_t>(u) * n_ + v] = 1;
    matrix_[static_cast<size_t>(v) * n_ + u] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    sorted_ = false;
}

const std::vector<std::pair<int, int>>& Graph::edges() const {
    if (!sorted_) {
        std::sort(edges_.begin(), edges_.end());
        sorted_ = true;
    }
    return edges_;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && adjacent(u, v)) out.push_back(u);
    return out;
}

long long cut_size(const Graph& g, const Cut& s) {
    if (static_cast<int>(s.membership.size()) != g.n())
        throw contract_error("cut length does not match vertex count");
    long long total = 0;
    for (const auto& [u, v] : g.edges())
        if (s.in_s(u) != s.in_s(v)) ++total;
    return total;
}

Cut complement_cut(const Cut& s) {
    Cut out = s;
    for (auto& bit : out.membership) bit = bit ? 0 : 1;
    return out;
}

namespace {

// Reads the next whitespace-separated token; empty string at end of input.
bool next_line(std::istringstream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw parse_error("empty input, expected \"n m\" header");

    long long n = -1, m = -1;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0)
            fail(line_no, "malformed header, expected \"n m\"");
    }

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, line_no))
            fail(line_no + 1, "unexpected end of input, expected " + std::to_string(m) + " edges");
        std::istringstream row(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) fail(line_no, "malformed edge, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "endpoint out of range");
        if (u == v) fail(line_no, "loop on vertex " + std::to_string(u));
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) fail(line_no, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(in, line, line_no)) fail(line_no, "trailing content after last edge");
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace bubblecut
