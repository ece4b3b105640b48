#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qpknot/diagram.hpp"
#include "qpknot/error.hpp"

namespace qpk {

struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;
    int id = 0; ///< crossing id when the graph comes from a diagram
    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Loop-free multigraph with signed, identified edges.  Edge order is kept.
class SignedMultigraph {
public:
    SignedMultigraph() = default;

    static SignedMultigraph make(int vertex_count, std::vector<SignedEdge> edges) {
        if (vertex_count < 0) fail(Errc::Invariant, "negative vertex count");
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
                fail(Errc::Invariant, "edge " + std::to_string(e.id) + " has an endpoint out of range");
            if (e.u == e.v) fail(Errc::LoopEdge, "edge " + std::to_string(e.id) + " is a loop at vertex " + std::to_string(e.u));
            if (e.sign != 1 && e.sign != -1) fail(Errc::Invariant, "edge " + std::to_string(e.id) + " has sign other than +-1");
        }
        SignedMultigraph g;
        g.n_ = vertex_count;
        g.edges_ = std::move(edges);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    /// Spanning subgraph keeping only edges of the given sign.
    SignedMultigraph restricted(int sign) const {
        std::vector<SignedEdge> keep;
        std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(keep), [&](const auto& e) { return e.sign == sign; });
        return make(n_, std::move(keep));
    }

    SignedMultigraph negated() const {
        auto es = edges_;
        for (auto& e : es) e.sign = -e.sign;
        return make(n_, std::move(es));
    }

    /// Number of edges joining u and v.
    int multiplicity(int u, int v) const {
        return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const auto& e) {
            return (e.u == u && e.v == v) || (e.u == v && e.v == u);
        }));
    }

    friend bool operator==(const SignedMultigraph&, const SignedMultigraph&) = default;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
};

inline int connected_components(const SignedMultigraph& g) {
    DisjointSets ds(g.vertex_count());
    for (const auto& e : g.edges()) ds.unite(e.u, e.v);
    return ds.count_roots();
}

/// A biconnected block.  `edges` holds indices into SignedMultigraph::edges().
struct Block {
    std::vector<int> vertices;
    std::vector<int> edges;
    int sign = 0; ///< +1, -1, or 0 when both signs occur
};

/// Biconnected components (blocks) by Tarjan's lowpoint search.  Parallel
/// edges stay in one block; isolated vertices belong to no block.  Blocks are
/// ordered by their smallest edge index.
inline std::vector<Block> blocks(const SignedMultigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (edge index, neighbour)
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        adj[e.u].emplace_back(i, e.v);
        adj[e.v].emplace_back(i, e.u);
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> stack;
    std::vector<Block> out;
    int clock = 0;

    std::function<void(int, int)> dfs = [&](int u, int via) {
        disc[u] = low[u] = clock++;
        for (auto [ei, w] : adj[u]) {
            if (ei == via) continue;
            if (disc[w] < 0) {
                stack.push_back(ei);
                dfs(w, ei);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    Block b;
                    int top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        b.edges.push_back(top);
                    } while (top != ei);
                    out.push_back(std::move(b));
                }
            } else if (disc[w] < disc[u]) {
                stack.push_back(ei);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);

    for (auto& b : out) {
        std::sort(b.edges.begin(), b.edges.end());
        bool pos = false, neg = false;
        for (int ei : b.edges) {
            const auto& e = g.edges()[ei];
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
            (e.sign > 0 ? pos : neg) = true;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        b.sign = pos && neg ? 0 : (pos ? 1 : -1);
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
    return out;
}

/// Subgraph induced by one block, vertices renumbered in increasing order.
inline SignedMultigraph block_graph(const SignedMultigraph& g, const Block& b) {
    std::vector<SignedEdge> es;
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
    };
    for (int ei : b.edges) {
        auto e = g.edges()[ei];
        e.u = local(e.u);
        e.v = local(e.v);
        es.push_back(e);
    }
    return SignedMultigraph::make(static_cast<int>(b.vertices.size()), std::move(es));
}

/// True if removing edge index `ei` disconnects its endpoints.
inline bool is_cut_edge(const SignedMultigraph& g, int ei) {
    for (const auto& b : blocks(g))
        if (std::find(b.edges.begin(), b.edges.end(), ei) != b.edges.end()) return b.edges.size() == 1;
    return false;
}

// Edge-list text: optional `vertices <n>` header, then `u v sign id` per edge.

inline std::string to_edge_list(const SignedMultigraph& g) {
    std::ostringstream os;
    os << "vertices " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? "+1" : "-1") << ' ' << e.id << '\n';
    return os.str();
}

inline SignedMultigraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int declared = -1;
    int max_vertex = -1;
    int lineno = 0;
    std::vector<SignedEdge> es;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok{std::istream_iterator<std::string>(ls), {}};
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (tok[0] == "vertices") {
            if (tok.size() != 2 || !es.empty()) fail(Errc::Syntax, "bad vertices header at " + where);
            declared = detail::parse_int(tok[1], where);
            continue;
        }
        if (tok.size() != 4) fail(Errc::Syntax, "expected 'u v sign id' at " + where);
        SignedEdge e;
        e.u = detail::parse_int(tok[0], where);
        e.v = detail::parse_int(tok[1], where);
        if (tok[2] == "+" || tok[2] == "+1" || tok[2] == "1") e.sign = 1;
        else if (tok[2] == "-" || tok[2] == "-1") e.sign = -1;
        else fail(Errc::Syntax, "sign must be +1 or -1 at " + where);
        e.id = detail::parse_int(tok[3], where);
        max_vertex = std::max({max_vertex, e.u, e.v});
        es.push_back(e);
    }
    const int n = declared >= 0 ? declared : max_vertex + 1;
    return SignedMultigraph::make(n, std::move(es));
}

} // namespace qpk
