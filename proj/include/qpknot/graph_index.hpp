#pragma once

// Reduction index of a signed Seifert graph.
//
// A move picks two vertices joined by exactly one edge (a lone edge) and
// contracts that edge; every other edge survives, so edges incident to both
// endpoints become parallel.  ind(G) is the longest possible sequence of
// moves.  ind+ / ind- allow only moves on positive / negative lone edges,
// loneness still being judged in the whole graph.  That is the form the
// diagram moves take (a crossing can be untwisted only when it is the sole
// crossing between its two circles) and the one for which the degree
// bounds hold; counting lone edges of the sign subgraph alone breaks them,
// e.g. on the closure of sigma1 sigma1^-1.
//
// Multiplicities only grow under contraction, so an edge that is not lone
// never becomes lone later.  Moves inside different blocks do not interact,
// hence the search runs block by block and memoizes blocks up to isomorphism.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/error.hpp"
#include "qpknot/graph.hpp"

namespace qpk {

struct IndexOptions {
    int max_vertices = 14;
};

/// One contraction: the crossing (edge id) used, its sign, and the two
/// vertex classes merged, each named by its smallest original vertex.
struct ReductionStep {
    int crossing = 0;
    int sign = 0;
    int u = 0;
    int v = 0;
    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

using ReductionWitness = std::vector<ReductionStep>;

struct IndexReport {
    int ind = 0;
    int ind_plus = 0;
    int ind_minus = 0;
    ReductionWitness witness;
    ReductionWitness witness_plus;
    ReductionWitness witness_minus;
};

namespace detail {

/// Multiplicity matrix.  An entry packs the positive count in the low half
/// and the negative count in the high half, so contraction just adds entries.
struct MultiGraph {
    int n = 0;
    std::vector<std::uint32_t> m;

    explicit MultiGraph(int vertices = 0) : n(vertices), m(static_cast<std::size_t>(vertices * vertices), 0) {}
    std::uint32_t at(int i, int j) const { return m[static_cast<std::size_t>(i * n + j)]; }
    void add(int i, int j, std::uint32_t k) {
        m[static_cast<std::size_t>(i * n + j)] += k;
        m[static_cast<std::size_t>(j * n + i)] += k;
    }
    bool operator==(const MultiGraph&) const = default;
};

inline constexpr std::uint32_t kPositive = 1, kNegative = 1u << 16;

inline int multiplicity(std::uint32_t k) { return static_cast<int>((k & 0xffffu) + (k >> 16)); }

/// Can the pair with entry k be contracted by a move of the given sign (0 =
/// any sign)?
inline bool movable(std::uint32_t k, int sign) {
    if (sign > 0) return k == kPositive;
    if (sign < 0) return k == kNegative;
    return multiplicity(k) == 1;
}

/// Signs are kept only when the moves depend on them.
inline MultiGraph to_multigraph(const SignedMultigraph& g, int sign) {
    MultiGraph out(g.vertex_count());
    for (const auto& e : g.edges()) out.add(e.u, e.v, sign != 0 && e.sign < 0 ? kNegative : kPositive);
    return out;
}

/// Merge v into u and drop v.
inline MultiGraph contract(const MultiGraph& g, int u, int v) {
    MultiGraph out(g.n - 1);
    auto idx = [v](int i) { return i < v ? i : i - 1; };
    for (int i = 0; i < g.n; ++i) {
        if (i == v) continue;
        for (int j = i + 1; j < g.n; ++j) {
            if (j == v) continue;
            if (const auto k = g.at(i, j)) out.add(idx(i), idx(j), k);
        }
    }
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        if (const auto k = g.at(v, w)) out.add(idx(u), idx(w), k);
    }
    return out;
}

/// Vertex sets of the blocks with at least one edge.
inline std::vector<std::vector<int>> vertex_blocks(const MultiGraph& g) {
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<int>> out;
    int clock = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = clock++;
        for (int w = 0; w < g.n; ++w) {
            if (w == u || g.at(u, w) == 0 || w == parent) continue;
            if (disc[w] < 0) {
                stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<int> vs;
                    std::pair<int, int> top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        vs.push_back(top.first);
                        vs.push_back(top.second);
                    } while (top != std::make_pair(u, w));
                    std::sort(vs.begin(), vs.end());
                    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                    out.push_back(std::move(vs));
                }
            } else if (disc[w] < disc[u]) {
                stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return out;
}

inline MultiGraph induced(const MultiGraph& g, const std::vector<int>& vs) {
    MultiGraph out(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (const auto k = g.at(vs[i], vs[j])) out.add(static_cast<int>(i), static_cast<int>(j), k);
    return out;
}

inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Colour refinement: each vertex's colour absorbs the sorted multiset of
/// (multiplicity, neighbour colour) pairs until the partition stabilizes.
inline std::vector<std::uint64_t> refine_colors(const MultiGraph& g) {
    std::vector<std::uint64_t> color(g.n, 1);
    std::size_t classes = 1;
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::uint64_t> next(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<std::uint64_t> sig;
            for (int w = 0; w < g.n; ++w)
                if (const auto k = g.at(v, w)) sig.push_back(mix(color[w] * 131 + k));
            std::sort(sig.begin(), sig.end());
            std::uint64_t h = mix(color[v]);
            for (auto s : sig) h = mix(h ^ s);
            next[v] = h;
        }
        auto sorted = next;
        std::sort(sorted.begin(), sorted.end());
        const auto now = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
        color = std::move(next);
        if (now == classes) break;
        classes = now;
    }
    return color;
}

inline std::uint64_t graph_hash(const MultiGraph& g, const std::vector<std::uint64_t>& colors) {
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = mix(static_cast<std::uint64_t>(g.n));
    for (auto c : sorted) h = mix(h ^ c);
    return h;
}

/// Exact isomorphism test guided by refined colours.
inline bool isomorphic(const MultiGraph& a, const std::vector<std::uint64_t>& ca, const MultiGraph& b,
                       const std::vector<std::uint64_t>& cb) {
    if (a.n != b.n) return false;
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    const int n = a.n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> extend = [&](int depth) {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) ok = a.at(v, order[i]) == b.at(w, map[order[i]]);
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(depth + 1)) return true;
            used[w] = 0;
        }
        map[v] = -1;
        return false;
    };
    return extend(0);
}

/// Exhaustive maximum with memoization on blocks up to isomorphism and a
/// min(vertices - 1, current movable edges) cutoff.
class IndexSearch {
public:
    explicit IndexSearch(int sign) : sign_(sign) {}

    int value(const MultiGraph& g) {
        int total = 0;
        for (const auto& vs : vertex_blocks(g)) total += block_value(induced(g, vs));
        return total;
    }

private:
    struct Entry {
        MultiGraph graph;
        std::vector<std::uint64_t> colors;
        int value;
    };

    int block_value(const MultiGraph& b) {
        if (b.n == 2) return movable(b.at(0, 1), sign_) ? 1 : 0;
        std::vector<std::pair<int, int>> lone;
        for (int i = 0; i < b.n; ++i)
            for (int j = i + 1; j < b.n; ++j)
                if (movable(b.at(i, j), sign_)) lone.emplace_back(i, j);
        if (lone.empty()) return 0;

        auto colors = refine_colors(b);
        const auto key = graph_hash(b, colors);
        auto& bucket = memo_[key];
        for (const auto& e : bucket)
            if (isomorphic(b, colors, e.graph, e.colors)) return e.value;

        const int bound = std::min<int>(b.n - 1, static_cast<int>(lone.size()));
        int best = 0;
        for (auto [u, v] : lone) {
            best = std::max(best, 1 + value(contract(b, u, v)));
            if (best == bound) break;
        }
        memo_[key].push_back({b, std::move(colors), best});
        return best;
    }

    int sign_;
    std::unordered_map<std::uint64_t, std::vector<Entry>> memo_;
};

/// Lexicographically smallest edge-id sequence among the longest ones.
inline ReductionWitness extract_witness(const SignedMultigraph& g, int sign, IndexSearch& search, int target) {
    const int n = g.vertex_count();
    std::vector<int> cls(n);
    std::iota(cls.begin(), cls.end(), 0);
    std::vector<SignedEdge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::vector<char> used(edges.size(), 0);
    ReductionWitness out;

    auto state = [&](const std::vector<int>& classes) {
        std::vector<int> reps = classes;
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        MultiGraph m(static_cast<int>(reps.size()));
        auto pos = [&](int c) { return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), c) - reps.begin()); };
        for (const auto& e : edges) {
            const int a = classes[e.u], b = classes[e.v];
            if (a != b) m.add(pos(a), pos(b), sign != 0 && e.sign < 0 ? kNegative : kPositive);
        }
        return m;
    };

    int remaining = target;
    while (remaining > 0) {
        bool moved = false;
        for (std::size_t i = 0; i < edges.size() && !moved; ++i) {
            const auto& e = edges[i];
            const int a = cls[e.u], b = cls[e.v];
            if (a == b || (sign != 0 && e.sign != sign)) continue;
            int mult = 0;
            for (const auto& f : edges)
                if ((cls[f.u] == a && cls[f.v] == b) || (cls[f.u] == b && cls[f.v] == a)) ++mult;
            if (mult != 1) continue;
            auto next = cls;
            const int lo = std::min(a, b), hi = std::max(a, b);
            for (auto& c : next)
                if (c == hi) c = lo;
            if (search.value(state(next)) != remaining - 1) continue;
            out.push_back({e.id, e.sign, lo, hi});
            cls = std::move(next);
            --remaining;
            moved = true;
        }
        if (!moved) fail(Errc::IterationLimit, "witness extraction lost the optimum");
    }
    return out;
}

inline std::pair<int, ReductionWitness> index_with_witness(const SignedMultigraph& g, int sign) {
    IndexSearch search(sign);
    const int value = search.value(to_multigraph(g, sign));
    return {value, extract_witness(g, sign, search, value)};
}

} // namespace detail

/// Exact ind, ind+, ind- with witnesses; nullopt when the graph exceeds the
/// exact-search vertex cap.
inline std::optional<IndexReport> try_ind_all(const SignedMultigraph& g, const IndexOptions& opts = {}) {
    if (g.vertex_count() > opts.max_vertices) return std::nullopt;
    IndexReport r;
    std::tie(r.ind, r.witness) = detail::index_with_witness(g, 0);
    std::tie(r.ind_plus, r.witness_plus) = detail::index_with_witness(g, 1);
    std::tie(r.ind_minus, r.witness_minus) = detail::index_with_witness(g, -1);
    return r;
}

inline IndexReport ind_all(const SignedMultigraph& g, const IndexOptions& opts = {}) {
    auto r = try_ind_all(g, opts);
    if (!r)
        fail(Errc::SizeLimit, "graph has " + std::to_string(g.vertex_count()) + " vertices, exact search cap is " +
                                  std::to_string(opts.max_vertices));
    return *r;
}

/// Replays a witness on g: every step must contract the unique edge between
/// its two current vertex classes, and carry the given sign unless sign is 0.
inline bool replay_witness(const SignedMultigraph& g, const ReductionWitness& w, int sign = 0) {
    std::vector<int> cls(g.vertex_count());
    std::iota(cls.begin(), cls.end(), 0);
    for (const auto& step : w) {
        const auto it = std::find_if(g.edges().begin(), g.edges().end(), [&](const auto& e) { return e.id == step.crossing; });
        if (it == g.edges().end() || it->sign != step.sign || (sign != 0 && it->sign != sign)) return false;
        const int a = cls[it->u], b = cls[it->v];
        if (a == b || std::min(a, b) != step.u || std::max(a, b) != step.v) return false;
        int mult = 0;
        for (const auto& f : g.edges())
            if ((cls[f.u] == a && cls[f.v] == b) || (cls[f.u] == b && cls[f.v] == a)) ++mult;
        if (mult != 1) return false;
        for (auto& c : cls)
            if (c == step.v) c = step.u;
    }
    return true;
}

struct LonePair {
    int u = 0;
    int v = 0;
    int crossing = 0;
    friend bool operator==(const LonePair&, const LonePair&) = default;
};

struct DhlResult {
    bool has_lone_pair = false;
    std::vector<LonePair> pairs;
};

/// Vertex pairs joined by exactly one edge, ordered by (u, v).
inline DhlResult dhl_check(const SignedMultigraph& g) {
    DhlResult r;
    for (const auto& e : g.edges()) {
        if (g.multiplicity(e.u, e.v) == 1) r.pairs.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.id});
    }
    std::sort(r.pairs.begin(), r.pairs.end(), [](const auto& a, const auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    r.has_lone_pair = !r.pairs.empty();
    return r;
}

inline nlohmann::json to_json(const ReductionWitness& w) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : w) out.push_back({{"crossing", s.crossing}, {"sign", s.sign}, {"u", s.u}, {"v", s.v}});
    return out;
}

inline nlohmann::json to_json(const IndexReport& r) {
    return {{"ind", r.ind},
            {"ind_plus", r.ind_plus},
            {"ind_minus", r.ind_minus},
            {"witness", to_json(r.witness)},
            {"witness_plus", to_json(r.witness_plus)},
            {"witness_minus", to_json(r.witness_minus)}};
}

inline nlohmann::json to_json(const DhlResult& r) {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : r.pairs) ps.push_back({{"u", p.u}, {"v", p.v}, {"crossing", p.crossing}});
    return {{"has_lone_pair", r.has_lone_pair}, {"pairs", ps}};
}

} // namespace qpk
