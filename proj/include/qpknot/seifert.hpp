#pragma once

// Seifert circles, the signed Seifert graph, O(D), O+(D), sl(D) and the
// block (star-factor) classification of the Seifert graph.

#include <algorithm>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/diagram.hpp"
#include "qpknot/graph.hpp"

namespace qpk {

struct SeifertAnalysis {
    int circle_count = 0;
    std::vector<int> circle_of_arc;
    SignedMultigraph graph;
};

/// Circles are orbits of arcs under oriented smoothing, numbered by their
/// smallest arc; free loops follow as isolated vertices.  Edge i of the graph
/// is crossing i.
inline SeifertAnalysis seifert_analysis(const Diagram& d) {
    SeifertAnalysis s;
    const auto circles = orbits(d.arc_count(), [&](int a) { return d.seifert_next(a); });
    s.circle_of_arc.assign(d.arc_count(), -1);
    for (std::size_t c = 0; c < circles.size(); ++c)
        for (int a : circles[c]) s.circle_of_arc[a] = static_cast<int>(c);
    s.circle_count = static_cast<int>(circles.size()) + d.free_loops();
    std::vector<SignedEdge> es;
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& x = d.crossing(k);
        const int u = s.circle_of_arc[x.under_in];
        const int v = s.circle_of_arc[x.over_in];
        if (u == v)
            fail(Errc::LoopEdge, "crossing " + std::to_string(k) + " joins Seifert circle " + std::to_string(u) +
                                     " to itself");
        es.push_back({u, v, x.sign, k});
    }
    s.graph = SignedMultigraph::make(s.circle_count, std::move(es));
    return s;
}

inline int seifert_circles(const Diagram& d) { return seifert_analysis(d).circle_count; }

/// Components after smoothing only the negative crossings.
inline int o_plus(const Diagram& d) {
    DisjointSets ds(d.arc_count());
    for (const auto& x : d.crossings()) {
        ds.unite(x.under_in, x.over_out);
        ds.unite(x.over_in, x.under_out);
        if (x.sign > 0) ds.unite(x.under_in, x.over_in);
    }
    return ds.count_roots() + d.free_loops();
}

inline int diagram_sl(const Diagram& d) {
    const auto c = counts(d);
    return -seifert_circles(d) + c.c_plus - c.c_minus;
}

struct Factor {
    std::vector<int> vertices;  ///< Seifert circle ids
    std::vector<int> crossings; ///< crossing ids
    int sign = 0;               ///< +1, -1, 0 = mixed
};

struct HomogeneityReport {
    bool is_homogeneous = true;
    std::vector<Factor> factors;
    bool is_reduced = true;
    bool is_special = true;
    bool is_positive_diagram = true;
};

inline HomogeneityReport homogeneity(const Diagram& d) {
    const auto s = seifert_analysis(d);
    HomogeneityReport r;
    bool any_pos = false, any_neg = false;
    for (const auto& b : blocks(s.graph)) {
        Factor f;
        f.vertices = b.vertices;
        f.sign = b.sign;
        std::vector<int> valence(s.circle_count, 0);
        for (int ei : b.edges) {
            const auto& e = s.graph.edges()[ei];
            f.crossings.push_back(e.id);
            ++valence[e.u];
            ++valence[e.v];
            (e.sign > 0 ? any_pos : any_neg) = true;
        }
        if (f.sign == 0) r.is_homogeneous = false;
        for (int v : f.vertices)
            if (valence[v] == 1) r.is_reduced = false;
        r.factors.push_back(std::move(f));
    }
    r.is_special = !(any_pos && any_neg);
    r.is_positive_diagram = !any_neg;
    return r;
}

/// The sub-diagram carried by one star factor: every crossing outside the
/// factor is smoothed and the circles no longer touched are discarded.
inline Diagram factor_diagram(const Diagram& d, const Factor& f) {
    std::vector<std::pair<int, Resolution>> rest;
    for (int k = 0; k < d.crossing_count(); ++k)
        if (std::find(f.crossings.begin(), f.crossings.end(), k) == f.crossings.end())
            rest.emplace_back(k, Resolution::Smooth);
    auto sub = splice(d, rest);
    return Diagram::make(sub.arc_count(), sub.crossings(), 0);
}

inline nlohmann::json to_json(const HomogeneityReport& r) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : r.factors) fs.push_back({{"sign", f.sign}, {"circles", f.vertices}, {"crossings", f.crossings}});
    return {{"is_homogeneous", r.is_homogeneous},
            {"is_reduced", r.is_reduced},
            {"is_special", r.is_special},
            {"is_positive_diagram", r.is_positive_diagram},
            {"factors", fs}};
}

} // namespace qpk
