#pragma once

// HOMFLY polynomial by skein recursion on descending diagrams.
//
// Convention: v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1, so a
// k-component unlink evaluates to delta^(k-1) with delta = (v^-1 - v) / z.
//
// Components are visited in order of their smallest arc, each from that
// arc.  The first crossing met first on its under-strand is switched (one
// branch) and smoothed (other branch).  A diagram with no such crossing is
// descending and therefore an unlink.
//
// Before branching, nugatory crossings (bridges of the Seifert graph) are
// untwisted away; this leaves P unchanged and keeps braid words with many
// stabilizations tractable.

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "qpknot/diagram.hpp"
#include "qpknot/graph_index.hpp"
#include "qpknot/laurent.hpp"
#include "qpknot/seifert.hpp"

namespace qpk {

struct HomflyOptions {
    int max_crossings = 16;
    int memo_threshold = 10; ///< memoize sub-diagrams from this crossing count on
};

inline LaurentPoly2 homfly_delta() {
    return LaurentPoly2::monomial(1, -1, -1) + LaurentPoly2::monomial(-1, 1, -1);
}

inline LaurentPoly2 unlink_polynomial(int components) { return pow(homfly_delta(), components - 1); }

/// First crossing encountered under-first, or -1 if the diagram descends.
inline int first_discordant_crossing(const Diagram& d) {
    std::vector<char> seen(d.crossing_count(), 0);
    for (const auto& comp : strand_components(d)) {
        for (int a : comp) {
            const int k = d.head(a);
            if (seen[k]) continue;
            seen[k] = 1;
            if (d.arrives_under(a)) return k;
        }
    }
    return -1;
}

namespace detail {

class HomflyEngine {
public:
    explicit HomflyEngine(const HomflyOptions& o) : opts_(o) {}

    LaurentPoly2 eval(const Diagram& in) {
        const Diagram d = drop_nugatory(in);
        const int k = first_discordant_crossing(d);
        if (k < 0) return unlink_polynomial(counts(d).link_components);

        const bool memo = d.crossing_count() >= opts_.memo_threshold;
        std::string key;
        if (memo) {
            key = to_text(d);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        const auto switched = eval(switch_crossing(d, k));
        const auto smoothed = eval(smooth_crossing(d, k));
        LaurentPoly2 p;
        if (d.crossing(k).sign > 0)
            p = switched.shifted(1, 2, 0) + smoothed.shifted(1, 1, 1); // P+ = v^2 P- + v z P0
        else
            p = switched.shifted(1, -2, 0) - smoothed.shifted(1, -1, 1); // P- = v^-2 P+ - v^-1 z P0
        if (memo) memo_.emplace(std::move(key), p);
        return p;
    }

private:
    static Diagram drop_nugatory(const Diagram& d) {
        if (d.crossing_count() == 0) return d;
        const auto g = seifert_analysis(d).graph;
        std::vector<std::pair<int, Resolution>> bridges;
        for (const auto& b : blocks(g))
            if (b.edges.size() == 1) bridges.emplace_back(g.edges()[b.edges.front()].id, Resolution::Erase);
        return bridges.empty() ? d : splice(d, bridges);
    }

    HomflyOptions opts_;
    std::map<std::string, LaurentPoly2> memo_;
};

} // namespace detail

inline LaurentPoly2 homfly(const Diagram& d, const HomflyOptions& opts = {}) {
    if (d.crossing_count() > opts.max_crossings)
        fail(Errc::SizeLimit, "diagram has " + std::to_string(d.crossing_count()) +
                                  " crossings, HOMFLY cap is " + std::to_string(opts.max_crossings));
    detail::HomflyEngine engine(opts);
    return engine.eval(d);
}

struct DegreeReport {
    int min_deg_v = 0;
    int max_deg_v = 0;
    int v_span = 0;
    int mfw_lower = 0;
    int eq1_bound = 0; ///< sl(D) + 1 + 2 ind-(D)
    int eq2_bound = 0; ///< O(D) + c+ - c- - 1 - 2 ind+(D)
    bool eq1_holds = false;
    bool eq2_holds = false;
    bool eq1_tight = false;
    bool eq2_tight = false;
};

/// Lower bound on min deg_v and upper bound on max deg_v from the diagram and
/// its Seifert graph indices, plus the MFW braid-index lower bound.
inline DegreeReport degree_report(const LaurentPoly2& p, const Diagram& d, const IndexReport& idx) {
    DegreeReport r;
    r.min_deg_v = p.min_deg_v();
    r.max_deg_v = p.max_deg_v();
    r.v_span = r.max_deg_v - r.min_deg_v;
    if (r.v_span % 2 != 0) fail(Errc::Invariant, "odd v-span " + std::to_string(r.v_span) + " cannot come from a link");
    r.mfw_lower = r.v_span / 2 + 1;
    const auto c = counts(d);
    const int o = seifert_circles(d);
    r.eq1_bound = -o + c.c_plus - c.c_minus + 1 + 2 * idx.ind_minus;
    r.eq2_bound = o + c.c_plus - c.c_minus - 1 - 2 * idx.ind_plus;
    r.eq1_holds = r.min_deg_v >= r.eq1_bound;
    r.eq2_holds = r.max_deg_v <= r.eq2_bound;
    r.eq1_tight = r.min_deg_v == r.eq1_bound;
    r.eq2_tight = r.max_deg_v == r.eq2_bound;
    return r;
}

inline nlohmann::json to_json(const DegreeReport& r) {
    return {{"min_deg_v", r.min_deg_v},   {"max_deg_v", r.max_deg_v}, {"v_span", r.v_span},
            {"mfw_lower", r.mfw_lower},   {"eq1_bound", r.eq1_bound}, {"eq2_bound", r.eq2_bound},
            {"eq1_holds", r.eq1_holds},   {"eq2_holds", r.eq2_holds}, {"eq1_tight", r.eq1_tight},
            {"eq2_tight", r.eq2_tight}};
}

} // namespace qpk
