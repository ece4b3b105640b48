#pragma once

// Diagram surgery that keeps the link type: curls and connected sums.

#include <string>
#include <vector>

#include "qpknot/diagram.hpp"

namespace qpk {

/// Adds a Reidemeister I curl on `arc`.  The new crossing has the given sign
/// and is met first on its under-strand when `under_first`.  The curl's arcs
/// get the two new highest ids.
inline Diagram insert_kink(const Diagram& d, int arc, int sign, bool under_first) {
    if (arc < 0 || arc >= d.arc_count()) fail(Errc::Range, "arc " + std::to_string(arc) + " out of range");
    const int loop = d.arc_count(), rest = d.arc_count() + 1;
    auto xs = d.crossings();
    auto& h = xs[d.head(arc)];
    (h.under_in == arc ? h.under_in : h.over_in) = rest;
    if (under_first) xs.push_back({sign, arc, loop, loop, rest});
    else xs.push_back({sign, loop, arc, rest, loop});
    return Diagram::make(d.arc_count() + 2, std::move(xs), d.free_loops());
}

/// Band sum of `a` at `arc_a` and `b` at `arc_b`: the two arcs swap heads.
/// Arcs of `b` are shifted past those of `a`.  A diagram without crossings
/// contributes nothing, so the other summand is returned.
inline Diagram connected_sum(const Diagram& a, const Diagram& b, int arc_a = 0, int arc_b = 0) {
    if (a.crossing_count() == 0) return b;
    if (b.crossing_count() == 0) return a;
    if (arc_a < 0 || arc_a >= a.arc_count() || arc_b < 0 || arc_b >= b.arc_count())
        fail(Errc::Range, "connected sum arc out of range");
    const int off = a.arc_count();
    auto u = disjoint_union(a, b);
    auto xs = u.crossings();
    const int ha = u.head(arc_a), hb = u.head(arc_b + off);
    auto retarget = [&](int k, int from, int to) {
        auto& x = xs[k];
        (x.under_in == from ? x.under_in : x.over_in) = to;
    };
    retarget(ha, arc_a, arc_b + off);
    retarget(hb, arc_b + off, arc_a);
    return Diagram::make(u.arc_count(), std::move(xs), u.free_loops());
}

} // namespace qpk
