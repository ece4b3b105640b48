#pragma once

// Face structure of a diagram viewed as a 4-valent map.
//
// Counterclockwise slot order around a crossing, with the under-strand drawn
// south to north:
//   positive: under_in, over_out, under_out, over_in
//   negative: under_in, over_in, under_out, over_out

#include <array>
#include <vector>

#include "qpknot/diagram.hpp"

namespace qpk {

inline std::array<int, 4> ccw_slots(const Crossing& x) {
    if (x.sign > 0) return {x.under_in, x.over_out, x.under_out, x.over_in};
    return {x.under_in, x.over_in, x.under_out, x.over_out};
}

/// One side of one arc: the arc traversed with (forward) or against its
/// orientation, with the face on the left of the direction of travel.
struct Dart {
    int arc = 0;
    bool forward = true;
    friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
    std::vector<Dart> boundary;
};

namespace detail {

inline bool ccw_is_in(const Crossing& x, int p) { return p == 0 || p == (x.sign > 0 ? 3 : 1); }

// Position of an arc end in the ccw order of the crossing it touches.
inline int ccw_position(const Crossing& x, int arc, bool as_in) {
    const auto r = ccw_slots(x);
    for (int p = 0; p < 4; ++p)
        if (r[p] == arc && ccw_is_in(x, p) == as_in) return p;
    return -1;
}

} // namespace detail

/// Faces of the map, each listed from its smallest-id dart, ordered by first
/// dart.  Free loops contribute nothing.
inline std::vector<Face> faces(const Diagram& d) {
    const int n = d.arc_count();
    auto dart_index = [](Dart t) { return 2 * t.arc + (t.forward ? 0 : 1); };
    std::vector<char> seen(2 * n, 0);
    std::vector<Face> out;
    for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        Face f;
        Dart t{s / 2, s % 2 == 0};
        while (!seen[dart_index(t)]) {
            seen[dart_index(t)] = 1;
            f.boundary.push_back(t);
            // arrive at the crossing at the far end of the dart
            const int k = t.forward ? d.head(t.arc) : d.tail(t.arc);
            const auto& x = d.crossing(k);
            const int p = detail::ccw_position(x, t.arc, t.forward);
            const int q = (p + 3) % 4;
            const int b = ccw_slots(x)[q];
            // leaving along an out-slot follows the arc, along an in-slot goes against it
            t = Dart{b, !detail::ccw_is_in(x, q)};
        }
        out.push_back(std::move(f));
    }
    return out;
}

/// Euler check on every connected piece: a piece with c crossings must have
/// c + 2 faces for the code to be realizable on the sphere.
inline bool is_planar(const Diagram& d) {
    if (d.crossing_count() == 0) return true;
    DisjointSets ds(d.arc_count());
    for (const auto& x : d.crossings()) {
        ds.unite(x.under_in, x.over_in);
        ds.unite(x.under_in, x.under_out);
        ds.unite(x.under_in, x.over_out);
    }
    const int pieces = ds.count_roots();
    return static_cast<int>(faces(d).size()) == d.crossing_count() + 2 * pieces;
}

} // namespace qpk
