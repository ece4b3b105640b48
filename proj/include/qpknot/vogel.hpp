#pragma once

// Vogel's braidization.  Regions of the Seifert smoothing form a tree whose
// edges are the Seifert circles.  The diagram is a closed braid exactly when
// every region touches at most two circles, one on each side.  Otherwise some
// face has boundary edges on two different circles running the same way
// around it, and pushing one edge over the other (a Reidemeister II move)
// merges those circles and splits off a new one.  O(D) and the writhe are
// unchanged and the number of incoherent circle pairs drops, so at most
// (O-1)(O-2)/2 moves are needed; the guard allows faces^2.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "qpknot/braids.hpp"
#include "qpknot/embedding.hpp"
#include "qpknot/homfly.hpp"
#include "qpknot/seifert.hpp"

namespace qpk {

struct BraidizeResult {
    BraidWord word;
    int moves = 0;
    bool verified = false; ///< homfly and component count checked
};

namespace detail {

// Region of the Seifert smoothing containing each face.
struct SeifertRegions {
    std::vector<Face> faces;
    std::vector<int> face_of_dart; // indexed 2*arc + (forward ? 0 : 1)
    std::vector<int> region_of_face;
    int region_count = 0;
};

inline int dart_id(const Dart& t) { return 2 * t.arc + (t.forward ? 0 : 1); }

inline SeifertRegions seifert_regions(const Diagram& d) {
    SeifertRegions r;
    r.faces = faces(d);
    r.face_of_dart.assign(2 * d.arc_count(), -1);
    for (std::size_t f = 0; f < r.faces.size(); ++f)
        for (const auto& t : r.faces[f].boundary) r.face_of_dart[dart_id(t)] = static_cast<int>(f);

    // A face arriving at slot p owns the corner between slots p-1 and p.  The
    // smoothing joins the in/in corner to the out/out corner.
    DisjointSets ds(static_cast<int>(r.faces.size()));
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& x = d.crossing(k);
        const auto slots = ccw_slots(x);
        int in_in = -1, out_out = -1;
        for (int p = 0; p < 4; ++p) {
            const int q = (p + 3) % 4;
            const bool pin = ccw_is_in(x, p), qin = ccw_is_in(x, q);
            if (pin != qin) continue;
            const int f = r.face_of_dart[dart_id({slots[p], pin})];
            (pin ? in_in : out_out) = f;
        }
        ds.unite(in_in, out_out);
    }
    r.region_of_face.assign(r.faces.size(), -1);
    std::vector<int> id(r.faces.size(), -1);
    for (std::size_t f = 0; f < r.faces.size(); ++f) {
        const int root = ds.find(static_cast<int>(f));
        if (id[root] < 0) id[root] = r.region_count++;
        r.region_of_face[f] = id[root];
    }
    return r;
}

struct VogelMove {
    Dart over;
    Dart under;
};

// First face, then first pair of boundary darts in it, lying on different
// circles and both running with (or both against) the face.
inline std::optional<VogelMove> find_vogel_move(const std::vector<Face>& fs, const std::vector<int>& circle_of_arc) {
    for (const auto& f : fs) {
        const auto& b = f.boundary;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (b[i].forward == b[j].forward && circle_of_arc[b[i].arc] != circle_of_arc[b[j].arc])
                    return VogelMove{b[i], b[j]};
    }
    return std::nullopt;
}

// Push the over arc across the face and over the under arc.  Along the over
// arc the new crossings are met as x then y, along the under arc as y then x.
inline Diagram apply_vogel_move(const Diagram& d, const VogelMove& m) {
    const int a1 = m.over.arc, a2 = m.under.arc;
    const int n = d.arc_count();
    const int m1 = n, e1 = n + 1, m2 = n + 2, e2 = n + 3;
    auto xs = d.crossings();
    auto retarget = [&](int k, int from, int to) {
        auto& x = xs[k];
        if (x.under_in == from) x.under_in = to;
        else x.over_in = to;
    };
    retarget(d.head(a1), a1, e1);
    retarget(d.head(a2), a2, e2);
    const int sx = m.over.forward ? 1 : -1;
    xs.push_back(Crossing{sx, m2, a1, e2, m1});
    xs.push_back(Crossing{-sx, a2, m1, m2, e1});
    return Diagram::make(n + 4, std::move(xs), d.free_loops());
}

// Read the word of a diagram whose Seifert regions form a coherent path.
inline std::optional<BraidWord> read_braid(const Diagram& d) {
    const auto sa = seifert_analysis(d);
    const auto reg = seifert_regions(d);
    const int nc = sa.circle_count;
    std::vector<int> left(nc, -1), right(nc, -1);
    for (int a = 0; a < d.arc_count(); ++a) {
        const int c = sa.circle_of_arc[a];
        left[c] = reg.region_of_face[reg.face_of_dart[dart_id({a, true})]];
        right[c] = reg.region_of_face[reg.face_of_dart[dart_id({a, false})]];
    }
    std::vector<int> left_count(reg.region_count, 0), right_count(reg.region_count, 0);
    for (int c = 0; c < nc; ++c) {
        ++left_count[left[c]];
        ++right_count[right[c]];
    }
    for (int g = 0; g < reg.region_count; ++g)
        if (left_count[g] > 1 || right_count[g] > 1) return std::nullopt;

    // Circles from the region that is only ever on the right (the axis side).
    int start = -1;
    for (int c = 0; c < nc && start < 0; ++c)
        if (left_count[right[c]] == 0) start = c;
    if (start < 0) return std::nullopt;
    std::vector<int> position(nc, -1), order;
    for (int c = start; c >= 0;) {
        position[c] = static_cast<int>(order.size());
        order.push_back(c);
        int next = -1;
        for (int e = 0; e < nc; ++e)
            if (right[e] == left[c] && position[e] < 0) next = e;
        c = next;
    }
    if (static_cast<int>(order.size()) != nc) return std::nullopt;

    // Cut every circle along one path from the axis outwards, then order the
    // crossings along each cut circle.
    std::vector<std::vector<int>> arcs_of(nc);
    for (int a = 0; a < d.arc_count(); ++a) arcs_of[sa.circle_of_arc[a]].push_back(a);
    std::vector<int> cut(nc, -1);
    cut[order[0]] = arcs_of[order[0]].front();
    for (int i = 1; i < nc; ++i) {
        const int face = reg.face_of_dart[dart_id({cut[order[i - 1]], true})];
        for (const auto& t : reg.faces[face].boundary)
            if (sa.circle_of_arc[t.arc] == order[i] && (cut[order[i]] < 0 || t.arc < cut[order[i]])) cut[order[i]] = t.arc;
        if (cut[order[i]] < 0) return std::nullopt;
    }
    const int c = d.crossing_count();
    std::vector<std::vector<int>> after(c);
    std::vector<int> indegree(c, 0);
    for (int i = 0; i < nc; ++i) {
        int prev = -1;
        int a = cut[order[i]];
        do {
            const int k = d.head(a);
            if (prev >= 0) {
                after[prev].push_back(k);
                ++indegree[k];
            }
            prev = k;
            a = d.seifert_next(a);
        } while (a != cut[order[i]]);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int k = 0; k < c; ++k)
        if (indegree[k] == 0) ready.push(k);
    BraidWord w{nc, {}};
    while (!ready.empty()) {
        const int k = ready.top();
        ready.pop();
        const auto& e = sa.graph.edges()[k];
        const int lo = std::min(position[e.u], position[e.v]);
        if (std::abs(position[e.u] - position[e.v]) != 1) return std::nullopt;
        w.letters.push_back(e.sign * (lo + 1));
        for (int j : after[k])
            if (--indegree[j] == 0) ready.push(j);
    }
    if (static_cast<int>(w.letters.size()) != c) return std::nullopt;
    return w;
}

} // namespace detail

/// Closed-braid word on O(d) strands with the writhe of d.  The result is
/// checked against d by HOMFLY polynomial and component count whenever both
/// diagrams fit under the HOMFLY cap.
inline BraidizeResult vogel_braidize(const Diagram& d, const HomflyOptions& opts = {}) {
    if (split_parts(d) > 1) fail(Errc::SplitInput, "braidization needs a connected diagram");
    if (!is_planar(d)) fail(Errc::NonAdmissible, "crossing data does not describe a planar diagram");
    try {
        (void)seifert_analysis(d);
    } catch (const Error& e) {
        if (e.code() == Errc::LoopEdge) fail(Errc::NonAdmissible, e.what());
        throw;
    }
    BraidizeResult out;
    if (d.crossing_count() == 0) {
        out.word = BraidWord{1, {}};
        out.verified = true;
        return out;
    }

    Diagram cur = d;
    const int n_faces = static_cast<int>(faces(d).size());
    const int guard = n_faces * n_faces;
    for (;;) {
        const auto sa = seifert_analysis(cur);
        const auto mv = detail::find_vogel_move(faces(cur), sa.circle_of_arc);
        if (!mv) break;
        if (out.moves == guard)
            fail(Errc::IterationLimit, "no closed braid after " + std::to_string(guard) + " Vogel moves");
        cur = detail::apply_vogel_move(cur, *mv);
        ++out.moves;
    }
    const auto w = detail::read_braid(cur);
    if (!w) fail(Errc::IterationLimit, "no Vogel move left but the diagram is not a closed braid");
    out.word = *w;

    const Diagram closed = closure(out.word);
    if (closed.crossing_count() <= opts.max_crossings && d.crossing_count() <= opts.max_crossings) {
        if (counts(closed).link_components != counts(d).link_components || homfly(closed, opts) != homfly(d, opts))
            fail(Errc::Invariant, "braidization changed the link");
        out.verified = true;
    }
    return out;
}

} // namespace qpk
