#pragma once

// Seeded random inputs for self-tests and property checks.

#include <algorithm>
#include <random>
#include <vector>

#include "qpknot/braids.hpp"
#include "qpknot/construct.hpp"
#include "qpknot/graph.hpp"

namespace qpk {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline BraidWord random_braid(Rng& rng, int strands, int length) {
    BraidWord w{strands, {}};
    if (strands < 2) return w;
    for (int i = 0; i < length; ++i) {
        const int g = uniform(rng, 1, strands - 1);
        w.letters.push_back(uniform(rng, 0, 1) ? g : -g);
    }
    return w;
}

/// A braid closure, possibly with curls and a second summand, with at most
/// `max_crossings` crossings.  Every strand carries a letter, so the diagram
/// has no free loops unless it is crossingless.
inline Diagram random_diagram(Rng& rng, int max_crossings) {
    const int budget = std::max(1, max_crossings);
    auto closed = [&](int len) {
        const int n = uniform(rng, 2, 4);
        auto w = random_braid(rng, n, len);
        for (int g = 1; g < n; ++g) // keep the closure connected
            if (std::none_of(w.letters.begin(), w.letters.end(), [g](int l) { return std::abs(l) == g; }))
                w.letters.push_back(uniform(rng, 0, 1) ? g : -g);
        return closure(w);
    };
    Diagram d = closed(uniform(rng, 1, std::max(1, budget * 2 / 3)));
    if (d.crossing_count() > budget) d = closure(BraidWord{2, {1}});
    if (d.crossing_count() + 3 <= budget && uniform(rng, 0, 3) == 0) {
        const Diagram e = closed(uniform(rng, 1, budget - d.crossing_count() - 1));
        if (d.crossing_count() + e.crossing_count() <= budget)
            d = connected_sum(d, e, uniform(rng, 0, d.arc_count() - 1), uniform(rng, 0, e.arc_count() - 1));
    }
    while (d.crossing_count() < budget && uniform(rng, 0, 2) == 0)
        d = insert_kink(d, uniform(rng, 0, d.arc_count() - 1), uniform(rng, 0, 1) ? 1 : -1, uniform(rng, 0, 1));
    return d;
}

/// Loop-free signed multigraph; edge ids are edge positions.
inline SignedMultigraph random_graph(Rng& rng, int max_vertices, int max_edges) {
    const int n = uniform(rng, 2, std::max(2, max_vertices));
    const int m = uniform(rng, 0, max_edges);
    std::vector<SignedEdge> es;
    for (int i = 0; i < m; ++i) {
        const int u = uniform(rng, 0, n - 1);
        int v = uniform(rng, 0, n - 2);
        if (v >= u) ++v;
        es.push_back({u, v, uniform(rng, 0, 1) ? 1 : -1, i});
    }
    return SignedMultigraph::make(n, std::move(es));
}

inline QPWitness random_witness(Rng& rng, int strands, int factors, int max_conj) {
    QPWitness q{strands, {}};
    for (int i = 0; i < factors; ++i) {
        QPFactor f;
        f.gen = uniform(rng, 1, strands - 1);
        f.conj = random_braid(rng, strands, uniform(rng, 0, max_conj)).letters;
        q.factors.push_back(std::move(f));
    }
    return q;
}

} // namespace qpk
