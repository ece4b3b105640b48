#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace qpk;

namespace {

SignedMultigraph graph(int n, std::vector<std::array<int, 3>> es) {
    std::vector<SignedEdge> out;
    for (std::size_t i = 0; i < es.size(); ++i) out.push_back({es[i][0], es[i][1], es[i][2], static_cast<int>(i)});
    return SignedMultigraph::make(n, out);
}

// Lexicographically smallest crossing-id sequence of maximum length, found
// by listing every legal sequence.
std::vector<int> smallest_longest_sequence(const SignedMultigraph& g) {
    std::vector<int> best, cur;
    std::vector<int> cls(g.vertex_count());
    std::iota(cls.begin(), cls.end(), 0);
    std::function<void()> rec = [&] {
        if (cur.size() > best.size() || (cur.size() == best.size() && cur < best)) best = cur;
        for (const auto& e : g.edges()) {
            const int a = cls[e.u], b = cls[e.v];
            if (a == b) continue;
            int mult = 0;
            for (const auto& f : g.edges())
                if ((cls[f.u] == a && cls[f.v] == b) || (cls[f.u] == b && cls[f.v] == a)) ++mult;
            if (mult != 1) continue;
            const auto saved = cls;
            for (auto& c : cls)
                if (c == std::max(a, b)) c = std::min(a, b);
            cur.push_back(e.id);
            rec();
            cur.pop_back();
            cls = saved;
        }
    };
    rec();
    return best;
}

std::vector<int> ids(const ReductionWitness& w) {
    std::vector<int> out;
    for (const auto& s : w) out.push_back(s.crossing);
    return out;
}

} // namespace

TEST(IndAll, TrefoilGraph) {
    const auto r = ind_all(seifert_analysis(fixtures::trefoil()).graph);
    EXPECT_EQ(r.ind, 0);
    EXPECT_EQ(r.ind_plus, 0);
    EXPECT_EQ(r.ind_minus, 0);
}

TEST(IndAll, Path) {
    const auto r = ind_all(graph(3, {{0, 1, 1}, {1, 2, 1}}));
    EXPECT_EQ(r.ind, 2);
    EXPECT_EQ(r.ind_plus, 2);
    EXPECT_EQ(r.ind_minus, 0);
}

TEST(IndAll, Triangle) {
    const auto g = graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    EXPECT_EQ(ind_all(g).ind, 1);
    EXPECT_EQ(oracle::brute_index(oracle::matrix_of(g)), 1);
}

TEST(IndAll, SizeCap) {
    std::vector<std::array<int, 3>> es;
    for (int v = 0; v + 1 < 16; ++v) es.push_back({v, v + 1, 1});
    const auto g = graph(16, es);
    try {
        ind_all(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SizeLimit);
    }
    EXPECT_FALSE(try_ind_all(g).has_value());
    EXPECT_EQ(ind_all(g, {16}).ind, 15);
}

TEST(IndAll, WitnessesReplayAndAreSmallestLongest) {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        const auto g = random_graph(rng, 5, 7);
        const auto r = ind_all(g);
        EXPECT_EQ(static_cast<int>(r.witness.size()), r.ind);
        EXPECT_EQ(static_cast<int>(r.witness_plus.size()), r.ind_plus);
        EXPECT_EQ(static_cast<int>(r.witness_minus.size()), r.ind_minus);
        EXPECT_TRUE(replay_witness(g, r.witness));
        EXPECT_TRUE(replay_witness(g, r.witness_plus, 1));
        EXPECT_TRUE(replay_witness(g, r.witness_minus, -1));
        EXPECT_EQ(ids(r.witness), smallest_longest_sequence(g));
    }
}

TEST(IndAll, AgreesWithOracleOnRandomLargerGraphs) {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_graph(rng, 7, 10);
        const auto r = ind_all(g);
        EXPECT_EQ(r.ind, oracle::brute_index(oracle::matrix_of(g)));
        EXPECT_EQ(r.ind_plus, oracle::brute_signed_index(g, 1));
        EXPECT_EQ(r.ind_minus, oracle::brute_signed_index(g, -1));
        EXPECT_GE(r.ind_plus + r.ind_minus, r.ind);
    }
}

TEST(IndAll, DisjointUnionAndBlocksAdd) {
    Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_graph(rng, 4, 5), b = random_graph(rng, 4, 5);
        auto es = a.edges();
        for (auto e : b.edges()) {
            e.u += a.vertex_count();
            e.v += a.vertex_count();
            e.id += a.edge_count();
            es.push_back(e);
        }
        const auto u = SignedMultigraph::make(a.vertex_count() + b.vertex_count(), es);
        EXPECT_EQ(ind_all(u).ind, ind_all(a).ind + ind_all(b).ind);
    }
}

TEST(IndAll, BlockAdditivityAgainstOracle) {
    // All loop-free multigraphs on up to 6 vertices with up to 8 edges would
    // take minutes; the labelled unsigned ones on 5 vertices with 7 edges are
    // covered exhaustively by the acceptance runner, so sample 6/8 here.
    Rng rng(34);
    for (int i = 0; i < 400; ++i) {
        const auto g = random_graph(rng, 6, 8);
        int sum = 0;
        for (const auto& b : blocks(g)) sum += oracle::brute_index(oracle::matrix_of(block_graph(g, b)));
        EXPECT_EQ(ind_all(g).ind, sum);
        EXPECT_EQ(oracle::brute_index(oracle::matrix_of(g)), sum);
    }
}

TEST(IndAll, MirrorSwapsSigns) {
    Rng rng(35);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_graph(rng, 6, 8);
        const auto r = ind_all(g), m = ind_all(g.negated());
        EXPECT_EQ(m.ind_minus, r.ind_plus);
        EXPECT_EQ(m.ind_plus, r.ind_minus);
        EXPECT_EQ(m.ind, r.ind);
    }
}

TEST(IndAll, HomogeneousSignIndicesAddOverBlocks) {
    corpus::for_each_word(4, 6, [&](const BraidWord& w) {
        const auto d = closure(w);
        if (!homogeneity(d).is_homogeneous) return;
        const auto g = seifert_analysis(d).graph;
        const auto r = ind_all(g);
        int plus = 0, minus = 0;
        for (const auto& b : blocks(g)) {
            const auto sub = ind_all(block_graph(g, b));
            plus += sub.ind_plus;
            minus += sub.ind_minus;
        }
        EXPECT_EQ(r.ind_plus, plus) << to_text(w);
        EXPECT_EQ(r.ind_minus, minus) << to_text(w);
        EXPECT_EQ(r.ind, r.ind_plus + r.ind_minus) << to_text(w);
    });
}

// Negative special factors without valence-one vertices can never be
// contracted down to one circle, so ind- falls strictly short of O+ - 1.
TEST(IndAll, ReducedNegativeFactorsFallShort) {
    int seen = 0;
    auto check = [&](const Diagram& d) {
        const auto r = homogeneity(d);
        for (const auto& f : r.factors) {
            if (f.sign != -1 || f.crossings.size() == 1) continue;
            const auto sub = factor_diagram(d, f);
            const int im = ind_all(seifert_analysis(sub).graph).ind_minus;
            EXPECT_LT(im, o_plus(sub) - 1) << to_text(d);
            ++seen;
        }
    };
    check(fixtures::figure_eight());
    corpus::for_each_word(4, 6, [&](const BraidWord& w) {
        const auto d = closure(w);
        if (split_parts(d) == 1 && homogeneity(d).is_homogeneous) check(d);
    });
    EXPECT_GT(seen, 50);
}

TEST(DhlCheck, Examples) {
    EXPECT_FALSE(dhl_check(seifert_analysis(fixtures::trefoil()).graph).has_lone_pair);
    const auto k = dhl_check(seifert_analysis(fixtures::kink(1)).graph);
    EXPECT_TRUE(k.has_lone_pair);
    ASSERT_EQ(k.pairs.size(), 1u);
    EXPECT_EQ(k.pairs[0], (LonePair{0, 1, 0}));
    EXPECT_FALSE(dhl_check(seifert_analysis(fixtures::figure_eight()).graph).has_lone_pair);
}
