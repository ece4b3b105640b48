#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace qpk;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::Invariant;
}

const QPWitness kTrefoilWitness{2, {{{}, 1}, {{}, 1}, {{}, 1}}};

} // namespace

TEST(AbeS, Examples) {
    EXPECT_EQ(abe_s(fixtures::trefoil()), 2);
    EXPECT_EQ(abe_s(fixtures::figure_eight()), 0);
    EXPECT_EQ(diagram_sl(fixtures::torus(3, 4)), 5);
    EXPECT_EQ(o_plus(fixtures::torus(3, 4)), 1);
    EXPECT_EQ(abe_s(fixtures::torus(3, 4)), 6);
}

TEST(AbeS, TorusKnots) {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}})
        EXPECT_EQ(abe_s(fixtures::torus(p, q)), (p - 1) * (q - 1)) << p << "," << q;
}

TEST(AbeS, Refusals) {
    EXPECT_EQ(code_of([] { abe_s(closure(BraidWord{2, {1, -1, 1}})); }), Errc::NotHomogeneous);
    EXPECT_EQ(code_of([] { abe_s(disjoint_union(fixtures::trefoil(), fixtures::trefoil())); }), Errc::SplitInput);
}

TEST(WitnessSl, Examples) {
    const auto t = witness_sl(kTrefoilWitness, fixtures::trefoil());
    EXPECT_EQ(t.sl_max, 1);
    EXPECT_TRUE(t.verified);
    EXPECT_EQ(code_of([] { witness_sl(kTrefoilWitness, fixtures::figure_eight()); }), Errc::WitnessMismatch);
    const auto u = witness_sl({2, {{{}, 1}}}, fixtures::unknot());
    EXPECT_EQ(u.sl_max, -1);
    EXPECT_TRUE(u.verified);
}

TEST(WitnessSl, OverCapIsUnverified) {
    const auto t = witness_sl(kTrefoilWitness, fixtures::trefoil(), {2});
    EXPECT_EQ(t.sl_max, 1);
    EXPECT_FALSE(t.verified);
}

TEST(Bounds, Examples) {
    const auto t = braid_index_bounds(fixtures::trefoil());
    EXPECT_EQ(t.lower_mfw, 2);
    EXPECT_EQ(t.upper_mp, 2);
    EXPECT_EQ(t.upper_refined, 2);
    EXPECT_EQ(t.pinned, 2);
    const auto f = braid_index_bounds(fixtures::figure_eight());
    EXPECT_EQ(f.lower_mfw, 3);
    EXPECT_EQ(f.upper_mp, 3);
    EXPECT_EQ(f.upper_refined, 3);
    EXPECT_EQ(f.pinned, 3);
    const auto k = braid_index_bounds(fixtures::kink(1));
    EXPECT_EQ(k.lower_mfw, 1);
    EXPECT_EQ(k.upper_mp, 1);
    EXPECT_EQ(k.pinned, 1);
}

TEST(Bounds, OverCapOmitsLower) {
    const auto b = braid_index_bounds(fixtures::trefoil(), HomflyOptions{2});
    EXPECT_FALSE(b.lower_mfw.has_value());
    EXPECT_FALSE(b.pinned.has_value());
}

TEST(Certify, TrefoilTheoremOne) {
    const auto c = certify(fixtures::trefoil(), kTrefoilWitness, CertMode::Thm1);
    EXPECT_EQ(c.status, CertStatus::Positive);
    EXPECT_EQ(c.s_value, 2);
    EXPECT_EQ(c.chi4, -1);
    EXPECT_EQ(c.sl_max, 1);
    EXPECT_TRUE(c.witness_verified);
    EXPECT_EQ(c.gap_holds, true);
    ASSERT_FALSE(c.trace.empty());
    EXPECT_EQ(c.trace.back().name, "c-(D)=0");
}

TEST(Certify, KinkedTrefoilTheoremOneFails) {
    const auto c = certify(fixtures::trefoil_neg_kink(), kTrefoilWitness, CertMode::Thm1);
    EXPECT_EQ(c.status, CertStatus::NotApplicable);
    EXPECT_EQ(c.failed_check, "SL=sl(D)");
}

TEST(Certify, KinkedTrefoilTheoremFourNeedsIrreducible) {
    const auto d = fixtures::trefoil_neg_kink();
    EXPECT_EQ(diagram_sl(d) + 2 * ind_all(seifert_analysis(d).graph).ind_minus, 1);
    const auto c = certify(d, kTrefoilWitness, CertMode::Thm4);
    EXPECT_EQ(c.status, CertStatus::NotApplicable);
    EXPECT_EQ(c.failed_check, "irreducible");
}

TEST(Certify, CorMpOnTrefoil) {
    const auto c = certify(fixtures::trefoil(), kTrefoilWitness, CertMode::CorMp);
    EXPECT_EQ(c.status, CertStatus::Positive);
}

TEST(Certify, NonHomogeneousIsNotApplicable) {
    const auto d = closure(BraidWord{2, {1, -1, 1}});
    const auto c = certify(d, {2, {{{}, 1}}}, CertMode::Thm1);
    EXPECT_EQ(c.status, CertStatus::NotApplicable);
    EXPECT_EQ(c.failed_check, "homogeneous");
}

TEST(Certify, MismatchedWitnessThrows) {
    EXPECT_EQ(code_of([] { certify(fixtures::figure_eight(), kTrefoilWitness, CertMode::Thm1); }), Errc::WitnessMismatch);
}

TEST(MirrorIdentity, Examples) {
    const auto t = mirror_identity_check(fixtures::trefoil());
    EXPECT_EQ(t.lhs, -4);
    EXPECT_EQ(t.rhs, -4);
    EXPECT_TRUE(t.ok);
    const auto f = mirror_identity_check(fixtures::figure_eight());
    EXPECT_EQ(f.lhs, -6);
    EXPECT_TRUE(f.ok);
    const auto u = mirror_identity_check(fixtures::unknot());
    EXPECT_EQ(u.lhs, -2);
    EXPECT_EQ(u.rhs, -2);
}

TEST(MpReduce, Examples) {
    const auto u = mp_reduce(fixtures::kink(1), 0);
    EXPECT_EQ(u.crossing_count(), 0);
    EXPECT_EQ(seifert_circles(u), 1);
    EXPECT_EQ(diagram_sl(u), -1);

    const auto d = fixtures::trefoil_neg_kink();
    const auto r = mp_reduce(d, 3);
    EXPECT_EQ(seifert_circles(r), 2);
    EXPECT_EQ(diagram_sl(r), 1);
    EXPECT_EQ(homfly(r), oracle::trefoil());

    EXPECT_EQ(code_of([] { mp_reduce(fixtures::trefoil(), 0); }), Errc::NotLone);
    EXPECT_EQ(code_of([] { mp_reduce(fixtures::trefoil(), 7); }), Errc::Range);
    // The standard 5_2 diagram: four Seifert circles in a cycle, crossing 0
    // alone between its two circles.
    const auto five2 = import_pd("X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]");
    EXPECT_EQ(code_of([&] { mp_reduce(five2, 0); }), Errc::NotCutEdge);
}

TEST(MpReduce, EveryLoneNegativeCutEdgeRaisesSlByTwo) {
    Rng rng(61);
    int applied = 0;
    for (int i = 0; i < 200; ++i) {
        Diagram d = random_diagram(rng, 10);
        for (bool again = true; again;) {
            again = false;
            const auto g = seifert_analysis(d).graph;
            for (const auto& e : g.edges()) {
                if (g.multiplicity(e.u, e.v) != 1 || !is_cut_edge(g, e.id)) continue;
                const auto r = mp_reduce(d, e.id);
                EXPECT_EQ(seifert_circles(r), seifert_circles(d) - 1);
                EXPECT_EQ(diagram_sl(r), diagram_sl(d) + (e.sign < 0 ? 2 : 0));
                EXPECT_EQ(homfly(r), homfly(d));
                d = r;
                ++applied;
                again = true;
                break;
            }
        }
    }
    EXPECT_GT(applied, 100);
}
