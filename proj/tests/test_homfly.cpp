#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace qpk;
using oracle::mono;

TEST(Laurent, ArithmeticAndText) {
    const LaurentPoly2 a = mono(2, 2, 0) - mono(1, 4, 0) + mono(1, 2, 2);
    EXPECT_EQ(to_string(a), "-v^4 + 2v^2 + v^2 z^2");
    EXPECT_EQ(to_json(a).dump(), "[[2,0,2],[2,2,1],[4,0,-1]]");
    EXPECT_EQ(poly_from_json(to_json(a)), a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.min_deg_v(), 2);
    EXPECT_EQ(a.max_deg_v(), 4);
    EXPECT_EQ((mono(1, 1, 0) + mono(1, 0, 0)) * (mono(1, 1, 0) - mono(1, 0, 0)), mono(1, 2, 0) - mono(1, 0, 0));
    EXPECT_THROW(LaurentPoly2{}.min_deg_v(), Error);
}

TEST(Homfly, Unknot) { EXPECT_EQ(homfly(fixtures::unknot()), LaurentPoly2{1}); }

TEST(Homfly, HandSkeinValues) {
    EXPECT_EQ(homfly(fixtures::trefoil()), oracle::trefoil());
    EXPECT_EQ(homfly(fixtures::hopf()), oracle::hopf_plus());
    EXPECT_EQ(homfly(fixtures::figure_eight()), oracle::figure_eight());
    EXPECT_EQ(homfly(closure(BraidWord{3, {1, -2, 1, -2}})), oracle::figure_eight());
}

TEST(Homfly, UnlinkIsDeltaPower) {
    const LaurentPoly2 delta = mono(1, -1, -1) - mono(1, 1, -1);
    EXPECT_EQ(homfly(Diagram::unlink(3)), delta * delta);
}

TEST(Homfly, SizeCap) {
    try {
        homfly(fixtures::torus(2, 9), {8});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SizeLimit);
    }
}

TEST(Homfly, SkeinRelationAtRandomCrossing) {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_diagram(rng, 8);
        if (d.crossing_count() == 0) continue;
        const int k = uniform(rng, 0, d.crossing_count() - 1);
        const auto flipped = switch_crossing(d, k);
        const auto& plus = d.crossing(k).sign > 0 ? d : flipped;
        const auto& minus = d.crossing(k).sign > 0 ? flipped : d;
        const auto p0 = homfly(smooth_crossing(d, k));
        EXPECT_EQ(homfly(plus).shifted(1, -1, 0) - homfly(minus).shifted(1, 1, 0), p0.shifted(1, 0, 1)) << to_text(d);
    }
}

TEST(Homfly, MarkovStabilization) {
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        auto w = random_braid(rng, uniform(rng, 2, 4), uniform(rng, 1, 7));
        const auto p = homfly(closure(w));
        auto s = w;
        s.strands += 1;
        s.letters.push_back(uniform(rng, 0, 1) ? w.strands : -w.strands);
        EXPECT_EQ(homfly(closure(s)), p) << to_text(w);
    }
}

TEST(Homfly, MirrorAndSplitUnion) {
    Rng rng(43);
    const LaurentPoly2 delta = mono(1, -1, -1) - mono(1, 1, -1);
    for (int i = 0; i < 100; ++i) {
        const auto d = random_diagram(rng, 8);
        const auto p = homfly(d);
        EXPECT_EQ(homfly(mirror(d)), p.mirrored());
        const auto e = random_diagram(rng, 5);
        EXPECT_EQ(homfly(disjoint_union(d, e)), delta * p * homfly(e));
    }
}

TEST(Homfly, MemoizationDoesNotChangeResults) {
    Rng rng(44);
    for (int i = 0; i < 40; ++i) {
        const auto d = random_diagram(rng, 12);
        HomflyOptions memo_all{16, 0}, memo_none{16, 100};
        EXPECT_EQ(homfly(d, memo_all), homfly(d, memo_none));
    }
}

TEST(DegreeReport, Trefoil) {
    const auto d = fixtures::trefoil();
    const auto r = degree_report(homfly(d), d, ind_all(seifert_analysis(d).graph));
    EXPECT_EQ(r.min_deg_v, 2);
    EXPECT_EQ(r.max_deg_v, 4);
    EXPECT_EQ(r.v_span, 2);
    EXPECT_EQ(r.mfw_lower, 2);
    EXPECT_TRUE(r.eq1_holds && r.eq1_tight);
    EXPECT_TRUE(r.eq2_holds && r.eq2_tight);
}

TEST(DegreeReport, TrefoilWithNegativeKink) {
    const auto d = fixtures::trefoil_neg_kink();
    const auto idx = ind_all(seifert_analysis(d).graph);
    EXPECT_EQ(diagram_sl(d), -1);
    EXPECT_EQ(idx.ind_minus, 1);
    const auto r = degree_report(homfly(d), d, idx);
    EXPECT_EQ(r.eq1_bound, 2);
    EXPECT_EQ(r.min_deg_v, 2);
    EXPECT_TRUE(r.eq1_tight);
}

TEST(DegreeReport, FigureEight) {
    const auto d = fixtures::figure_eight();
    const auto r = degree_report(homfly(d), d, ind_all(seifert_analysis(d).graph));
    EXPECT_EQ(r.v_span, 4);
    EXPECT_EQ(r.mfw_lower, 3);
}

TEST(DegreeReport, InequalitiesHoldOnSmallCorpus) {
    corpus::for_each_word(3, 7, [&](const BraidWord& w) {
        const auto d = closure(w);
        const auto r = degree_report(homfly(d), d, ind_all(seifert_analysis(d).graph));
        EXPECT_TRUE(r.eq1_holds) << to_text(w);
        EXPECT_TRUE(r.eq2_holds) << to_text(w);
    });
}
