#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace qpk;

namespace {

constexpr const char* kTrefoilText = R"(arcs:6 loops:0
X+ u_in:1 o_in:0 u_out:2 o_out:3
X+ u_in:3 o_in:2 u_out:4 o_out:5
X+ u_in:5 o_in:4 u_out:0 o_out:1
)";

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::Invariant;
}

} // namespace

TEST(ParseDiagram, RelaxedJsonUnknot) {
    const auto d = parse_diagram("{arcs:0, loops:1, x:[]}");
    EXPECT_EQ(d.crossing_count(), 0);
    EXPECT_EQ(d.free_loops(), 1);
}

TEST(ParseDiagram, TrefoilText) {
    const auto d = parse_diagram(kTrefoilText);
    EXPECT_EQ(counts(d).c_plus, 3);
    EXPECT_EQ(d, fixtures::trefoil());
}

TEST(ParseDiagram, DuplicateUnderInNamesArc) {
    const std::string bad = R"(arcs:6 loops:0
X+ u_in:4 o_in:0 u_out:2 o_out:3
X+ u_in:3 o_in:2 u_out:4 o_out:5
X+ u_in:4 o_in:5 u_out:0 o_out:1
)";
    try {
        parse_diagram(bad);
        FAIL() << "expected InvariantError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Invariant);
        EXPECT_NE(std::string(e.what()).find("arc 4"), std::string::npos) << e.what();
    }
}

TEST(ParseDiagram, SyntaxErrors) {
    EXPECT_EQ(code_of([] { parse_diagram("X+ u_in:0 o_in:1 u_out:1 o_out:0"); }), Errc::Syntax);
    EXPECT_EQ(code_of([] { parse_diagram("arcs:2\nX+ u_in:0 o_in:1 u_out:1"); }), Errc::Syntax);
    EXPECT_EQ(code_of([] { parse_diagram("arcs:2\nX+ u_in:0 o_in:1 u_out:1 q:0"); }), Errc::Syntax);
    EXPECT_EQ(code_of([] { parse_diagram("{arcs:2,"); }), Errc::Syntax);
}

TEST(ParseDiagram, RoundTripTextAndJson) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_diagram(rng, 10);
        EXPECT_EQ(parse_diagram(to_text(d)), d);
        EXPECT_EQ(parse_diagram(to_json(d).dump()), d);
    }
}

TEST(ImportPd, PositiveTrefoil) {
    const auto c = counts(import_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
    EXPECT_EQ(c.c_plus, 3);
    EXPECT_EQ(c.c_minus, 0);
}

TEST(ImportPd, FigureEight) {
    const auto d = fixtures::figure_eight();
    const auto c = counts(d);
    EXPECT_EQ(c.c_plus, 2);
    EXPECT_EQ(c.c_minus, 2);
    EXPECT_EQ(c.link_components, 1);
    // The hand skein value pins the diagram down to the figure-eight itself.
    EXPECT_EQ(homfly(d), oracle::figure_eight());
}

TEST(ImportPd, PositiveTrefoilMatchesHandSkein) {
    EXPECT_EQ(homfly(import_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")), oracle::trefoil());
}

TEST(ImportPd, DegenerateKinkResolvesFromUnderStrand) {
    // Label 1 already enters along the under-strand, so the over-strand must
    // run 2 -> 1; the result is the standard one-crossing kink.
    const auto d = import_pd("X[1,2,2,1]");
    EXPECT_EQ(d.crossing_count(), 1);
    EXPECT_EQ(d.crossing(0).under_out, d.crossing(0).over_in);
    EXPECT_EQ(d.crossing(0).over_out, d.crossing(0).under_in);
    EXPECT_EQ(seifert_circles(d), 2);
    EXPECT_EQ(homfly(d), oracle::mono(1, 0, 0));
}

TEST(ImportPd, TwoLabelOverComponentIsAmbiguous) {
    // Labels 3 and 4 form a component that never passes under, and either
    // direction around it is consistent.
    EXPECT_EQ(code_of([] { import_pd("X[1,3,2,4] X[2,4,1,3]"); }), Errc::AmbiguousOrientation);
    EXPECT_EQ(code_of([] { import_pd("components: 1-2 3-4\nX[1,3,2,4] X[2,4,1,3]"); }), Errc::AmbiguousOrientation);
    EXPECT_EQ(import_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").crossing_count(), 3);
}

TEST(ImportPd, Malformed) {
    EXPECT_EQ(code_of([] { import_pd("X[1,2,3]"); }), Errc::Syntax);
}

TEST(Mirror, Examples) {
    EXPECT_EQ(counts(mirror(fixtures::trefoil())), (Counts{0, 3, -3, 1, 1}));
    EXPECT_EQ(mirror(fixtures::unknot()), fixtures::unknot());
    const auto m = mirror(fixtures::figure_eight());
    EXPECT_EQ(counts(m).c_plus, 2);
    EXPECT_EQ(counts(m).c_minus, 2);
    for (int k = 0; k < m.crossing_count(); ++k) EXPECT_EQ(m.crossing(k).sign, -fixtures::figure_eight().crossing(k).sign);
}

TEST(Mirror, InvolutionSwapsCounts) {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const auto d = random_diagram(rng, 10);
        const auto m = mirror(d);
        EXPECT_EQ(mirror(m), d);
        EXPECT_EQ(counts(m).c_plus, counts(d).c_minus);
        EXPECT_EQ(counts(m).c_minus, counts(d).c_plus);
        EXPECT_EQ(counts(m).link_components, counts(d).link_components);
    }
}

TEST(Counts, Examples) {
    EXPECT_EQ(counts(fixtures::trefoil()), (Counts{3, 0, 3, 1, 1}));
    EXPECT_EQ(counts(fixtures::hopf()), (Counts{2, 0, 2, 2, 1}));
    EXPECT_EQ(counts(disjoint_union(fixtures::trefoil(), fixtures::trefoil())).split_parts, 2);
}

TEST(Counts, BraidClosureLetters) {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const auto w = random_braid(rng, uniform(rng, 2, 5), uniform(rng, 0, 12));
        int pos = 0, neg = 0;
        for (int l : w.letters) (l > 0 ? pos : neg)++;
        const auto c = counts(closure(w));
        EXPECT_EQ(c.c_plus, pos);
        EXPECT_EQ(c.c_minus, neg);
    }
}

TEST(Validate, ReportListsEveryIssue) {
    const auto r = validate(4, {{1, 0, 1, 2, 3}, {2, 0, 3, 1, 2}}, 0);
    EXPECT_FALSE(r.ok());
    EXPECT_GE(r.issues.size(), 2u);
    EXPECT_TRUE(validate(2, {{1, 0, 1, 1, 0}}, 0).ok());
}

TEST(Splice, SmoothingAKinkLeavesAFreeLoop) {
    const auto s = smooth_crossing(fixtures::kink(1), 0);
    EXPECT_EQ(s.crossing_count(), 0);
    EXPECT_EQ(s.free_loops(), 2);
    const auto e = splice(fixtures::kink(1), {{0, Resolution::Erase}});
    EXPECT_EQ(e.free_loops(), 1);
}
