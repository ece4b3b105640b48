#pragma once

// Slice-Bennequin bookkeeping for quasipositive links: Abe's formula for s,
// braid-index bounds, positivity certificates and the cut-edge MP reduction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/braids.hpp"
#include "qpknot/graph_index.hpp"
#include "qpknot/homfly.hpp"
#include "qpknot/seifert.hpp"

namespace qpk {

/// s(K) = sl(D) + 2 O+(D) - 1 for a homogeneous non-split diagram.
inline int abe_s(const Diagram& d) {
    if (!homogeneity(d).is_homogeneous) fail(Errc::NotHomogeneous, "Seifert graph has a block with both signs");
    if (split_parts(d) > 1) fail(Errc::SplitInput, "diagram is split");
    return diagram_sl(d) + 2 * o_plus(d) - 1;
}

struct WitnessSl {
    int sl_max = 0;
    bool verified = false; ///< false when the HOMFLY comparison was over the cap
};

/// SL(K) from a quasipositive factorization, after checking the witness
/// closure against d by component count and HOMFLY polynomial.  This check is
/// necessary, not sufficient, for the two to be the same link.
inline WitnessSl witness_sl(const QPWitness& q, const Diagram& d, const HomflyOptions& opts = {}) {
    const auto w = expand_witness(q);
    const Diagram wd = closure(w);
    const int cw = counts(wd).link_components, cd = counts(d).link_components;
    if (cw != cd)
        fail(Errc::WitnessMismatch, "witness closes to " + std::to_string(cw) + " components, diagram has " + std::to_string(cd));
    WitnessSl out{braid_sl(w), false};
    if (wd.crossing_count() <= opts.max_crossings && d.crossing_count() <= opts.max_crossings) {
        if (homfly(wd, opts) != homfly(d, opts))
            fail(Errc::WitnessMismatch, "witness closure and diagram have different HOMFLY polynomials");
        out.verified = true;
    }
    return out;
}

struct Bounds {
    std::optional<int> lower_mfw; ///< absent when HOMFLY is over the cap
    int upper_mp = 0;             ///< O - ind
    int upper_refined = 0;        ///< O - ind+ - ind-
    std::optional<int> pinned;
};

/// Bounds from a known polynomial, or without the lower bound when `p` is
/// absent.
inline Bounds braid_index_bounds(const Diagram& d, const IndexReport& idx, const std::optional<LaurentPoly2>& p) {
    Bounds b;
    const int o = seifert_circles(d);
    b.upper_mp = o - idx.ind;
    b.upper_refined = o - idx.ind_plus - idx.ind_minus;
    if (p) b.lower_mfw = degree_report(*p, d, idx).mfw_lower;
    if (b.lower_mfw && *b.lower_mfw == b.upper_refined) b.pinned = b.upper_refined;
    return b;
}

inline Bounds braid_index_bounds(const Diagram& d, const IndexReport& idx, const HomflyOptions& hopts = {}) {
    std::optional<LaurentPoly2> p;
    if (d.crossing_count() <= hopts.max_crossings) p = homfly(d, hopts);
    return braid_index_bounds(d, idx, p);
}

inline Bounds braid_index_bounds(const Diagram& d, const HomflyOptions& hopts = {}, const IndexOptions& iopts = {}) {
    return braid_index_bounds(d, ind_all(seifert_analysis(d).graph, iopts), hopts);
}

enum class CertMode { Thm1, Thm4, CorMp };
enum class CertStatus { Positive, NotApplicable, Contradiction };

inline const char* mode_name(CertMode m) {
    switch (m) {
    case CertMode::Thm1: return "thm1";
    case CertMode::Thm4: return "thm4";
    case CertMode::CorMp: return "cor_mp";
    }
    return "?";
}

inline std::optional<CertMode> parse_mode(std::string_view s) {
    if (s == "thm1") return CertMode::Thm1;
    if (s == "thm4") return CertMode::Thm4;
    if (s == "cor_mp") return CertMode::CorMp;
    return std::nullopt;
}

inline const char* status_name(CertStatus s) {
    switch (s) {
    case CertStatus::Positive: return "Positive";
    case CertStatus::NotApplicable: return "NotApplicable";
    case CertStatus::Contradiction: return "Contradiction";
    }
    return "?";
}

struct Check {
    std::string name;
    bool passed = false;
    std::map<std::string, int> values;
};

struct Certificate {
    CertMode mode = CertMode::Thm1;
    CertStatus status = CertStatus::NotApplicable;
    std::string failed_check; ///< set when NotApplicable
    std::vector<Check> trace;
    std::optional<int> sl_max;
    std::optional<int> s_value;
    std::optional<int> chi4;
    bool witness_verified = false;
    std::optional<bool> gap_holds; ///< O(D) - b >= O+(D) - 1, when b is pinned
};

struct CertifyOptions {
    HomflyOptions homfly;
    IndexOptions index;
};

/// Runs the hypotheses of the chosen positivity statement in order and stops
/// at the first one that fails.  When all hold, c-(D) = 0 is checked rather
/// than assumed.
inline Certificate certify(const Diagram& d, const QPWitness& q, CertMode mode, const CertifyOptions& opts = {}) {
    Certificate cert;
    cert.mode = mode;
    auto record = [&](std::string name, bool ok, std::map<std::string, int> values = {}) {
        cert.trace.push_back({std::move(name), ok, std::move(values)});
        if (!ok) {
            cert.status = CertStatus::NotApplicable;
            cert.failed_check = cert.trace.back().name;
        }
        return ok;
    };

    SeifertAnalysis sa;
    try {
        sa = seifert_analysis(d);
    } catch (const Error& e) {
        if (e.code() != Errc::LoopEdge) throw;
        record("admissible", false);
        return cert;
    }
    const auto hom = homogeneity(d);
    if (!record("homogeneous", hom.is_homogeneous)) return cert;
    if (!record("non-split", split_parts(d) == 1, {{"split_parts", split_parts(d)}})) return cert;
    if (mode != CertMode::Thm1 && !record("irreducible", hom.is_reduced)) return cert;

    const auto ws = witness_sl(q, d, opts.homfly);
    cert.sl_max = ws.sl_max;
    cert.s_value = ws.sl_max + 1;
    cert.chi4 = -ws.sl_max;
    cert.witness_verified = ws.verified;
    record("witness", true, {{"SL", ws.sl_max}, {"verified", ws.verified ? 1 : 0}});

    const auto c = counts(d);
    const int sl = diagram_sl(d);
    const int o = sa.circle_count;
    std::optional<IndexReport> idx;
    auto index = [&]() -> const IndexReport& {
        if (!idx) idx = ind_all(sa.graph, opts.index);
        return *idx;
    };
    std::optional<Bounds> bounds;
    if (d.crossing_count() <= opts.homfly.max_crossings) {
        if (auto r = try_ind_all(sa.graph, opts.index)) {
            idx = *r;
            bounds = braid_index_bounds(d, *idx, opts.homfly);
        }
    }

    bool hyp = false;
    switch (mode) {
    case CertMode::Thm1:
        hyp = record("SL=sl(D)", ws.sl_max == sl, {{"SL", ws.sl_max}, {"sl", sl}});
        break;
    case CertMode::Thm4: {
        const int im = index().ind_minus;
        hyp = record("SL=sl(D)+2ind-(D)", ws.sl_max == sl + 2 * im, {{"SL", ws.sl_max}, {"sl", sl}, {"ind_minus", im}});
        break;
    }
    case CertMode::CorMp: {
        const int mp = o - index().ind;
        std::map<std::string, int> vals{{"O", o}, {"ind", index().ind}};
        if (bounds && bounds->pinned) vals["b"] = *bounds->pinned;
        hyp = record("b=O(D)-ind(D)", bounds && bounds->pinned && *bounds->pinned == mp, vals);
        break;
    }
    }

    if (bounds && bounds->pinned) {
        const int op = o_plus(d);
        cert.gap_holds = o - *bounds->pinned >= op - 1;
        cert.trace.push_back({"O(D)-b>=O+(D)-1", *cert.gap_holds, {{"O", o}, {"b", *bounds->pinned}, {"O_plus", op}}});
    }
    if (!hyp) return cert;

    const bool positive = c.c_minus == 0;
    cert.trace.push_back({"c-(D)=0", positive, {{"c_minus", c.c_minus}}});
    cert.status = positive ? CertStatus::Positive : CertStatus::Contradiction;
    return cert;
}

struct MirrorIdentity {
    int lhs = 0;
    int rhs = 0;
    bool ok = false;
};

/// sl(D) + sl(mirror D) = -2 O(D).
inline MirrorIdentity mirror_identity_check(const Diagram& d) {
    MirrorIdentity m;
    m.lhs = diagram_sl(d) + diagram_sl(mirror(d));
    m.rhs = -2 * seifert_circles(d);
    m.ok = m.lhs == m.rhs;
    return m;
}

/// Removes a crossing that is the only edge between its two Seifert circles
/// and a cut edge of the Seifert graph.  Such a crossing is nugatory, so the
/// two sides are untwisted and the circles merge.
inline Diagram mp_reduce(const Diagram& d, int crossing, const HomflyOptions& opts = {}) {
    if (crossing < 0 || crossing >= d.crossing_count())
        fail(Errc::Range, "crossing id " + std::to_string(crossing) + " out of range");
    const auto sa = seifert_analysis(d);
    const auto& e = sa.graph.edges()[crossing];
    if (const int m = sa.graph.multiplicity(e.u, e.v); m != 1)
        fail(Errc::NotLone, "crossing " + std::to_string(crossing) + " is one of " + std::to_string(m) +
                                " crossings between its Seifert circles");
    if (!is_cut_edge(sa.graph, crossing))
        fail(Errc::NotCutEdge, "crossing " + std::to_string(crossing) +
                                   " is not a cut edge; only the cut-edge reduction is implemented");
    Diagram out = splice(d, {{crossing, Resolution::Erase}});
    if (d.crossing_count() <= opts.max_crossings && homfly(out, opts) != homfly(d, opts))
        fail(Errc::Invariant, "reduction changed the HOMFLY polynomial");
    return out;
}

// JSON.  Absent optional values are null; everything else is an integer,
// boolean or string.

inline nlohmann::json opt_json(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

inline nlohmann::json to_json(const Bounds& b) {
    return {{"lower_mfw", opt_json(b.lower_mfw)},
            {"upper_mp", b.upper_mp},
            {"upper_refined", b.upper_refined},
            {"pinned", opt_json(b.pinned)}};
}

inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& ch : c.trace) trace.push_back({{"check", ch.name}, {"passed", ch.passed}, {"values", ch.values}});
    nlohmann::json j = {{"mode", mode_name(c.mode)},
                        {"status", status_name(c.status)},
                        {"failed_check", c.failed_check.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.failed_check)},
                        {"hypothesis_trace", trace},
                        {"sl_max", opt_json(c.sl_max)},
                        {"s_value", opt_json(c.s_value)},
                        {"chi4", opt_json(c.chi4)},
                        {"witness_verified", c.witness_verified},
                        {"gap_holds", c.gap_holds ? nlohmann::json(*c.gap_holds) : nlohmann::json(nullptr)}};
    return j;
}

inline nlohmann::json to_json(const MirrorIdentity& m) { return {{"lhs", m.lhs}, {"rhs", m.rhs}, {"ok", m.ok}}; }

} // namespace qpk
