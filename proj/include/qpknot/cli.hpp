#pragma once

// Command-line front end.  `run` parses arguments, reads inputs, and writes a
// report to `out` (JSON with --json, loose text otherwise) and diagnostics to
// `err`.  Exit codes: 0 success, 2 bad input or usage, 3 size cap exceeded,
// 4 witness mismatch, Contradiction certificate or failed selftest.

#include <deque>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "qpknot/construct.hpp"
#include "qpknot/generators.hpp"
#include "qpknot/theorems.hpp"
#include "qpknot/vogel.hpp"

#ifndef QPKNOT_VERSION
#define QPKNOT_VERSION "0.1.0"
#endif

namespace qpk::cli {

enum Exit { Ok = 0, InputError = 2, SizeError = 3, Mismatch = 4 };

inline std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

struct Input {
    std::string text;
    Diagram diagram;
    std::optional<BraidWord> braid;
};

inline std::string read_file(const std::string& path, const std::string& fixtures) {
    namespace fs = std::filesystem;
    fs::path p(path);
    if (!fs::exists(p) && !fixtures.empty() && fs::exists(fs::path(fixtures) / p)) p = fs::path(fixtures) / p;
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(Errc::Syntax, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Braid text (`braid n=...`), PD code (`X[...]`), or the native line/JSON
/// diagram formats.
inline Input parse_input(std::string text) {
    Input in;
    in.text = std::move(text);
    const auto t = detail::trim(in.text);
    if (t.rfind("braid", 0) == 0) {
        in.braid = parse_braid(t);
        in.diagram = closure(*in.braid);
    } else if (t.find("X[") != std::string_view::npos) {
        in.diagram = import_pd(t);
    } else {
        in.diagram = parse_diagram(t);
    }
    return in;
}

struct Settings {
    bool json = false;
    int max_crossings = 16;
    int max_vertices = 14;
    std::string fixtures;

    HomflyOptions homfly() const {
        HomflyOptions o;
        o.max_crossings = max_crossings;
        return o;
    }
    IndexOptions index() const { return IndexOptions{max_vertices}; }
};

struct Report {
    std::string command;
    std::string digest;
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> warnings;
};

inline nlohmann::json to_json(const Report& r) {
    return {{"tool", "qpknot"},
            {"version", QPKNOT_VERSION},
            {"command", r.command},
            {"input_digest", r.digest.empty() ? nlohmann::json(nullptr) : nlohmann::json("sha256:" + r.digest)},
            {"result", r.result},
            {"warnings", r.warnings}};
}

inline void print(const Report& r, const Settings& s, std::ostream& out) {
    if (s.json) {
        out << to_json(r).dump(2) << '\n';
        return;
    }
    out << r.command << '\n';
    for (const auto& [k, v] : r.result.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

inline nlohmann::json analyze(const Diagram& d, const Settings& s, std::vector<std::string>& warnings) {
    nlohmann::json r;
    const auto c = counts(d);
    const auto sa = seifert_analysis(d);
    r["crossings"] = d.crossing_count();
    r["components"] = c.link_components;
    r["c_plus"] = c.c_plus;
    r["c_minus"] = c.c_minus;
    r["writhe"] = c.writhe;
    r["split_parts"] = c.split_parts;
    r["is_alternating"] = is_alternating(d);
    r["is_positive"] = c.c_minus == 0;
    r["O"] = sa.circle_count;
    r["O_plus"] = o_plus(d);
    r["sl"] = diagram_sl(d);
    if (!is_planar(d)) warnings.push_back("crossing data is not planar");

    const auto hom = homogeneity(d);
    r["homogeneity"] = to_json(hom);
    r["s"] = hom.is_homogeneous && c.split_parts == 1 ? nlohmann::json(abe_s(d)) : nlohmann::json(nullptr);
    r["lone_pairs"] = to_json(dhl_check(sa.graph));

    const auto idx = try_ind_all(sa.graph, s.index());
    if (idx) {
        r["ind"] = idx->ind;
        r["ind_plus"] = idx->ind_plus;
        r["ind_minus"] = idx->ind_minus;
        r["index"] = to_json(*idx);
    } else {
        r["ind"] = r["ind_plus"] = r["ind_minus"] = r["index"] = nullptr;
        warnings.push_back("Seifert graph has more than " + std::to_string(s.max_vertices) + " vertices; index skipped");
    }

    if (d.crossing_count() <= s.max_crossings) {
        const auto p = homfly(d, s.homfly());
        r["homfly"] = to_string(p);
        r["homfly_terms"] = to_json(p);
        r["degree"] = idx ? to_json(degree_report(p, d, *idx)) : nlohmann::json(nullptr);
    } else {
        r["homfly"] = r["homfly_terms"] = r["degree"] = nullptr;
        warnings.push_back("more than " + std::to_string(s.max_crossings) + " crossings; HOMFLY skipped");
    }
    r["bounds"] = idx ? to_json(braid_index_bounds(d, *idx, s.homfly())) : nlohmann::json(nullptr);
    r["mirror_identity"] = to_json(mirror_identity_check(d));
    return r;
}

struct SelftestTally {
    std::string name;
    int cases = 0;
    int failures = 0;
};

inline nlohmann::json selftest(const Settings& s, std::vector<std::string>& warnings, bool& ok) {
    Rng rng(20261016);
    std::deque<SelftestTally> tallies; // entries are held by reference
    auto tally = [&](const std::string& name) -> SelftestTally& {
        tallies.push_back({name});
        return tallies.back();
    };
    auto check = [](SelftestTally& t, bool passed) {
        ++t.cases;
        if (!passed) ++t.failures;
    };

    std::vector<std::pair<std::string, Diagram>> fixtures = {
        {"unknot", Diagram::unlink(1)},
        {"positive kink", closure(BraidWord{2, {1}})},
        {"positive trefoil", closure(BraidWord{2, {1, 1, 1}})},
        {"trefoil with negative kink", closure(BraidWord{3, {1, 1, 1, -2}})},
        {"figure-eight", closure(BraidWord{3, {1, -2, 1, -2}})},
        {"positive Hopf", closure(BraidWord{2, {1, 1}})},
    };
    if (!s.fixtures.empty()) {
        namespace fs = std::filesystem;
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(s.fixtures))
            if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            try {
                fixtures.emplace_back(f.filename().string(), parse_input(read_file(f.string(), "")).diagram);
            } catch (const Error&) {
                // witnesses and deliberately broken inputs live in the same folder
            }
        }
    }
    std::vector<Diagram> random;
    for (int i = 0; i < 60; ++i) random.push_back(random_diagram(rng, 8));

    auto& mirror_sl = tally("sl(D)+sl(mirror D)=-2O(D)");
    auto& mirror_p = tally("P(mirror D)(v,z)=P(D)(-1/v,z)");
    auto& skein = tally("skein relation at one crossing");
    auto& ineq = tally("inequalities (1) and (2)");
    auto& braid = tally("braidization keeps O, writhe and P");
    auto run_diagram = [&](const Diagram& d, bool skein_too) {
        check(mirror_sl, mirror_identity_check(d).ok);
        if (d.crossing_count() > s.max_crossings) return;
        const auto p = homfly(d, s.homfly());
        check(mirror_p, homfly(mirror(d), s.homfly()) == p.mirrored());
        if (skein_too && d.crossing_count() > 0) {
            const int k = uniform(rng, 0, d.crossing_count() - 1);
            const Diagram dk = switch_crossing(d, k);
            const auto& plus = d.crossing(k).sign > 0 ? d : dk;
            const auto& minus = d.crossing(k).sign > 0 ? dk : d;
            const auto lhs = homfly(plus, s.homfly()).shifted(1, -1, 0) - homfly(minus, s.homfly()).shifted(1, 1, 0);
            check(skein, lhs == homfly(smooth_crossing(d, k), s.homfly()).shifted(1, 0, 1));
        }
        if (const auto idx = try_ind_all(seifert_analysis(d).graph, s.index())) {
            const auto dr = degree_report(p, d, *idx);
            check(ineq, dr.eq1_holds && dr.eq2_holds);
        }
        if (split_parts(d) == 1) {
            const auto b = vogel_braidize(d, s.homfly());
            check(braid, b.word.strands == seifert_circles(d) && b.word.exponent_sum() == counts(d).writhe);
        }
    };
    for (const auto& [name, d] : fixtures) run_diagram(d, false);
    for (const auto& d : random) run_diagram(d, true);

    auto& ind_mirror = tally("ind-(mirror G)=ind+(G)");
    for (int i = 0; i < 100; ++i) {
        const auto g = random_graph(rng, 6, 8);
        const auto a = ind_all(g), b = ind_all(g.negated());
        check(ind_mirror, a.ind_plus == b.ind_minus && a.ind_minus == b.ind_plus && a.ind == b.ind);
    }

    nlohmann::json checks = nlohmann::json::array();
    ok = true;
    for (const auto& t : tallies) {
        checks.push_back({{"check", t.name}, {"cases", t.cases}, {"failures", t.failures}});
        if (t.failures) {
            ok = false;
            warnings.push_back(t.name + ": " + std::to_string(t.failures) + " of " + std::to_string(t.cases) + " failed");
        }
    }
    return {{"checks", checks}, {"fixtures", static_cast<int>(fixtures.size())}, {"ok", ok}};
}

inline int exit_code(Errc c) {
    switch (c) {
    case Errc::SizeLimit: return SizeError;
    case Errc::WitnessMismatch: return Mismatch;
    default: return InputError;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seifert-graph invariants, HOMFLY bounds and positivity certificates for link diagrams", "qpknot"};
    app.set_version_flag("--version", QPKNOT_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_flag("--json", s.json, "emit the JSON report");
    app.add_option("--max-crossings", s.max_crossings, "HOMFLY crossing cap")->check(CLI::NonNegativeNumber);
    app.add_option("--max-vertices", s.max_vertices, "index search vertex cap")->check(CLI::NonNegativeNumber);
    app.add_option("--fixtures", s.fixtures, "folder searched for inputs and used by selftest")->check(CLI::ExistingDirectory);

    std::string file, witness_file, mode_text;
    int crossing = -1;
    auto* analyze_cmd = app.add_subcommand("analyze", "counts, Seifert data, index, HOMFLY and braid-index bounds");
    analyze_cmd->add_option("file", file, "diagram file")->required();
    auto* homfly_cmd = app.add_subcommand("homfly", "HOMFLY polynomial");
    homfly_cmd->add_option("file", file, "diagram file")->required();
    auto* certify_cmd = app.add_subcommand("certify", "positivity certificate from a quasipositive witness");
    certify_cmd->add_option("file", file, "diagram file")->required();
    certify_cmd->add_option("--witness", witness_file, "quasipositive factorization (JSON)")->required();
    certify_cmd->add_option("--mode", mode_text, "thm1, thm4 or cor_mp")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm4", "cor_mp"}));
    auto* braidize_cmd = app.add_subcommand("braidize", "closed-braid word on O(D) strands");
    braidize_cmd->add_option("file", file, "diagram file")->required();
    auto* reduce_cmd = app.add_subcommand("reduce", "remove a lone cut-edge crossing");
    reduce_cmd->add_option("file", file, "diagram file")->required();
    reduce_cmd->add_option("--crossing", crossing, "crossing id")->required();
    auto* selftest_cmd = app.add_subcommand("selftest", "identity and property checks on fixtures and random inputs");
    for (auto* sub : {analyze_cmd, homfly_cmd, certify_cmd, braidize_cmd, reduce_cmd, selftest_cmd}) sub->fallthrough();

    std::vector<const char*> argv{"qpknot"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? Ok : InputError;
    }

    Report rep;
    int code = Ok;
    try {
        Input in;
        if (!file.empty()) {
            in = parse_input(read_file(file, s.fixtures));
            rep.digest = sha256_hex(in.text);
        }
        if (analyze_cmd->parsed()) {
            rep.command = "analyze";
            rep.result = analyze(in.diagram, s, rep.warnings);
        } else if (homfly_cmd->parsed()) {
            rep.command = "homfly";
            const auto p = homfly(in.diagram, s.homfly());
            rep.result = {{"crossings", in.diagram.crossing_count()},
                          {"components", counts(in.diagram).link_components},
                          {"polynomial", to_string(p)},
                          {"terms", to_json(p)}};
        } else if (certify_cmd->parsed()) {
            rep.command = "certify";
            const auto q = parse_witness(read_file(witness_file, s.fixtures));
            CertifyOptions co{s.homfly(), s.index()};
            const auto cert = certify(in.diagram, q, *parse_mode(mode_text), co);
            rep.result = to_json(cert);
            if (cert.sl_max && !cert.witness_verified)
                rep.warnings.push_back("witness checked by component count only; HOMFLY over the cap");
            if (cert.status == CertStatus::Contradiction) {
                err << "Contradiction: all hypotheses hold but the diagram has negative crossings\n";
                code = Mismatch;
            }
        } else if (braidize_cmd->parsed()) {
            rep.command = "braidize";
            const auto b = vogel_braidize(in.diagram, s.homfly());
            rep.result = {{"braid", to_text(b.word)},
                          {"strands", b.word.strands},
                          {"letters", b.word.letters},
                          {"exponent_sum", b.word.exponent_sum()},
                          {"moves", b.moves},
                          {"verified", b.verified}};
            if (!b.verified) rep.warnings.push_back("braid word not checked: HOMFLY over the cap");
        } else if (reduce_cmd->parsed()) {
            rep.command = "reduce";
            const auto r = mp_reduce(in.diagram, crossing, s.homfly());
            rep.result = {{"crossing", crossing},
                          {"O_before", seifert_circles(in.diagram)},
                          {"O_after", seifert_circles(r)},
                          {"sl_before", diagram_sl(in.diagram)},
                          {"sl_after", diagram_sl(r)},
                          {"diagram", to_json(r)},
                          {"text", to_text(r)}};
            if (in.diagram.crossing_count() > s.max_crossings)
                rep.warnings.push_back("HOMFLY over the cap; reduction not cross-checked");
        } else if (selftest_cmd->parsed()) {
            rep.command = "selftest";
            bool ok = true;
            rep.result = selftest(s, rep.warnings, ok);
            if (!ok) code = Mismatch;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
    print(rep, s, out);
    return code;
}

} // namespace qpk::cli
