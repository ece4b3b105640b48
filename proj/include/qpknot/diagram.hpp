#pragma once

// Oriented link diagrams as signed crossing lists over numbered arcs.
//
// An arc runs from the crossing where it occupies an out-slot (its tail) to
// the crossing where it occupies an in-slot (its head).  The under-strand of
// a crossing runs under_in -> under_out, the over-strand over_in -> over_out.
// Signs are explicit; no planar data is stored, but the sign together with
// the slot roles fixes the counterclockwise order of the four arc ends, which
// is what embedding.hpp uses for face tracing.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/error.hpp"

namespace qpk {

struct Crossing {
    int sign = 1;
    int under_in = 0;
    int over_in = 0;
    int under_out = 0;
    int over_out = 0;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct ValidationIssue {
    std::string code;
    std::string message;
    std::string location;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

inline ValidationReport validate(int arc_count, const std::vector<Crossing>& crossings, int free_loops) {
    ValidationReport report;
    auto add = [&](std::string code, std::string msg, std::string loc) {
        report.issues.push_back({std::move(code), std::move(msg), std::move(loc)});
    };
    if (arc_count < 0) add("arc_count", "arc count is negative", "header");
    if (free_loops < 0) add("loops", "free loop count is negative", "header");
    if (arc_count != 2 * static_cast<int>(crossings.size()))
        add("arc_count",
            "arc count " + std::to_string(arc_count) + " differs from twice the crossing count " +
                std::to_string(2 * crossings.size()),
            "header");
    const int n = std::max(arc_count, 0);
    std::vector<int> in_uses(n, 0), out_uses(n, 0);
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        const auto& x = crossings[k];
        const std::string loc = "crossing " + std::to_string(k);
        if (x.sign != 1 && x.sign != -1) add("sign", "sign must be +1 or -1", loc);
        for (int a : {x.under_in, x.over_in, x.under_out, x.over_out}) {
            if (a < 0 || a >= n) add("arc_range", "arc " + std::to_string(a) + " out of range", loc);
        }
        for (int a : {x.under_in, x.over_in})
            if (a >= 0 && a < n) ++in_uses[a];
        for (int a : {x.under_out, x.over_out})
            if (a >= 0 && a < n) ++out_uses[a];
    }
    // Over-used arcs first: an arc named twice is the mistake, the arc left
    // empty is its consequence.
    for (bool over : {true, false}) {
        for (int a = 0; a < n; ++a) {
            if (in_uses[a] != 1 && (in_uses[a] > 1) == over)
                add("in_slots", "arc " + std::to_string(a) + " occupies " + std::to_string(in_uses[a]) + " in-slots",
                    "arc " + std::to_string(a));
            if (out_uses[a] != 1 && (out_uses[a] > 1) == over)
                add("out_slots",
                    "arc " + std::to_string(a) + " occupies " + std::to_string(out_uses[a]) + " out-slots",
                    "arc " + std::to_string(a));
        }
    }
    return report;
}

class Diagram {
public:
    Diagram() = default;

    static Diagram make(int arc_count, std::vector<Crossing> crossings, int free_loops = 0) {
        auto report = validate(arc_count, crossings, free_loops);
        if (!report.ok()) {
            const auto& first = report.issues.front();
            fail(Errc::Invariant, first.message + " (" + first.location + ")");
        }
        Diagram d;
        d.arcs_ = arc_count;
        d.x_ = std::move(crossings);
        d.loops_ = free_loops;
        d.index();
        return d;
    }

    static Diagram unlink(int components) { return make(0, {}, components); }

    int arc_count() const { return arcs_; }
    int free_loops() const { return loops_; }
    int crossing_count() const { return static_cast<int>(x_.size()); }
    const std::vector<Crossing>& crossings() const { return x_; }
    const Crossing& crossing(int k) const { return x_.at(static_cast<std::size_t>(k)); }

    /// Crossing at which the arc ends (in-slot) / starts (out-slot).
    int head(int arc) const { return head_[arc]; }
    int tail(int arc) const { return tail_[arc]; }

    /// Continuation of the link strand through the head crossing.
    int strand_next(int arc) const { return strand_next_[arc]; }
    /// Continuation after oriented smoothing of the head crossing.
    int seifert_next(int arc) const { return seifert_next_[arc]; }

    bool arrives_under(int arc) const { return x_[head_[arc]].under_in == arc; }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.arcs_ == b.arcs_ && a.loops_ == b.loops_ && a.x_ == b.x_;
    }

private:
    void index() {
        head_.assign(arcs_, -1);
        tail_.assign(arcs_, -1);
        strand_next_.assign(arcs_, -1);
        seifert_next_.assign(arcs_, -1);
        for (int k = 0; k < crossing_count(); ++k) {
            const auto& x = x_[k];
            head_[x.under_in] = k;
            head_[x.over_in] = k;
            tail_[x.under_out] = k;
            tail_[x.over_out] = k;
            strand_next_[x.under_in] = x.under_out;
            strand_next_[x.over_in] = x.over_out;
            seifert_next_[x.under_in] = x.over_out;
            seifert_next_[x.over_in] = x.under_out;
        }
    }

    int arcs_ = 0;
    std::vector<Crossing> x_;
    int loops_ = 0;
    std::vector<int> head_, tail_, strand_next_, seifert_next_;
};

// ---------------------------------------------------------------------------
// Small union-find used throughout.

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }
    int size() const { return static_cast<int>(parent_.size()); }
    int count_roots() {
        int r = 0;
        for (int i = 0; i < size(); ++i)
            if (find(i) == i) ++r;
        return r;
    }

private:
    std::vector<int> parent_;
};

// ---------------------------------------------------------------------------
// Counts

struct Counts {
    int c_plus = 0;
    int c_minus = 0;
    int writhe = 0;
    int link_components = 0;
    int split_parts = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
};

/// Orbits of a permutation of arc ids.
inline std::vector<std::vector<int>> orbits(int n, auto next) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        auto& orbit = out.emplace_back();
        for (int b = a; !seen[b]; b = next(b)) {
            seen[b] = 1;
            orbit.push_back(b);
        }
    }
    return out;
}

/// Link components as arc cycles, ordered by smallest arc id, each starting at
/// its smallest arc.  Free loops are not included.
inline std::vector<std::vector<int>> strand_components(const Diagram& d) {
    return orbits(d.arc_count(), [&](int a) { return d.strand_next(a); });
}

inline int split_parts(const Diagram& d) {
    DisjointSets ds(d.arc_count());
    for (const auto& x : d.crossings()) {
        ds.unite(x.under_in, x.over_in);
        ds.unite(x.under_in, x.under_out);
        ds.unite(x.under_in, x.over_out);
    }
    return ds.count_roots() + d.free_loops();
}

inline Counts counts(const Diagram& d) {
    Counts c;
    for (const auto& x : d.crossings()) (x.sign > 0 ? c.c_plus : c.c_minus)++;
    c.writhe = c.c_plus - c.c_minus;
    c.link_components = static_cast<int>(strand_components(d).size()) + d.free_loops();
    c.split_parts = split_parts(d);
    return c;
}

/// Every link component alternates over/under along its traversal.
inline bool is_alternating(const Diagram& d) {
    for (const auto& comp : strand_components(d)) {
        const std::size_t m = comp.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (d.arrives_under(comp[i]) == d.arrives_under(comp[(i + 1) % m])) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Transformations

/// Swap over/under at every crossing and negate every sign.
inline Diagram mirror(const Diagram& d) {
    auto xs = d.crossings();
    for (auto& x : xs) {
        x.sign = -x.sign;
        std::swap(x.under_in, x.over_in);
        std::swap(x.under_out, x.over_out);
    }
    return Diagram::make(d.arc_count(), std::move(xs), d.free_loops());
}

/// Crossing change at one crossing.
inline Diagram switch_crossing(const Diagram& d, int k) {
    auto xs = d.crossings();
    auto& x = xs.at(static_cast<std::size_t>(k));
    x.sign = -x.sign;
    std::swap(x.under_in, x.over_in);
    std::swap(x.under_out, x.over_out);
    return Diagram::make(d.arc_count(), std::move(xs), d.free_loops());
}

enum class Resolution {
    Smooth, ///< oriented smoothing: under_in->over_out, over_in->under_out
    Erase,  ///< drop the crossing and let both strands pass straight through
};

/// Remove a set of crossings, reconnecting their arcs per the given
/// resolution.  Surviving arcs are renumbered by the smallest original arc id
/// of the chain they absorb; chains that close up become free loops.
inline Diagram splice(const Diagram& d, const std::vector<std::pair<int, Resolution>>& removed) {
    const int c = d.crossing_count();
    std::vector<int> mode(c, -1);
    for (auto [k, r] : removed) {
        if (k < 0 || k >= c) fail(Errc::Range, "crossing id " + std::to_string(k) + " out of range");
        mode[k] = static_cast<int>(r);
    }
    auto cont = [&](int a) {
        const auto& x = d.crossing(d.head(a));
        const bool under = x.under_in == a;
        if (mode[d.head(a)] == static_cast<int>(Resolution::Smooth)) return under ? x.over_out : x.under_out;
        return under ? x.under_out : x.over_out;
    };
    const int n = d.arc_count();
    std::vector<int> chain_of(n, -1);
    int next_id = 0;
    for (int a = 0; a < n; ++a) {
        if (mode[d.tail(a)] >= 0) continue;
        int b = a;
        chain_of[b] = next_id;
        while (mode[d.head(b)] >= 0) {
            b = cont(b);
            chain_of[b] = next_id;
        }
        ++next_id;
    }
    int loops = d.free_loops();
    for (int a = 0; a < n; ++a) {
        if (chain_of[a] != -1) continue;
        for (int b = a; chain_of[b] == -1; b = cont(b)) chain_of[b] = -2;
        ++loops;
    }
    std::vector<Crossing> xs;
    for (int k = 0; k < c; ++k) {
        if (mode[k] >= 0) continue;
        auto x = d.crossing(k);
        x.under_in = chain_of[x.under_in];
        x.over_in = chain_of[x.over_in];
        x.under_out = chain_of[x.under_out];
        x.over_out = chain_of[x.over_out];
        xs.push_back(x);
    }
    return Diagram::make(next_id, std::move(xs), loops);
}

inline Diagram smooth_crossing(const Diagram& d, int k) { return splice(d, {{k, Resolution::Smooth}}); }

inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    auto xs = a.crossings();
    const int off = a.arc_count();
    for (auto x : b.crossings()) {
        x.under_in += off;
        x.over_in += off;
        x.under_out += off;
        x.over_out += off;
        xs.push_back(x);
    }
    return Diagram::make(a.arc_count() + b.arc_count(), std::move(xs), a.free_loops() + b.free_loops());
}

// ---------------------------------------------------------------------------
// Native text and JSON formats

inline std::string to_text(const Diagram& d) {
    std::ostringstream os;
    os << "arcs:" << d.arc_count() << " loops:" << d.free_loops() << '\n';
    for (const auto& x : d.crossings()) {
        os << (x.sign > 0 ? "X+" : "X-") << " u_in:" << x.under_in << " o_in:" << x.over_in
           << " u_out:" << x.under_out << " o_out:" << x.over_out << '\n';
    }
    return os.str();
}

inline nlohmann::json to_json(const Diagram& d) {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& x : d.crossings()) {
        xs.push_back({{"sign", x.sign},
                      {"u_in", x.under_in},
                      {"o_in", x.over_in},
                      {"u_out", x.under_out},
                      {"o_out", x.over_out}});
    }
    return {{"arcs", d.arc_count()}, {"loops", d.free_loops()}, {"x", xs}};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline int parse_int(std::string_view s, const std::string& where) {
    if (s.empty()) fail(Errc::Syntax, "expected integer at " + where);
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(std::string(s), &pos);
    } catch (const std::exception&) {
        fail(Errc::Syntax, "expected integer at " + where + ", got '" + std::string(s) + "'");
    }
    if (pos != s.size()) fail(Errc::Syntax, "expected integer at " + where + ", got '" + std::string(s) + "'");
    return v;
}

/// Quote bare object keys so `{arcs:0, loops:1, x:[]}` reads as JSON.
inline std::string quote_bare_keys(std::string_view text) {
    static const std::regex bare(R"(([\{,]\s*)([A-Za-z_][A-Za-z0-9_]*)\s*:)");
    return std::regex_replace(std::string(text), bare, "$1\"$2\":");
}

inline nlohmann::json parse_relaxed_json(std::string_view text) {
    try {
        return nlohmann::json::parse(quote_bare_keys(text));
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::Syntax, std::string("malformed JSON: ") + e.what());
    }
}

inline int json_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) fail(Errc::Syntax, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) fail(Errc::Syntax, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace detail

inline Diagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(Errc::Syntax, "diagram JSON must be an object");
    const int arcs = detail::json_int(j, "arcs");
    const int loops = j.contains("loops") ? detail::json_int(j, "loops") : 0;
    std::vector<Crossing> xs;
    if (j.contains("x")) {
        if (!j.at("x").is_array()) fail(Errc::Syntax, "field 'x' must be an array");
        for (const auto& e : j.at("x")) {
            Crossing x;
            if (e.is_array()) {
                if (e.size() != 5 || !std::all_of(e.begin(), e.end(), [](auto& v) { return v.is_number_integer(); }))
                    fail(Errc::Syntax, "crossing arrays are [sign,u_in,o_in,u_out,o_out]");
                x = {e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>(), e[4].get<int>()};
            } else if (e.is_object()) {
                x = {detail::json_int(e, "sign"), detail::json_int(e, "u_in"), detail::json_int(e, "o_in"),
                     detail::json_int(e, "u_out"), detail::json_int(e, "o_out")};
            } else {
                fail(Errc::Syntax, "crossing entries must be arrays or objects");
            }
            xs.push_back(x);
        }
    }
    return Diagram::make(arcs, std::move(xs), loops);
}

/// Native diagram text: either the line format produced by to_text (blank
/// lines and `#` comments allowed) or its JSON mirror, with or without quoted
/// keys.
inline Diagram parse_diagram(std::string_view text) {
    const auto body = detail::trim(text);
    if (!body.empty() && body.front() == '{') return diagram_from_json(detail::parse_relaxed_json(body));

    std::optional<int> arcs;
    int loops = 0;
    std::vector<Crossing> xs;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto t = detail::trim(line);
        if (t.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        std::istringstream tokens{std::string(t)};
        std::vector<std::string> tok{std::istream_iterator<std::string>(tokens), {}};
        if (tok.front() == "X+" || tok.front() == "X-") {
            if (!arcs) fail(Errc::Syntax, "crossing before header at " + where);
            std::map<std::string, int> fields;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const auto colon = tok[i].find(':');
                if (colon == std::string::npos) fail(Errc::Syntax, "expected key:value at " + where);
                auto key = tok[i].substr(0, colon);
                if (key != "u_in" && key != "o_in" && key != "u_out" && key != "o_out")
                    fail(Errc::Syntax, "unknown slot '" + key + "' at " + where);
                if (!fields.emplace(key, detail::parse_int(tok[i].substr(colon + 1), where)).second)
                    fail(Errc::Syntax, "duplicate slot '" + key + "' at " + where);
            }
            if (fields.size() != 4) fail(Errc::Syntax, "crossing needs u_in, o_in, u_out, o_out at " + where);
            xs.push_back({tok.front() == "X+" ? 1 : -1, fields["u_in"], fields["o_in"], fields["u_out"],
                          fields["o_out"]});
        } else {
            if (arcs) fail(Errc::Syntax, "unexpected '" + tok.front() + "' at " + where);
            for (const auto& kv : tok) {
                const auto colon = kv.find(':');
                if (colon == std::string::npos) fail(Errc::Syntax, "expected key:value at " + where);
                const auto key = kv.substr(0, colon);
                const int v = detail::parse_int(kv.substr(colon + 1), where);
                if (key == "arcs") arcs = v;
                else if (key == "loops") loops = v;
                else fail(Errc::Syntax, "unknown header key '" + key + "' at " + where);
            }
            if (!arcs) fail(Errc::Syntax, "header must declare arcs:<n> at " + where);
        }
    }
    if (!arcs) fail(Errc::Syntax, "missing header line 'arcs:<n> loops:<k>'");
    return Diagram::make(*arcs, std::move(xs), loops);
}

// ---------------------------------------------------------------------------
// Classic PD import
//
// X[a,b,c,d]: a is the incoming under-arc, slots listed counterclockwise, so
// the under-strand runs a->c and the over-strand joins b and d.  The
// over-strand direction is fixed first by the arc-slot invariant (each label
// is entered once and left once), then by the successor rule on labels for
// any component that never passes under.  Over running b->d is a positive
// crossing, so X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] is the positive trefoil
// (the mirror of KnotTheory's reading of the same code).  An optional line
// `components: 1-6 7-10` declares the label interval of each component for
// the wraparound case.  An over-only component with just two labels has no
// preferred direction and raises AmbiguousOrientation; a one-crossing kink
// such as X[1,2,2,1] is always fixed by its own under-strand.

namespace detail {

struct PdCrossing {
    int a, b, c, d;
};

} // namespace detail

inline Diagram import_pd(std::string_view text) {
    std::vector<detail::PdCrossing> pd;
    std::vector<std::pair<int, int>> intervals;
    const std::string src(text);

    static const std::regex comp_line(R"(components\s*:([^\n]*))");
    static const std::regex interval(R"((-?\d+)\s*(?:-|\.\.)\s*(-?\d+))");
    std::string stripped = src;
    if (std::smatch m; std::regex_search(src, m, comp_line)) {
        const std::string spec = m[1];
        for (auto it = std::sregex_iterator(spec.begin(), spec.end(), interval); it != std::sregex_iterator(); ++it) {
            const int lo = std::stoi((*it)[1]);
            const int hi = std::stoi((*it)[2]);
            if (hi < lo) fail(Errc::Syntax, "component interval " + it->str() + " is reversed");
            intervals.emplace_back(lo, hi);
        }
        stripped = m.prefix().str() + m.suffix().str();
    }

    static const std::regex xre(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
    std::string rest;
    std::size_t last = 0;
    for (auto it = std::sregex_iterator(stripped.begin(), stripped.end(), xre); it != std::sregex_iterator(); ++it) {
        pd.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
        rest += stripped.substr(last, static_cast<std::size_t>(it->position()) - last);
        last = static_cast<std::size_t>(it->position() + it->length());
    }
    rest += stripped.substr(last);
    for (char ch : rest) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == 'P' ||
            ch == 'D')
            continue;
        fail(Errc::Syntax, std::string("unexpected character '") + ch + "' in PD code");
    }
    if (pd.empty()) fail(Errc::Syntax, "PD code has no crossings");

    std::map<int, int> occurrences;
    for (const auto& x : pd)
        for (int l : {x.a, x.b, x.c, x.d}) ++occurrences[l];
    for (auto [label, n] : occurrences)
        if (n != 2)
            fail(Errc::Invariant, "PD label " + std::to_string(label) + " occurs " + std::to_string(n) + " times");

    const std::size_t nx = pd.size();
    std::map<int, int> ins, outs;
    for (const auto& x : pd) {
        ++ins[x.a];
        ++outs[x.c];
    }
    // 0 unknown, 1 means over runs b->d, -1 means d->b
    std::vector<int> dir(nx, 0);
    auto commit = [&](std::size_t k, int v) {
        dir[k] = v;
        const auto& x = pd[k];
        ++ins[v > 0 ? x.b : x.d];
        ++outs[v > 0 ? x.d : x.b];
    };
    auto propagate = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < nx; ++k) {
                if (dir[k] != 0) continue;
                const auto& x = pd[k];
                if (x.b == x.d) {
                    commit(k, 1);
                    changed = true;
                    continue;
                }
                int want = 0;
                if (ins[x.b] > 0 || outs[x.d] > 0) want = -1;
                if (outs[x.b] > 0 || ins[x.d] > 0) {
                    if (want == -1)
                        fail(Errc::Invariant, "PD labels " + std::to_string(x.b) + "," + std::to_string(x.d) +
                                                  " cannot be oriented consistently");
                    want = 1;
                }
                if (want != 0) {
                    commit(k, want);
                    changed = true;
                }
            }
        }
    };
    auto successor_rule = [&](int from, int to) {
        if (!intervals.empty()) {
            for (auto [lo, hi] : intervals)
                if (from >= lo && from <= hi) return to == (from == hi ? lo : from + 1);
            fail(Errc::Syntax, "label " + std::to_string(from) + " lies in no declared component");
        }
        if (to == from + 1) return true;
        return from > to + 1; // wraparound: the largest label of a component precedes its smallest
    };

    propagate();
    for (std::size_t k = 0; k < nx; ++k) {
        if (dir[k] != 0) continue;
        const auto& x = pd[k];
        bool fwd = successor_rule(x.b, x.d);
        bool back = successor_rule(x.d, x.b);
        // Left unresolved here, the component runs only over other strands.
        // With two labels it closes up either way round.
        if (intervals.empty()) {
            for (std::size_t j = 0; j < nx; ++j)
                if (j != k && std::minmax(pd[j].b, pd[j].d) == std::minmax(x.b, x.d)) fwd = back = true;
        }
        if (fwd == back)
            fail(Errc::AmbiguousOrientation, "cannot orient the over-strand " + std::to_string(x.b) + "/" +
                                                 std::to_string(x.d) + " of crossing " + std::to_string(k) +
                                                 "; supply a components: header or use the native format");
        commit(k, fwd ? 1 : -1);
        propagate();
    }

    std::map<int, int> id;
    for (auto [label, n] : occurrences) id.emplace(label, static_cast<int>(id.size()));
    std::vector<Crossing> xs;
    for (std::size_t k = 0; k < nx; ++k) {
        const auto& p = pd[k];
        Crossing x;
        x.under_in = id[p.a];
        x.under_out = id[p.c];
        x.over_in = id[dir[k] > 0 ? p.b : p.d];
        x.over_out = id[dir[k] > 0 ? p.d : p.b];
        x.sign = dir[k] > 0 ? 1 : -1;
        xs.push_back(x);
    }
    return Diagram::make(static_cast<int>(id.size()), std::move(xs), 0);
}

} // namespace qpk
