#pragma once

// Braid words, their closures, and quasipositive factorizations.

#include <cstdlib>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/diagram.hpp"
#include "qpknot/error.hpp"

namespace qpk {

/// Letter i > 0 is sigma_i, i < 0 is sigma_|i|^-1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    static BraidWord make(int strands, std::vector<int> letters) {
        if (strands < 1) fail(Errc::Range, "a braid needs at least one strand");
        for (int l : letters)
            if (l == 0 || std::abs(l) >= strands)
                fail(Errc::Range, "letter " + std::to_string(l) + " is not a generator of B_" + std::to_string(strands));
        return BraidWord{strands, std::move(letters)};
    }

    int exponent_sum() const {
        int e = 0;
        for (int l : letters) e += l > 0 ? 1 : -1;
        return e;
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord inverse(const BraidWord& w) {
    BraidWord out{w.strands, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

/// `braid n=3: 2 1 -2 1`
inline BraidWord parse_braid(std::string_view text) {
    static const std::regex re(R"(^\s*braid\s+n\s*=\s*(\d+)\s*:([^\n]*?)\s*$)");
    std::string s(text);
    // allow comment lines and trailing newline
    std::string body;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!body.empty()) fail(Errc::Syntax, "braid text must be a single line");
        body = line;
    }
    std::smatch m;
    if (!std::regex_match(body, m, re)) fail(Errc::Syntax, "expected 'braid n=<strands>: <letters>'");
    const int n = std::stoi(m[1]);
    std::vector<int> letters;
    std::istringstream ls(m[2].str());
    for (std::string tok; ls >> tok;) letters.push_back(detail::parse_int(tok, "braid letter"));
    return BraidWord::make(n, std::move(letters));
}

inline std::string to_text(const BraidWord& w) {
    std::ostringstream os;
    os << "braid n=" << w.strands << ":";
    for (int l : w.letters) os << ' ' << l;
    return os.str();
}

inline int braid_sl(const BraidWord& w) { return w.exponent_sum() - w.strands; }

/// Standard closure, strands running upward: sigma_i crosses positions i and
/// i+1 with the strand from position i passing over.  Untouched strands are
/// free loops.
inline Diagram closure(const BraidWord& w) {
    const int n = w.strands;
    int fresh = 0;
    std::vector<int> start(n), cur(n);
    std::vector<char> touched(n, 0);
    for (int p = 0; p < n; ++p) start[p] = cur[p] = fresh++;
    std::vector<Crossing> xs;
    for (int l : w.letters) {
        const int i = std::abs(l) - 1;
        const int a = cur[i], b = cur[i + 1];
        const int x = fresh++, y = fresh++;
        if (l > 0) xs.push_back({1, b, a, x, y});
        else xs.push_back({-1, a, b, y, x});
        cur[i] = x;
        cur[i + 1] = y;
        touched[i] = touched[i + 1] = 1;
    }
    std::vector<int> alias(fresh);
    for (int t = 0; t < fresh; ++t) alias[t] = t;
    int loops = 0;
    for (int p = 0; p < n; ++p) {
        if (touched[p]) alias[cur[p]] = start[p];
        else ++loops;
    }
    std::map<int, int> id;
    auto rename = [&](int t) {
        t = alias[t];
        return id.try_emplace(t, static_cast<int>(id.size())).first->second;
    };
    // number arcs by creation order
    std::vector<int> used;
    for (const auto& x : xs) used.insert(used.end(), {alias[x.under_in], alias[x.over_in], alias[x.under_out], alias[x.over_out]});
    std::sort(used.begin(), used.end());
    for (int t : used) id.try_emplace(t, static_cast<int>(id.size()));
    for (auto& x : xs) {
        x.under_in = rename(x.under_in);
        x.over_in = rename(x.over_in);
        x.under_out = rename(x.under_out);
        x.over_out = rename(x.over_out);
    }
    return Diagram::make(static_cast<int>(id.size()), std::move(xs), loops);
}

struct QPFactor {
    std::vector<int> conj;
    int gen = 1;
    friend bool operator==(const QPFactor&, const QPFactor&) = default;
};

/// Product of conjugates w_i sigma_{k_i} w_i^-1.
struct QPWitness {
    int strands = 2;
    std::vector<QPFactor> factors;
    friend bool operator==(const QPWitness&, const QPWitness&) = default;
};

inline BraidWord expand_witness(const QPWitness& q) {
    if (q.strands < 1) fail(Errc::Range, "a braid needs at least one strand");
    std::vector<int> letters;
    for (const auto& f : q.factors) {
        if (f.gen < 1 || f.gen >= q.strands)
            fail(Errc::Range, "generator " + std::to_string(f.gen) + " is not a positive generator of B_" +
                                  std::to_string(q.strands));
        const auto w = BraidWord::make(q.strands, f.conj);
        letters.insert(letters.end(), w.letters.begin(), w.letters.end());
        letters.push_back(f.gen);
        const auto wi = inverse(w);
        letters.insert(letters.end(), wi.letters.begin(), wi.letters.end());
    }
    return BraidWord::make(q.strands, std::move(letters));
}

inline nlohmann::json to_json(const QPWitness& q) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : q.factors) fs.push_back({{"conj", f.conj}, {"gen", f.gen}});
    return {{"strands", q.strands}, {"factors", fs}};
}

inline QPWitness witness_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("strands") || !j.contains("factors"))
        fail(Errc::Syntax, "witness JSON needs 'strands' and 'factors'");
    QPWitness q;
    try {
        q.strands = j.at("strands").get<int>();
        for (const auto& f : j.at("factors")) {
            QPFactor qf;
            if (f.contains("conj")) qf.conj = f.at("conj").get<std::vector<int>>();
            qf.gen = f.at("gen").get<int>();
            q.factors.push_back(std::move(qf));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::Syntax, std::string("malformed witness: ") + e.what());
    }
    expand_witness(q); // range checks
    return q;
}

inline QPWitness parse_witness(std::string_view text) {
    try {
        return witness_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::Syntax, std::string("malformed witness JSON: ") + e.what());
    }
}

} // namespace qpk
