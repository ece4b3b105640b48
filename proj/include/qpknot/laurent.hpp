#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpknot/error.hpp"

namespace qpk {

/// Sparse Laurent polynomial in v and z with integer coefficients.
class LaurentPoly2 {
public:
    using Exponents = std::pair<int, int>; // (v, z)

    LaurentPoly2() = default;
    LaurentPoly2(std::int64_t c) { // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[{0, 0}] = c;
    }

    static LaurentPoly2 monomial(std::int64_t c, int v_exp, int z_exp) {
        LaurentPoly2 p;
        if (c != 0) p.terms_[{v_exp, z_exp}] = c;
        return p;
    }

    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coeff(int v_exp, int z_exp) const {
        auto it = terms_.find({v_exp, z_exp});
        return it == terms_.end() ? 0 : it->second;
    }

    int min_deg_v() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "v-degree of the zero polynomial");
        return terms_.begin()->first.first;
    }
    int max_deg_v() const {
        if (is_zero()) fail(Errc::ZeroPolynomial, "v-degree of the zero polynomial");
        return terms_.rbegin()->first.first;
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, -c);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator-(const LaurentPoly2& a) { return LaurentPoly2{} - a; }

    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.accumulate({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return out;
    }

    /// Multiply by c * v^dv * z^dz.
    LaurentPoly2 shifted(std::int64_t c, int dv, int dz) const {
        LaurentPoly2 out;
        if (c == 0) return out;
        for (const auto& [e, k] : terms_) out.terms_[{e.first + dv, e.second + dz}] = k * c;
        return out;
    }

    /// P(-1/v, z).
    LaurentPoly2 mirrored() const {
        LaurentPoly2 out;
        for (const auto& [e, c] : terms_) out.terms_[{-e.first, e.second}] = (e.first % 2 == 0) ? c : -c;
        return out;
    }

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

private:
    void accumulate(const Exponents& e, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }

    std::map<Exponents, std::int64_t> terms_;
};

inline LaurentPoly2 pow(const LaurentPoly2& base, int k) {
    LaurentPoly2 out{1};
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
}

/// Canonical text: descending v-exponent, then ascending z-exponent, e.g.
/// `-v^4 + 2v^2 + v^2 z^2`.
inline std::string to_string(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<LaurentPoly2::Exponents, std::int64_t>> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    auto var = [](char name, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return std::string(1, name);
        return std::string(1, name) + "^" + std::to_string(e);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        const auto mag = c < 0 ? -c : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::string mono = var('v', e.first);
        const std::string zs = var('z', e.second);
        if (!zs.empty()) mono += (mono.empty() ? "" : " ") + zs;
        if (mono.empty()) os << mag;
        else if (mag == 1) os << mono;
        else os << mag << mono;
    }
    return os.str();
}

/// JSON: list of [v_exp, z_exp, coeff] in ascending (v, z) order.
inline nlohmann::json to_json(const LaurentPoly2& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e.first, e.second, c});
    return out;
}

inline LaurentPoly2 poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) fail(Errc::Syntax, "polynomial JSON must be an array of [v, z, coeff]");
    LaurentPoly2 p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) fail(Errc::Syntax, "polynomial term must be [v, z, coeff]");
        p += LaurentPoly2::monomial(t[2].get<std::int64_t>(), t[0].get<int>(), t[1].get<int>());
    }
    return p;
}

} // namespace qpk
