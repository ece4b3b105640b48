#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpk {

enum class Errc {
    Syntax,
    Invariant,
    AmbiguousOrientation,
    LoopEdge,
    SizeLimit,
    NotHomogeneous,
    SplitInput,
    NonAdmissible,
    IterationLimit,
    WitnessMismatch,
    Range,
    NotLone,
    NotCutEdge,
    ZeroPolynomial,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::Syntax: return "SyntaxError";
    case Errc::Invariant: return "InvariantError";
    case Errc::AmbiguousOrientation: return "AmbiguousOrientation";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::SplitInput: return "SplitInput";
    case Errc::NonAdmissible: return "NonAdmissible";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::WitnessMismatch: return "WitnessMismatch";
    case Errc::Range: return "RangeError";
    case Errc::NotLone: return "NotLone";
    case Errc::NotCutEdge: return "NotCutEdge";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    }
    return "Error";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace qpk
