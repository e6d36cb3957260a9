#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parahiggs {

enum class Errc {
    OddValuation,
    LeadingNotSquareOfBranch,
    PrecisionExhausted,
    ZeroElement,
    UnsupportedSupport,
    DegreeHypothesisViolated,
    InvalidCurve,
    InvalidPoint,
    MembershipFailure,
    ZeroResidue,
    NonNilpotentResidue,
    LevelMismatch,
    TruncationRequired,
    DimensionMismatch,
    DivisionByZero,
    ConfigInvalid,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class MathError : public std::runtime_error {
public:
    MathError(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace parahiggs
