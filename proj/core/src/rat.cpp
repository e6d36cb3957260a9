#include "parahiggs/rat.hpp"

#include "parahiggs/error.hpp"

#include <functional>
#include <ostream>

namespace parahiggs {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::OddValuation: return "OddValuation";
        case Errc::LeadingNotSquareOfBranch: return "LeadingNotSquareOfBranch";
        case Errc::PrecisionExhausted: return "PrecisionExhausted";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::UnsupportedSupport: return "UnsupportedSupport";
        case Errc::DegreeHypothesisViolated: return "DegreeHypothesisViolated";
        case Errc::InvalidCurve: return "InvalidCurve";
        case Errc::InvalidPoint: return "InvalidPoint";
        case Errc::MembershipFailure: return "MembershipFailure";
        case Errc::ZeroResidue: return "ZeroResidue";
        case Errc::NonNilpotentResidue: return "NonNilpotentResidue";
        case Errc::LevelMismatch: return "LevelMismatch";
        case Errc::TruncationRequired: return "TruncationRequired";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError(Errc::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(s), mpz_class(1));
        return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw MathError(Errc::ConfigInvalid, "not a rational number: '" + s + "'");
    }
}

Rat Rat::inverse() const {
    if (is_zero()) throw MathError(Errc::DivisionByZero, "inverse of zero");
    return Rat(mpq_class(1) / q_);
}

Rat Rat::pow(unsigned e) const {
    Rat result(1);
    Rat base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw MathError(Errc::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rat::hash() const {
    // Low limbs are enough to spread small values; equal values hash equal.
    const auto limb = [](const mpz_class& z) -> std::size_t {
        if (z == 0) return 0;
        return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * (sgn(z) < 0 ? 31u : 17u);
    };
    return limb(q_.get_num()) ^ (limb(q_.get_den()) * 0x9e3779b97f4a7c15ULL);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_.get_str(); }

}  // namespace parahiggs
