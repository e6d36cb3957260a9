#include "parahiggs/ratfunc.hpp"

#include "parahiggs/error.hpp"

#include <ostream>

namespace parahiggs {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw MathError(Errc::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    const Poly g = poly_gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    const Rat lead = den_.leading();
    if (lead != Rat(1)) {
        const Rat inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

int RatFunc::degree() const {
    if (is_zero()) throw MathError(Errc::ZeroElement, "degree of zero rational function");
    return num_.degree() - den_.degree();
}

int RatFunc::order_at(const Rat& x0) const {
    if (is_zero()) throw MathError(Errc::ZeroElement, "order of zero rational function");
    return num_.root_multiplicity(x0) - den_.root_multiplicity(x0);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError(Errc::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
    return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    if (den_ == o.den_) return *this = RatFunc(num_ - o.num_, den_);
    return *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    return *this = RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw MathError(Errc::DivisionByZero, "rational function division by zero");
    return *this = RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace parahiggs
