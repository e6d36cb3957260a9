#pragma once

#include "parahiggs/poly.hpp"

#include <iosfwd>
#include <string>

namespace parahiggs {

/// Element of Q(x) in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// deg num - deg den; the zero function is rejected.
    int degree() const;
    /// Order of vanishing at x0 (negative for poles).
    int order_at(const Rat& x0) const;

    RatFunc inverse() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r);

private:
    Poly num_;
    Poly den_;
};

}  // namespace parahiggs
