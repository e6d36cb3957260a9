#pragma once

#include "parahiggs/rat.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace parahiggs {

/// Dense univariate polynomial over Q, coefficients indexed by exponent.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs);
    explicit Poly(std::vector<Rat> coeffs);
    Poly(const Rat& c);  // NOLINT(google-explicit-constructor)

    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(const Rat& c, int exponent);
    /// (x - root)^multiplicity
    static Poly linear_power(const Rat& root, int multiplicity);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int exponent) const;
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly monic() const;
    /// p(x0 + t) as a polynomial in t.
    Poly shifted(const Rat& x0) const;
    /// Multiplicity of x0 as a root; the zero polynomial is rejected.
    int root_multiplicity(const Rat& x0) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& p);

/// Remove every factor (x - r) for r in roots.
Poly strip_roots(Poly p, const std::vector<Rat>& roots);

}  // namespace parahiggs
