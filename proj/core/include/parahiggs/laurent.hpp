#pragma once

#include "parahiggs/poly.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace parahiggs {

/// Truncated Laurent series  sum_{j} c_j t^{valuation + j} + O(t^{precision}).
///
/// `precision()` is absolute: every coefficient of t^n with n < precision is
/// known exactly. A series that is zero to its precision stores no
/// coefficients and has valuation == precision. Arithmetic propagates the
/// largest precision the operands justify; reading a coefficient beyond it
/// raises PrecisionExhausted.
class LaurentSeries {
public:
    /// O(t^precision)
    static LaurentSeries zero(int precision);
    /// Exact polynomial in t, truncated at `precision`.
    static LaurentSeries from_poly(const Poly& p, int precision);
    /// Coefficients of t^{valuation}, t^{valuation+1}, ... + O(t^{valuation + coeffs.size()}).
    static LaurentSeries from_coeffs(int valuation, std::vector<Rat> coeffs);
    static LaurentSeries monomial(const Rat& c, int exponent, int precision);

    bool is_zero() const { return c_.empty(); }
    int valuation() const { return val_; }
    int precision() const { return val_ + static_cast<int>(c_.size()); }
    /// Number of known coefficients starting at the valuation.
    int relative_precision() const { return static_cast<int>(c_.size()); }
    Rat leading() const;

    /// Coefficient of t^n; PrecisionExhausted when n >= precision().
    Rat coeff(int n) const;
    LaurentSeries truncated(int precision) const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const Rat& s);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(LaurentSeries a, const Rat& s) { return a *= s; }
    friend LaurentSeries operator-(LaurentSeries a) { return a *= Rat(-1); }

    /// Multiplicative inverse; the series must be nonzero to its precision.
    LaurentSeries inverse() const;
    /// Multiply by t^k.
    LaurentSeries shifted(int k) const;

    /// Equal as truncated series: same precision and coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

private:
    void normalize();
    int val_ = 0;
    std::vector<Rat> c_;
};

/// Square root with prescribed leading coefficient `branch`.
/// Requires even valuation and leading coefficient == branch^2.
LaurentSeries series_sqrt(const LaurentSeries& s, const Rat& branch);

}  // namespace parahiggs
