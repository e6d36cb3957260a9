#pragma once

#include "parahiggs/laurent.hpp"
#include "parahiggs/ratfunc.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace parahiggs {

/// Odd-degree hyperelliptic curve y^2 = f(x), deg f = 2g + 1, f squarefree,
/// with a single point at infinity. Cheap to copy (shared immutable data).
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(Poly f);

    const Poly& f() const { return impl_->f; }
    int genus() const { return impl_->genus; }

    bool contains(const Rat& x, const Rat& y) const { return y * y == impl_->f.eval(x); }

    friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) {
        return a.impl_ == b.impl_ || a.impl_->f == b.impl_->f;
    }

private:
    struct Impl {
        Poly f;
        int genus;
    };
    std::shared_ptr<const Impl> impl_;
};

struct CurvePoint {
    enum class Kind { AffineNonWeierstrass, AffineWeierstrass, Infinity };

    Kind kind = Kind::Infinity;
    Rat x;
    Rat y;

    static CurvePoint affine(const HyperellipticCurve& c, const Rat& x, const Rat& y);
    static CurvePoint weierstrass(const HyperellipticCurve& c, const Rat& x);
    static CurvePoint infinity() { return {}; }

    bool is_marked_kind() const { return kind == Kind::AffineNonWeierstrass; }
    /// Image under the hyperelliptic involution y -> -y.
    CurvePoint conjugate() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b);

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const CurvePoint& p);

/// Finite formal sum of points.
class Divisor {
public:
    Divisor() = default;
    Divisor(std::initializer_list<std::pair<const CurvePoint, int>> entries);

    void add(const CurvePoint& p, int n);
    int mult(const CurvePoint& p) const;
    int degree() const;
    bool is_effective() const;
    Divisor scaled(int k) const;

    const std::map<CurvePoint, int>& entries() const { return e_; }

    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::map<CurvePoint, int> e_;
};

/// Element a(x) + b(x) y of the function field Q(x)[y]/(y^2 - f).
class FieldElement {
public:
    FieldElement(HyperellipticCurve curve, RatFunc a, RatFunc b = RatFunc());

    static FieldElement y(const HyperellipticCurve& c) { return {c, RatFunc(), RatFunc(Rat(1))}; }
    static FieldElement x(const HyperellipticCurve& c) { return {c, RatFunc(Poly::x())}; }

    const HyperellipticCurve& curve() const { return curve_; }
    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// a^2 - b^2 f, the norm down to Q(x).
    RatFunc norm() const;
    /// a - b y
    FieldElement conjugate() const { return {curve_, a_, -b_}; }
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator*=(const Rat& s);

    friend FieldElement operator+(FieldElement u, const FieldElement& v) { return u += v; }
    friend FieldElement operator-(FieldElement u, const FieldElement& v) { return u -= v; }
    friend FieldElement operator*(FieldElement u, const FieldElement& v) { return u *= v; }
    friend FieldElement operator*(FieldElement u, const Rat& s) { return u *= s; }
    friend FieldElement operator*(const Rat& s, FieldElement u) { return u *= s; }
    friend FieldElement operator-(const FieldElement& u) { return {u.curve_, -u.a_, -u.b_}; }
    friend FieldElement operator/(const FieldElement& u, const FieldElement& v) { return u * v.inverse(); }

    friend bool operator==(const FieldElement& u, const FieldElement& v) {
        return u.curve_ == v.curve_ && u.a_ == v.a_ && u.b_ == v.b_;
    }

    std::string str() const;

private:
    void check_same_curve(const FieldElement& o) const;
    HyperellipticCurve curve_;
    RatFunc a_;
    RatFunc b_;
};

/// coeff * dx / y
struct MeroDifferential {
    FieldElement coeff;
    static constexpr int frame_power = 1;

    friend MeroDifferential operator+(const MeroDifferential& u, const MeroDifferential& v) { return {u.coeff + v.coeff}; }
    friend MeroDifferential operator*(const Rat& s, const MeroDifferential& u) { return {s * u.coeff}; }
    friend bool operator==(const MeroDifferential&, const MeroDifferential&) = default;
};

/// coeff * (dx)^2 / y^2
struct QuadDifferential {
    FieldElement coeff;
    static constexpr int frame_power = 2;

    friend QuadDifferential operator+(const QuadDifferential& u, const QuadDifferential& v) { return {u.coeff + v.coeff}; }
    friend QuadDifferential operator-(const QuadDifferential& u, const QuadDifferential& v) { return {u.coeff - v.coeff}; }
    friend QuadDifferential operator*(const Rat& s, const QuadDifferential& u) { return {s * u.coeff}; }
    friend bool operator==(const QuadDifferential&, const QuadDifferential&) = default;
};

inline QuadDifferential operator*(const MeroDifferential& u, const MeroDifferential& v) { return {u.coeff * v.coeff}; }

/// Order of vanishing at p (negative for poles). Throws ZeroElement on 0.
int ord_at(const FieldElement& e, const CurvePoint& p);
int ord_at(const MeroDifferential& w, const CurvePoint& p);
int ord_at(const QuadDifferential& q, const CurvePoint& p);

/// Expansion in t = x - x0 at an affine non-Weierstrass point, valid
/// through O(t^precision). For differentials the frame is rewritten so the
/// result w(t) satisfies  element = w(t) (dt)^k.
LaurentSeries local_expand(const FieldElement& e, const CurvePoint& p, int precision);
LaurentSeries local_expand(const MeroDifferential& w, const CurvePoint& p, int precision);
LaurentSeries local_expand(const QuadDifferential& q, const CurvePoint& p, int precision);

/// c_m(q) = coefficient of t^{-m-2} (dt)^2 in the expansion of q at p, for
/// m_lo <= m <= m_hi.
std::map<int, Rat> c_coefficients(const QuadDifferential& q, const CurvePoint& p, int m_lo, int m_hi);

/// Coefficient of t^{-1} dt.
Rat residue(const MeroDifferential& w, const CurvePoint& p);

}  // namespace parahiggs
