#include "parahiggs/curve.hpp"

#include "parahiggs/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace parahiggs {

HyperellipticCurve::HyperellipticCurve(Poly f) {
    const int d = f.degree();
    if (d < 3 || d % 2 == 0) {
        throw MathError(Errc::InvalidCurve, "deg f must be odd and >= 3, got " + std::to_string(d));
    }
    if (!is_squarefree(f)) throw MathError(Errc::InvalidCurve, "f is not squarefree: " + f.str());
    impl_ = std::make_shared<const Impl>(Impl{std::move(f), (d - 1) / 2});
}

// ---------------------------------------------------------------- points

CurvePoint CurvePoint::affine(const HyperellipticCurve& c, const Rat& x, const Rat& y) {
    if (!c.contains(x, y)) throw MathError(Errc::InvalidPoint, "(" + x.str() + ", " + y.str() + ") is not on the curve");
    if (y.is_zero()) throw MathError(Errc::InvalidPoint, "y = 0 is a Weierstrass point; use CurvePoint::weierstrass");
    return {Kind::AffineNonWeierstrass, x, y};
}

CurvePoint CurvePoint::weierstrass(const HyperellipticCurve& c, const Rat& x) {
    if (!c.f().eval(x).is_zero()) throw MathError(Errc::InvalidPoint, "f(" + x.str() + ") != 0");
    return {Kind::AffineWeierstrass, x, Rat(0)};
}

CurvePoint CurvePoint::conjugate() const {
    CurvePoint p = *this;
    p.y = -p.y;
    return p;
}

std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
}

std::string CurvePoint::str() const {
    switch (kind) {
        case Kind::Infinity: return "inf";
        case Kind::AffineWeierstrass: return "W(" + x.str() + ")";
        case Kind::AffineNonWeierstrass: return "(" + x.str() + "," + y.str() + ")";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }

// ---------------------------------------------------------------- divisors

Divisor::Divisor(std::initializer_list<std::pair<const CurvePoint, int>> entries) {
    for (const auto& [p, n] : entries) add(p, n);
}

void Divisor::add(const CurvePoint& p, int n) {
    const int m = (e_[p] += n);
    if (m == 0) e_.erase(p);
}

int Divisor::mult(const CurvePoint& p) const {
    auto it = e_.find(p);
    return it == e_.end() ? 0 : it->second;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [p, n] : e_) d += n;
    return d;
}

bool Divisor::is_effective() const {
    return std::all_of(e_.begin(), e_.end(), [](const auto& kv) { return kv.second >= 0; });
}

Divisor Divisor::scaled(int k) const {
    Divisor out;
    for (const auto& [p, n] : e_) out.add(p, n * k);
    return out;
}

// ---------------------------------------------------------------- field elements

FieldElement::FieldElement(HyperellipticCurve curve, RatFunc a, RatFunc b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {}

void FieldElement::check_same_curve(const FieldElement& o) const {
    if (!(curve_ == o.curve_)) throw MathError(Errc::DimensionMismatch, "elements live on different curves");
}

RatFunc FieldElement::norm() const { return a_ * a_ - b_ * b_ * RatFunc(curve_.f()); }

FieldElement FieldElement::inverse() const {
    const RatFunc n = norm();
    if (n.is_zero()) throw MathError(Errc::DivisionByZero, "inverse of zero field element");
    const RatFunc ninv = n.inverse();
    return {curve_, a_ * ninv, -(b_ * ninv)};
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_curve(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_curve(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_curve(o);
    RatFunc a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * RatFunc(curve_.f());
    RatFunc b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

FieldElement& FieldElement::operator*=(const Rat& s) {
    a_ *= RatFunc(s);
    b_ *= RatFunc(s);
    return *this;
}

std::string FieldElement::str() const {
    if (b_.is_zero()) return a_.str();
    if (a_.is_zero()) return "(" + b_.str() + ")*y";
    return a_.str() + " + (" + b_.str() + ")*y";
}

// ---------------------------------------------------------------- valuations

namespace {

int frame_order(const HyperellipticCurve& c, const CurvePoint& p, int k) {
    // div(dx/y) = (2g - 2) * infinity
    return p.kind == CurvePoint::Kind::Infinity ? k * (2 * c.genus() - 2) : 0;
}

constexpr int kNoOrder = std::numeric_limits<int>::max();

LaurentSeries expand_ratfunc(const RatFunc& r, const Rat& x0, int precision) {
    if (r.is_zero()) return LaurentSeries::zero(precision);
    const int vn = r.num().root_multiplicity(x0);
    const int vd = r.den().root_multiplicity(x0);
    const int rel = precision - (vn - vd);
    if (rel <= 0) return LaurentSeries::zero(precision);
    const LaurentSeries ns = LaurentSeries::from_poly(r.num().shifted(x0), vn + rel);
    const LaurentSeries ds = LaurentSeries::from_poly(r.den().shifted(x0), vd + rel);
    return ns * ds.inverse();
}

/// (a + b y) * y^{-k} expanded at a non-Weierstrass affine point.
LaurentSeries expand_framed(const FieldElement& e, const CurvePoint& p, int precision, int k) {
    if (p.kind != CurvePoint::Kind::AffineNonWeierstrass) {
        throw MathError(Errc::UnsupportedSupport, "local expansion only at affine non-Weierstrass points, got " + p.str());
    }
    const auto& c = e.curve();
    int vmin = kNoOrder;
    if (!e.a().is_zero()) vmin = std::min(vmin, e.a().order_at(p.x));
    if (!e.b().is_zero()) vmin = std::min(vmin, e.b().order_at(p.x));
    if (vmin == kNoOrder) return LaurentSeries::zero(precision);

    // y is a unit at p, so every power of y needs precision - vmin terms.
    const int ylen = std::max(precision - vmin, 1);
    const LaurentSeries y = series_sqrt(LaurentSeries::from_poly(c.f().shifted(p.x), ylen), p.y);
    const LaurentSeries one = LaurentSeries::from_poly(Poly(Rat(1)), ylen);
    const LaurentSeries yinv = y.inverse();
    const auto ypow = [&](int n) {
        LaurentSeries r = one;
        for (int i = 0; i < n; ++i) r = r * y;
        for (int i = 0; i > n; --i) r = r * yinv;
        return r;
    };

    LaurentSeries out = LaurentSeries::zero(precision);
    if (!e.a().is_zero()) out += expand_ratfunc(e.a(), p.x, precision) * ypow(-k);
    if (!e.b().is_zero()) out += expand_ratfunc(e.b(), p.x, precision) * ypow(1 - k);
    return out.truncated(precision);
}

int ord_element(const FieldElement& e, const CurvePoint& p) {
    if (e.is_zero()) throw MathError(Errc::ZeroElement, "order of the zero element");
    const auto& c = e.curve();
    const int two_g_plus_one = 2 * c.genus() + 1;
    int v = kNoOrder;
    switch (p.kind) {
        case CurvePoint::Kind::Infinity:
            // v(x) = -2, v(y) = -(2g + 1): the two parts never cancel (parity).
            if (!e.a().is_zero()) v = std::min(v, -2 * e.a().degree());
            if (!e.b().is_zero()) v = std::min(v, -2 * e.b().degree() - two_g_plus_one);
            return v;
        case CurvePoint::Kind::AffineWeierstrass:
            // v(x - x0) = 2, v(y) = 1.
            if (!e.a().is_zero()) v = std::min(v, 2 * e.a().order_at(p.x));
            if (!e.b().is_zero()) v = std::min(v, 2 * e.b().order_at(p.x) + 1);
            return v;
        case CurvePoint::Kind::AffineNonWeierstrass: {
            // ord_P(z) + ord_P(conj z) = ord_{x0}(norm) and ord_P(conj z) >= min(ord a, ord b).
            int lower = kNoOrder;
            if (!e.a().is_zero()) lower = std::min(lower, e.a().order_at(p.x));
            if (!e.b().is_zero()) lower = std::min(lower, e.b().order_at(p.x));
            const int upper = e.norm().order_at(p.x) - lower;
            const LaurentSeries s = expand_framed(e, p, upper + 1, 0);
            if (s.is_zero()) throw MathError(Errc::PrecisionExhausted, "valuation bound violated at " + p.str());
            return s.valuation();
        }
    }
    return v;
}

}  // namespace

int ord_at(const FieldElement& e, const CurvePoint& p) { return ord_element(e, p); }

int ord_at(const MeroDifferential& w, const CurvePoint& p) {
    return ord_element(w.coeff, p) + frame_order(w.coeff.curve(), p, 1);
}

int ord_at(const QuadDifferential& q, const CurvePoint& p) {
    return ord_element(q.coeff, p) + frame_order(q.coeff.curve(), p, 2);
}

LaurentSeries local_expand(const FieldElement& e, const CurvePoint& p, int precision) {
    return expand_framed(e, p, precision, 0);
}

LaurentSeries local_expand(const MeroDifferential& w, const CurvePoint& p, int precision) {
    return expand_framed(w.coeff, p, precision, 1);
}

LaurentSeries local_expand(const QuadDifferential& q, const CurvePoint& p, int precision) {
    return expand_framed(q.coeff, p, precision, 2);
}

std::map<int, Rat> c_coefficients(const QuadDifferential& q, const CurvePoint& p, int m_lo, int m_hi) {
    std::map<int, Rat> out;
    if (m_lo > m_hi) return out;
    const LaurentSeries s = local_expand(q, p, -m_lo - 1);
    for (int m = m_lo; m <= m_hi; ++m) out.emplace(m, s.coeff(-m - 2));
    return out;
}

Rat residue(const MeroDifferential& w, const CurvePoint& p) { return local_expand(w, p, 0).coeff(-1); }

}  // namespace parahiggs
