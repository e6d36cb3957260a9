#pragma once

#include <parahiggs/curve.hpp>
#include <parahiggs/hitchin.hpp>

namespace parahiggs::testing {

inline Poly xpow(int n) { return Poly::monomial(Rat(1), n); }

/// y^2 = x^3 - x + 1 (g = 1); rational points (0,+-1), (1,+-1), (-1,+-1).
inline HyperellipticCurve genus1() { return HyperellipticCurve(xpow(3) - xpow(1) + Poly(Rat(1))); }
/// y^2 = x^5 - x + 1 (g = 2); rational points (0,+-1), (1,+-1), (-1,+-1).
inline HyperellipticCurve genus2() { return HyperellipticCurve(xpow(5) - xpow(1) + Poly(Rat(1))); }
/// y^2 = x^7 - x + 1 (g = 3); rational points (0,+-1), (1,+-1), (-1,+-1).
inline HyperellipticCurve genus3() { return HyperellipticCurve(xpow(7) - xpow(1) + Poly(Rat(1))); }

/// y^2 = x (x + 3)(x + 4)(x^2 + 3x + 1) (g = 2): rational Weierstrass points
/// at 0, -3, -4 and rational points (-2, +-2), (1, +-10).
inline HyperellipticCurve genus2_weierstrass() {
    const Poly x = Poly::x();
    return HyperellipticCurve(x * (x + Poly(Rat(3))) * (x + Poly(Rat(4))) * (x * x + Rat(3) * x + Poly(Rat(1))));
}

inline CurvePoint pt(const HyperellipticCurve& c, long x, long y) { return CurvePoint::affine(c, Rat(x), Rat(y)); }

inline HyperellipticCurve curve_of_genus(int g) {
    return g == 1 ? genus1() : g == 2 ? genus2() : genus3();
}

/// The first N of (0,1), (1,1), (-1,1), (0,-1) on the genus-g test curve.
inline MarkedCurve marked(int g, int N) {
    const auto c = curve_of_genus(g);
    const std::vector<CurvePoint> all{pt(c, 0, 1), pt(c, 1, 1), pt(c, -1, 1), pt(c, 0, -1)};
    return MarkedCurve(c, std::vector<CurvePoint>(all.begin(), all.begin() + N));
}

}  // namespace parahiggs::testing
