#include "parahiggs/differentials.hpp"

#include "parahiggs/error.hpp"

#include <algorithm>
#include <map>

namespace parahiggs {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void validate(const HyperellipticCurve& c, const Divisor& E) {
    if (!E.is_effective()) throw MathError(Errc::UnsupportedSupport, "divisor must be effective");
    for (const auto& [p, n] : E.entries()) {
        if (p.kind != CurvePoint::Kind::AffineNonWeierstrass) {
            throw MathError(Errc::UnsupportedSupport, "support must be affine non-Weierstrass, got " + p.str());
        }
        if (!c.contains(p.x, p.y)) throw MathError(Errc::InvalidPoint, p.str() + " is not on the curve");
    }
    if (2 * c.genus() - 2 + E.degree() <= 0) {
        throw MathError(Errc::DegreeHypothesisViolated, "deg Omega(E) = " + std::to_string(2 * c.genus() - 2 + E.degree()));
    }
}

}  // namespace

DifferentialSpace::DifferentialSpace(HyperellipticCurve curve, Divisor E, int frame_power)
    : curve_(std::move(curve)), E_(std::move(E)), k_(frame_power), m_(Rat(1)) {
    if (k_ != 1 && k_ != 2) throw MathError(Errc::DimensionMismatch, "frame power must be 1 or 2");
    validate(curve_, E_);
    const int g = curve_.genus();

    // Largest multiplicity on every x-fibre.
    std::map<Rat, int> fibre;
    for (const auto& [p, n] : E_.entries()) {
        int& e = fibre[p.x];
        e = std::max(e, n);
    }
    for (const auto& [x0, e] : fibre) m_ *= Poly::linear_power(x0, e);
    const int M = m_.degree();

    // v_inf(coefficient) >= -k(2g - 2), with v(x) = -2 and v(y) = -(2g + 1).
    da_ = M + k_ * (g - 1);
    db_ = M + floor_div(k_ * (2 * g - 2) - (2 * g + 1), 2);

    const std::size_t na = static_cast<std::size_t>(std::max(da_ + 1, 0));
    const std::size_t n = ansatz_size();

    // Each point P of a marked fibre needs ord_P(a + b y) >= e_j - mult_E(P).
    RatMatrix conditions(0, n);
    for (const auto& [x0, e] : fibre) {
        const Rat y0 = [&] {
            for (const auto& [p, mult] : E_.entries()) {
                if (p.x == x0) return p.y;
            }
            return Rat(0);
        }();
        for (const Rat& yp : {y0, -y0}) {
            const CurvePoint P{CurvePoint::Kind::AffineNonWeierstrass, x0, yp};
            const int need = e - E_.mult(P);
            if (need <= 0) continue;
            const LaurentSeries y = series_sqrt(LaurentSeries::from_poly(curve_.f().shifted(x0), need), yp);
            std::vector<RatVector> rows(static_cast<std::size_t>(need), RatVector(n));
            Poly xpow(Rat(1));
            const Poly shift({x0, Rat(1)});
            const int top = std::max(da_, db_);
            for (int i = 0; i <= top; ++i) {
                // (x0 + t)^i and (x0 + t)^i y(t)
                const LaurentSeries s = LaurentSeries::from_poly(xpow, need);
                const LaurentSeries sy = s * y;
                for (int j = 0; j < need; ++j) {
                    if (i <= da_) rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s.coeff(j);
                    if (i <= db_) rows[static_cast<std::size_t>(j)][na + static_cast<std::size_t>(i)] = sy.coeff(j);
                }
                xpow *= shift;
            }
            for (const auto& r : rows) conditions.append_row(r);
        }
    }

    const auto kernel = kernel_basis(conditions);
    basis_matrix_ = RatMatrix::from_columns(kernel, n);
    basis_.reserve(kernel.size());
    for (const auto& v : kernel) basis_.push_back(from_ansatz(v));
}

std::size_t DifferentialSpace::ansatz_size() const {
    return static_cast<std::size_t>(std::max(da_ + 1, 0) + std::max(db_ + 1, 0));
}

FieldElement DifferentialSpace::from_ansatz(std::span<const Rat> v) const {
    const std::size_t na = static_cast<std::size_t>(std::max(da_ + 1, 0));
    std::vector<Rat> a(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<Rat> b(v.begin() + static_cast<std::ptrdiff_t>(na), v.end());
    return FieldElement(curve_, RatFunc(Poly(std::move(a)), m_), RatFunc(Poly(std::move(b)), m_));
}

std::optional<RatVector> DifferentialSpace::ansatz_vector(const FieldElement& coeff) const {
    if (!(coeff.curve() == curve_)) return std::nullopt;
    const RatFunc a = coeff.a() * RatFunc(m_);
    const RatFunc b = coeff.b() * RatFunc(m_);
    if (!a.is_polynomial() || !b.is_polynomial()) return std::nullopt;
    if (a.num().degree() > da_ || b.num().degree() > db_) return std::nullopt;
    const std::size_t na = static_cast<std::size_t>(std::max(da_ + 1, 0));
    RatVector v(ansatz_size());
    for (int i = 0; i <= a.num().degree(); ++i) v[static_cast<std::size_t>(i)] = a.num().coeff(i);
    for (int i = 0; i <= b.num().degree(); ++i) v[na + static_cast<std::size_t>(i)] = b.num().coeff(i);
    return v;
}

std::optional<RatVector> DifferentialSpace::coordinates(const FieldElement& coeff) const {
    auto v = ansatz_vector(coeff);
    if (!v) return std::nullopt;
    if (basis_.empty()) {
        if (is_zero_vector(*v)) return RatVector{};
        return std::nullopt;
    }
    return solve(basis_matrix_, *v);
}

FieldElement DifferentialSpace::combination(std::span<const Rat> coords) const {
    if (coords.size() != basis_.size()) throw MathError(Errc::DimensionMismatch, "coordinate vector length");
    FieldElement out(curve_, RatFunc());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_zero()) out += coords[i] * basis_[i];
    }
    return out;
}

std::vector<MeroDifferential> diff_basis(const HyperellipticCurve& c, const Divisor& E) {
    const DifferentialSpace space(c, E, 1);
    std::vector<MeroDifferential> out;
    for (const auto& b : space.basis()) out.push_back({b});
    return out;
}

std::vector<QuadDifferential> quad_basis(const HyperellipticCurve& c, const Divisor& E) {
    const DifferentialSpace space(c, E, 2);
    std::vector<QuadDifferential> out;
    for (const auto& b : space.basis()) out.push_back({b});
    return out;
}

}  // namespace parahiggs
