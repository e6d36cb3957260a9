#include "parahiggs/hitchin.hpp"

#include "parahiggs/error.hpp"

#include <algorithm>
#include <set>

namespace parahiggs {

Line Line::through(const Rat& u, const Rat& v) {
    if (!u.is_zero()) return {Rat(1), v / u};
    if (!v.is_zero()) return {Rat(0), Rat(1)};
    throw MathError(Errc::ZeroElement, "a line needs a nonzero direction");
}

std::string Line::str() const { return "(" + u.str() + " : " + v.str() + ")"; }

namespace {

Divisor reduced_divisor(const std::vector<CurvePoint>& points) {
    Divisor D;
    for (const auto& p : points) {
        if (D.mult(p) != 0) throw MathError(Errc::InvalidPoint, "marked point " + p.str() + " repeated");
        D.add(p, 1);
    }
    return D;
}

// Image of a nonzero nilpotent residue: its first nonzero column.
Line image_line(const ResidueMatrix& R) {
    if (!R.a.is_zero() || !R.c.is_zero()) return Line::through(R.a, R.c);
    return Line::through(R.b, -R.a);
}

// Advances v through [-h, h]^n; returns false after the last vector.
bool next_in_box(RatVector& v, long h) {
    for (auto& x : v) {
        if (x < Rat(h)) {
            x += Rat(1);
            return true;
        }
        x = Rat(-h);
    }
    return false;
}

bool max_abs_is(const RatVector& v, long h) {
    return std::any_of(v.begin(), v.end(), [h](const Rat& x) { return x.abs() == Rat(h); });
}

}  // namespace

MarkedCurve::MarkedCurve(HyperellipticCurve curve, std::vector<CurvePoint> points)
    : curve_(std::move(curve)),
      points_(std::move(points)),
      D_(reduced_divisor(points_)),
      omega_(curve_, D_, 1),
      omega2_(curve_, D_, 2) {
    for (const auto& w : omega_.basis()) {
        RatVector res;
        for (const auto& p : points_) res.push_back(residue(MeroDifferential{w}, p));
        basis_residues_.push_back(std::move(res));
    }
}

ResidueMatrix MarkedCurve::residue_matrix(const ParabolicHiggsField& A, std::size_t i) const {
    if (i >= points_.size()) throw MathError(Errc::DimensionMismatch, "no marked point " + std::to_string(i));
    const CurvePoint& p = points_[i];
    return {residue(A.alpha, p), residue(A.beta, p), residue(A.gamma, p)};
}

bool MarkedCurve::check_parabolic(const ParabolicHiggsField& A, const FlagData& flags) const {
    if (flags.size() != points_.size()) return false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const ResidueMatrix R = residue_matrix(A, i);
        const auto [x, y] = R.apply(flags[i].u, flags[i].v);
        // R kills the line; for trace-free R this forces image(R) inside the line as well
        if (!x.is_zero() || !y.is_zero()) return false;
    }
    return true;
}

QuadDifferential MarkedCurve::hitchin_map(const ParabolicHiggsField& A) const {
    QuadDifferential q{-(A.alpha.coeff * A.alpha.coeff) - A.beta.coeff * A.gamma.coeff};
    if (!omega2_.contains(q.coeff)) {
        throw MathError(Errc::MembershipFailure, "det A = " + q.coeff.str() + " is not in H^0(Omega^2(D))");
    }
    return q;
}

bool MarkedCurve::nilp_member(const ParabolicHiggsField& A) const { return hitchin_map(A).coeff.is_zero(); }

FlagData MarkedCurve::borel_from_residue(const ParabolicHiggsField& A) const {
    FlagData flags;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const ResidueMatrix R = residue_matrix(A, i);
        if (R.is_zero()) throw MathError(Errc::ZeroResidue, "residue vanishes at " + points_[i].str());
        if (!R.det().is_zero()) {
            throw MathError(Errc::NonNilpotentResidue, "det Res = " + R.det().str() + " at " + points_[i].str());
        }
        flags.push_back(image_line(R));
    }
    return flags;
}

SpectralData MarkedCurve::spectral_check(const QuadDifferential& q) const {
    if (q.coeff.is_zero()) throw MathError(Errc::ZeroElement, "spectral curve of q = 0");
    if (!omega2_.contains(q.coeff)) throw MathError(Errc::MembershipFailure, "q is not in H^0(Omega^2(D))");

    const int g = genus();
    const int N = static_cast<int>(points_.size());
    SpectralData out{.q = q};
    out.genus_formula = 4 * g - 3 + N;
    out.prym_dim = out.genus_formula - g;

    bool simple = true;
    int count = 0;
    // order of q as a section of Omega(D)^2 = Omega^2(2D)
    auto tally = [&](const CurvePoint& P, int order) {
        if (order < 0) throw MathError(Errc::MembershipFailure, "q has a pole at " + P.str());
        if (order > 1) simple = false;
        count += order;
    };

    std::set<Rat> fibres;
    std::set<CurvePoint> fibre_points;
    for (const auto& p : points_) {
        fibres.insert(p.x);
        fibre_points.insert(p);
        fibre_points.insert(p.conjugate());
    }
    for (const auto& P : fibre_points) tally(P, ord_at(q, P) + 2 * D_.mult(P));
    tally(CurvePoint::infinity(), ord_at(q, CurvePoint::infinity()));

    // Remaining zeros: the frame (dx/y)^2 is a unit at affine points, so
    // they are the zeros of a + b y, read off its norm a^2 - b^2 f.
    const std::vector<Rat> xs(fibres.begin(), fibres.end());
    const RatFunc nm = q.coeff.norm();
    if (strip_roots(nm.den(), xs).degree() != 0) {
        throw MathError(Errc::MembershipFailure, "q has a pole outside the marked fibres");
    }
    const Poly rest = strip_roots(nm.num(), xs);
    if (!is_squarefree(rest)) simple = false;
    count += rest.degree();

    out.zero_count = count;
    if (count != 2 * (2 * g - 2 + N)) {
        throw MathError(Errc::DimensionMismatch, "zero count " + std::to_string(count) + " differs from deg Omega(D)^2");
    }
    if (simple) {
        // 2 g' - 2 = 2 (2g - 2) + #branch points
        out.genus_rh = (2 * (2 * g - 2) + count + 2) / 2;
    } else {
        out.status = SpectralStatus::NotSimpleZeros;
    }
    return out;
}

std::vector<RatVector> MarkedCurve::parabolic_basis(const FlagData& flags) const {
    if (flags.size() != points_.size()) throw MathError(Errc::DimensionMismatch, "one flag per marked point");
    const std::size_t d = omega_.dim();
    RatMatrix cond(0, 3 * d);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Rat& u = flags[i].u;
        const Rat& v = flags[i].v;
        RatVector first(3 * d);
        RatVector second(3 * d);
        for (std::size_t j = 0; j < d; ++j) {
            const Rat& r = basis_residues_[j][i];
            // a u + b v = 0 and c u - a v = 0
            first[j] = r * u;
            first[d + j] = r * v;
            second[j] = -(r * v);
            second[2 * d + j] = r * u;
        }
        cond.append_row(first);
        cond.append_row(second);
    }
    return kernel_basis(cond);
}

ParabolicHiggsField MarkedCurve::field_from_coordinates(const RatVector& coords, const FlagData& flags) const {
    const std::size_t d = omega_.dim();
    if (coords.size() != 3 * d) throw MathError(Errc::DimensionMismatch, "expected 3 dim H^0(Omega(D)) coordinates");
    const std::span<const Rat> all(coords);
    return {MeroDifferential{omega_.combination(all.subspan(0, d))},
            MeroDifferential{omega_.combination(all.subspan(d, d))},
            MeroDifferential{omega_.combination(all.subspan(2 * d, d))}, flags};
}

std::optional<ParabolicHiggsField> MarkedCurve::lift_to_higgs(const QuadDifferential& q, std::size_t budget) const {
    if (!omega2_.contains(q.coeff)) throw MathError(Errc::MembershipFailure, "q is not in H^0(Omega^2(D))");
    const std::size_t d = omega_.dim();
    const FieldElement zero(curve_, RatFunc());
    std::size_t tried = 0;

    for (long h = 0; tried < budget; ++h) {
        RatVector v(2 * d, Rat(-h));  // beta coordinates, then alpha coordinates
        do {
            if (!max_abs_is(v, h)) continue;
            if (tried++ >= budget) return std::nullopt;
            const std::span<const Rat> all(v);
            const FieldElement beta = omega_.combination(all.subspan(0, d));
            const FieldElement alpha = omega_.combination(all.subspan(d, d));
            const FieldElement rest = -q.coeff - alpha * alpha;  // = beta gamma
            FieldElement gamma = zero;
            if (beta.is_zero()) {
                if (!rest.is_zero()) continue;
            } else {
                gamma = rest / beta;
                if (!omega_.contains(gamma)) continue;
            }
            ParabolicHiggsField A{MeroDifferential{alpha}, MeroDifferential{beta}, MeroDifferential{gamma}, {}};
            bool ok = true;
            for (std::size_t i = 0; i < points_.size() && ok; ++i) {
                const ResidueMatrix R = residue_matrix(A, i);
                if (R.is_zero()) {
                    A.flags.push_back(Line::through(Rat(1), Rat(0)));
                } else if (!R.det().is_zero()) {
                    ok = false;
                } else {
                    A.flags.push_back(image_line(R));
                }
            }
            if (ok && check_parabolic(A)) return A;
        } while (next_in_box(v, h));
    }
    return std::nullopt;
}

}  // namespace parahiggs
