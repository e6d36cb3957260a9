#pragma once

#include "parahiggs/differentials.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace parahiggs {

/// A line in Q^2, normalised so the first nonzero coordinate is 1.
struct Line {
    Rat u;
    Rat v;

    static Line through(const Rat& u, const Rat& v);
    friend bool operator==(const Line&, const Line&) = default;
    std::string str() const;
};

/// One line per marked point, in the order of MarkedCurve::points().
using FlagData = std::vector<Line>;

/// [[a, b], [c, -a]] over Q.
struct ResidueMatrix {
    Rat a;
    Rat b;
    Rat c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    Rat det() const { return -(a * a) - b * c; }
    /// M * (u, v)
    std::pair<Rat, Rat> apply(const Rat& u, const Rat& v) const { return {a * u + b * v, c * u - a * v}; }
    friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;
};

/// A = [[alpha, beta], [gamma, -alpha]] with entries in H^0(Omega(D)).
struct ParabolicHiggsField {
    MeroDifferential alpha;
    MeroDifferential beta;
    MeroDifferential gamma;
    FlagData flags;

    ParabolicHiggsField scaled(const Rat& s) const { return {s * alpha, s * beta, s * gamma, flags}; }
};

enum class SpectralStatus { Smooth, NotSimpleZeros };

struct SpectralData {
    QuadDifferential q;
    SpectralStatus status = SpectralStatus::Smooth;
    /// Number of zeros of q as a section of Omega(D)^2, with multiplicity.
    int zero_count = 0;
    int genus_formula = 0;
    /// Riemann-Hurwitz genus; absent when some zero is not simple.
    std::optional<int> genus_rh = std::nullopt;
    int prym_dim = 0;
};

/// A hyperelliptic curve with a reduced divisor D = z_1 + ... + z_N of
/// affine non-Weierstrass points. Precomputes H^0(Omega(D)) and
/// H^0(Omega^2(D)).
class MarkedCurve {
public:
    MarkedCurve(HyperellipticCurve curve, std::vector<CurvePoint> points);

    const HyperellipticCurve& curve() const { return curve_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    std::size_t n_points() const { return points_.size(); }
    int genus() const { return curve_.genus(); }
    const Divisor& divisor() const { return D_; }
    const DifferentialSpace& omega() const { return omega_; }
    const DifferentialSpace& omega2() const { return omega2_; }

    ResidueMatrix residue_matrix(const ParabolicHiggsField& A, std::size_t i) const;
    bool check_parabolic(const ParabolicHiggsField& A, const FlagData& flags) const;
    bool check_parabolic(const ParabolicHiggsField& A) const { return check_parabolic(A, A.flags); }

    /// det A = -alpha^2 - beta gamma. Throws MembershipFailure if the result
    /// is not in H^0(Omega^2(D)).
    QuadDifferential hitchin_map(const ParabolicHiggsField& A) const;
    bool nilp_member(const ParabolicHiggsField& A) const;
    FlagData borel_from_residue(const ParabolicHiggsField& A) const;
    SpectralData spectral_check(const QuadDifferential& q) const;

    /// Basis of the parabolic fields with the given flags; each field is
    /// described by its coordinates (alpha, beta, gamma) in omega().
    std::vector<RatVector> parabolic_basis(const FlagData& flags) const;
    ParabolicHiggsField field_from_coordinates(const RatVector& coords, const FlagData& flags) const;

    /// Searches alpha, beta on coordinate lattices of growing height with
    /// gamma = (-q - alpha^2) / beta. At most `budget` candidates are tried.
    std::optional<ParabolicHiggsField> lift_to_higgs(const QuadDifferential& q, std::size_t budget) const;

private:
    HyperellipticCurve curve_;
    std::vector<CurvePoint> points_;
    Divisor D_;
    DifferentialSpace omega_;
    DifferentialSpace omega2_;
    std::vector<RatVector> basis_residues_;  // [basis index][point index]
};

}  // namespace parahiggs
