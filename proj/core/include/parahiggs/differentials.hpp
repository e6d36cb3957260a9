#pragma once

#include "parahiggs/curve.hpp"
#include "parahiggs/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace parahiggs {

/// The space H^0(X, Omega^{k}(E)) for k = 1 or 2 and E effective, supported
/// on affine non-Weierstrass points.
///
/// Elements are written (a(x) + b(x) y) / m(x) * (dx/y)^k, where m is the
/// product over the x-fibres of E of (x - x_j)^{e_j}, e_j being the largest
/// multiplicity of E on that fibre. The bound at infinity fixes deg a and
/// deg b; vanishing conditions on the two points of every marked fibre cut
/// the ansatz down to the space itself.
class DifferentialSpace {
public:
    DifferentialSpace(HyperellipticCurve curve, Divisor E, int frame_power);

    const HyperellipticCurve& curve() const { return curve_; }
    const Divisor& divisor() const { return E_; }
    int frame_power() const { return k_; }
    const Poly& denominator() const { return m_; }
    int a_degree_bound() const { return da_; }
    int b_degree_bound() const { return db_; }
    /// Number of unknowns in the ansatz.
    std::size_t ansatz_size() const;

    std::size_t dim() const { return basis_.size(); }
    /// Basis coefficients (of the frame (dx/y)^k).
    const std::vector<FieldElement>& basis() const { return basis_; }

    /// Coordinates of coeff * (dx/y)^k in the basis, or nullopt if it is not
    /// in the space.
    std::optional<RatVector> coordinates(const FieldElement& coeff) const;
    bool contains(const FieldElement& coeff) const { return coordinates(coeff).has_value(); }
    FieldElement combination(std::span<const Rat> coords) const;

private:
    std::optional<RatVector> ansatz_vector(const FieldElement& coeff) const;
    FieldElement from_ansatz(std::span<const Rat> v) const;

    HyperellipticCurve curve_;
    Divisor E_;
    int k_;
    Poly m_;
    int da_;
    int db_;
    std::vector<FieldElement> basis_;
    RatMatrix basis_matrix_;  // columns = ansatz vectors of the basis
};

/// Basis of H^0(X, Omega(E)).
std::vector<MeroDifferential> diff_basis(const HyperellipticCurve& c, const Divisor& E);
/// Basis of H^0(X, Omega^{2}(E)); size 3(g-1) + deg E.
std::vector<QuadDifferential> quad_basis(const HyperellipticCurve& c, const Divisor& E);

}  // namespace parahiggs
