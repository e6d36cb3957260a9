#pragma once

#include "parahiggs/hitchin.hpp"
#include "parahiggs/module.hpp"

#include <map>
#include <optional>
#include <vector>

namespace parahiggs {

/// Local data c_m^{(i)} at each marked point i (0-based), in the
/// t^{-m-2} (dt)^2 indexing, for m in [-order - 1, top].
struct LocalJetTuple {
    int order = 0;
    std::vector<std::map<int, Rat>> values;

    /// Throws DimensionMismatch when the entry is absent.
    const Rat& at(std::size_t point, int m) const;
    /// Keys (copy = point + 1, m) for the module side.
    JetValues to_jet_values() const;
};

/// q_0 with R_{-2}(q_0) = Delta(lambda), in the H^0(Omega^2(2D)) basis,
/// together with a basis of ker R_{-2}; the fibre is coords + span(kernel).
struct AdmissibleFiberPoint {
    std::vector<Rat> lambda;
    RatVector coords;
    std::vector<RatVector> kernel;
    QuadDifferential q;
};

struct ExactnessReport {
    std::size_t dim_d = 0;       // H^0(Omega^2(D))
    std::size_t dim_2d = 0;      // H^0(Omega^2(2D))
    std::size_t rank_r = 0;      // rank of R_{-2}
    std::size_t kernel_dim = 0;  // dim ker R_{-2}
    bool kernel_is_d = false;    // ker R_{-2} = H^0(Omega^2(D)) inside H^0(Omega^2(2D))
};

struct JetStabilization {
    int order = 0;
    std::size_t rank = 0;
};

struct GradedDims {
    long enumerated = 0;   // weight-d monomials counted by a coin-change recursion
    long closed_form = 0;  // 0 for odd d, C(d/2 + n - 1, n - 1) otherwise
};

/// Base-side linear algebra over a marked curve: the spaces
/// H^0(Omega^2(D)) inside H^0(Omega^2(2D)), jets at the marked points,
/// the map R_{-2} (c_0 at every point) and the fibres H_{Delta(lambda)}.
class HitchinBase {
public:
    explicit HitchinBase(MarkedCurve mc);

    const MarkedCurve& marked() const { return mc_; }
    const DifferentialSpace& space_d() const { return mc_.omega2(); }
    const DifferentialSpace& space_2d() const { return space_2d_; }

    /// Jets c_m, m in [-order - 1, top], of q at every marked point.
    LocalJetTuple jets(const QuadDifferential& q, int order, int top = 0) const;

    /// Rank of H^0(Omega^2(D)) -> jets of order M (c_m for m in [-M-1, -1]).
    std::size_t restriction_rank(int M) const;
    /// Smallest order at which the jet map on H^0(Omega^2(D)) is injective.
    JetStabilization restriction_stabilization() const;

    /// (c_0 at z_1, ..., c_0 at z_N). Throws MembershipFailure outside
    /// H^0(Omega^2(2D)).
    RatVector r_minus_2(const QuadDifferential& q) const;
    const RatMatrix& r_minus_2_matrix() const { return r_matrix_; }
    ExactnessReport exactness() const;

    AdmissibleFiberPoint fiber_point(const std::vector<Rat>& lambda) const;
    /// Affine solution set inside H^0(Omega^2(2D)) matching the jets through
    /// the given order; nullopt when the jets are not global.
    std::optional<AffineSolutionSet> is_global(const LocalJetTuple& jets, int order) const;
    /// Coordinates of q - q_0 in the H^0(Omega^2(D)) basis.
    RatVector f_q(const AdmissibleFiberPoint& base, const QuadDifferential& q) const;
    GradedDims graded_dims(int d) const;

private:
    RatMatrix jet_matrix(const DifferentialSpace& space, int order, int top) const;

    MarkedCurve mc_;
    DifferentialSpace space_2d_;
    RatMatrix r_matrix_;
};

Divisor doubled(const Divisor& D);

/// c_0^{(i)} = Delta(lambda_i) at every point.
bool is_admissible(const LocalJetTuple& jets, const std::vector<Rat>& lambda);

}  // namespace parahiggs
