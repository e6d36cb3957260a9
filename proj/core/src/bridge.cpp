#include "parahiggs/bridge.hpp"

#include "parahiggs/error.hpp"

namespace parahiggs {

const Rat& LocalJetTuple::at(std::size_t point, int m) const {
    if (point >= values.size()) throw MathError(Errc::DimensionMismatch, "no jets at point " + std::to_string(point));
    auto it = values[point].find(m);
    if (it == values[point].end()) {
        throw MathError(Errc::DimensionMismatch,
                        "jet c_" + std::to_string(m) + " missing at point " + std::to_string(point));
    }
    return it->second;
}

JetValues LocalJetTuple::to_jet_values() const {
    JetValues out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (const auto& [m, c] : values[i]) out[{static_cast<int>(i) + 1, m}] = c;
    }
    return out;
}

Divisor doubled(const Divisor& D) { return D.scaled(2); }

bool is_admissible(const LocalJetTuple& jets, const std::vector<Rat>& lambda) {
    if (jets.values.size() != lambda.size()) {
        throw MathError(Errc::DimensionMismatch, "one weight per marked point expected");
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (jets.at(i, 0) != sugawara_eigenvalue(lambda[i])) return false;
    }
    return true;
}

HitchinBase::HitchinBase(MarkedCurve mc)
    : mc_(std::move(mc)), space_2d_(mc_.curve(), doubled(mc_.divisor()), 2), r_matrix_(jet_matrix(space_2d_, -1, 0)) {}

RatMatrix HitchinBase::jet_matrix(const DifferentialSpace& space, int order, int top) const {
    const auto& pts = mc_.points();
    const int lo = -order - 1;
    const std::size_t per_point = static_cast<std::size_t>(std::max(top - lo + 1, 0));
    RatMatrix J(pts.size() * per_point, space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        const QuadDifferential q{space.basis()[j]};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (per_point == 0) continue;
            const auto c = c_coefficients(q, pts[i], lo, top);
            for (int m = lo; m <= top; ++m) J(i * per_point + static_cast<std::size_t>(m - lo), j) = c.at(m);
        }
    }
    return J;
}

LocalJetTuple HitchinBase::jets(const QuadDifferential& q, int order, int top) const {
    LocalJetTuple out{order, {}};
    for (const auto& p : mc_.points()) out.values.push_back(c_coefficients(q, p, -order - 1, top));
    return out;
}

std::size_t HitchinBase::restriction_rank(int M) const { return rank(jet_matrix(space_d(), M, -1)); }

JetStabilization HitchinBase::restriction_stabilization() const {
    // a nonzero section of Omega^2(D) has 4g - 4 + N zeros, so order 4g - 4 + N is always enough
    const int limit = 4 * mc_.genus() - 4 + static_cast<int>(mc_.n_points());
    for (int M = 0; M <= limit; ++M) {
        const std::size_t r = restriction_rank(M);
        if (r == space_d().dim()) return {M, r};
    }
    throw MathError(Errc::DimensionMismatch, "jet map never became injective");
}

RatVector HitchinBase::r_minus_2(const QuadDifferential& q) const {
    if (!space_2d_.contains(q.coeff)) {
        throw MathError(Errc::MembershipFailure, "R_{-2} needs an element of H^0(Omega^2(2D))");
    }
    RatVector out;
    for (const auto& p : mc_.points()) out.push_back(c_coefficients(q, p, 0, 0).at(0));
    return out;
}

ExactnessReport HitchinBase::exactness() const {
    ExactnessReport rep;
    rep.dim_d = space_d().dim();
    rep.dim_2d = space_2d_.dim();
    rep.rank_r = rank(r_matrix_);
    const auto ker = kernel_basis(r_matrix_);
    rep.kernel_dim = ker.size();

    std::vector<RatVector> embedded;
    bool inside = true;
    for (const auto& b : space_d().basis()) {
        auto c = space_2d_.coordinates(b);
        if (!c || !is_zero_vector(r_matrix_ * *c)) {
            inside = false;
            break;
        }
        embedded.push_back(std::move(*c));
    }
    rep.kernel_is_d = inside && rep.kernel_dim == rep.dim_d &&
                      (embedded.empty() || rank(RatMatrix::from_columns(embedded, rep.dim_2d)) == rep.dim_d);
    return rep;
}

AdmissibleFiberPoint HitchinBase::fiber_point(const std::vector<Rat>& lambda) const {
    if (lambda.size() != mc_.n_points()) throw MathError(Errc::DimensionMismatch, "one weight per marked point expected");
    RatVector target;
    for (const auto& l : lambda) target.push_back(sugawara_eigenvalue(l));
    const auto sol = solve_affine(r_matrix_, target);
    if (!sol) throw MathError(Errc::DimensionMismatch, "R_{-2} is not surjective on this configuration");
    return {lambda, sol->particular, sol->kernel, QuadDifferential{space_2d_.combination(sol->particular)}};
}

std::optional<AffineSolutionSet> HitchinBase::is_global(const LocalJetTuple& jets, int order) const {
    const RatMatrix J = jet_matrix(space_2d_, order, 0);
    RatVector rhs;
    for (std::size_t i = 0; i < mc_.n_points(); ++i) {
        for (int m = -order - 1; m <= 0; ++m) rhs.push_back(jets.at(i, m));
    }
    return solve_affine(J, rhs);
}

RatVector HitchinBase::f_q(const AdmissibleFiberPoint& base, const QuadDifferential& q) const {
    auto c = space_d().coordinates(q.coeff - base.q.coeff);
    if (!c) throw MathError(Errc::MembershipFailure, "q is not in the fibre of the base point");
    return *c;
}

GradedDims HitchinBase::graded_dims(int d) const {
    GradedDims out;
    if (d < 0) return out;
    const long n = static_cast<long>(space_d().dim());
    std::vector<long> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (long gen = 0; gen < n; ++gen) {
        for (int s = 2; s <= d; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - 2)];
    }
    out.enumerated = ways[static_cast<std::size_t>(d)];
    if (d % 2 == 0 && n > 0) {
        const long top = d / 2 + n - 1;
        long c = 1;
        for (long k = 1; k <= n - 1; ++k) c = c * (top - k + 1) / k;
        out.closed_form = c;
    }
    return out;
}

}  // namespace parahiggs
