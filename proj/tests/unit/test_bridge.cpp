#include <doctest.h>

#include <parahiggs/bridge.hpp>
#include <parahiggs/error.hpp>

#include "support/curves.hpp"
#include "support/fields.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace parahiggs;
using namespace parahiggs::testing;

namespace {

const std::pair<int, int> kGrid[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {2, 3}};

/// Jet matrix built column by column from the public jets() expansion:
/// rows (point, m) with m in [-order - 1, top].
RatMatrix jets_matrix(const HitchinBase& hb, const DifferentialSpace& space, int order, int top) {
    std::vector<RatVector> cols;
    for (const auto& b : space.basis()) {
        const auto j = hb.jets(QuadDifferential{b}, order, top);
        RatVector col;
        for (const auto& per_point : j.values)
            for (int m = -order - 1; m <= top; ++m) col.push_back(per_point.at(m));
        cols.push_back(std::move(col));
    }
    return RatMatrix::from_columns(cols, static_cast<std::size_t>(hb.marked().n_points()) *
                                             static_cast<std::size_t>(top + order + 2));
}

std::vector<Rat> deltas(const std::vector<Rat>& lambda) {
    std::vector<Rat> out;
    for (const auto& l : lambda) out.push_back(l * (l + Rat(2)) / Rat(4));
    return out;
}

}  // namespace

TEST_CASE("restriction rank examples") {
    CHECK(HitchinBase(marked(2, 1)).restriction_stabilization().rank == 4);
    CHECK(HitchinBase(marked(2, 2)).restriction_stabilization().rank == 5);
    for (const auto& [g, N] : kGrid) {
        const HitchinBase hb(marked(g, N));
        CHECK(hb.restriction_rank(0) <= static_cast<std::size_t>(N));
        if (g > 1) CHECK(hb.restriction_rank(0) < hb.space_d().dim());
    }
}

TEST_CASE("restriction rank is monotone, stabilizes at 3(g-1)+N and matches the oracle rank") {
    for (const auto& [g, N] : kGrid) {
        const HitchinBase hb(marked(g, N));
        const auto st = hb.restriction_stabilization();
        CHECK(st.rank == static_cast<std::size_t>(3 * (g - 1) + N));
        std::size_t prev = 0;
        for (int M = 0; M <= st.order + 2; ++M) {
            const std::size_t r = hb.restriction_rank(M);
            CHECK(r >= prev);
            CHECK(r == gauss_jordan_rank(jets_matrix(hb, hb.space_d(), M, -1)));
            if (M >= st.order) CHECK(r == st.rank);
            prev = r;
        }
    }
}

TEST_CASE("exact sequence for R_{-2}") {
    for (const auto& [g, N] : kGrid) {
        CAPTURE(g);
        CAPTURE(N);
        const HitchinBase hb(marked(g, N));
        const auto rep = hb.exactness();
        CHECK(rep.dim_2d == static_cast<std::size_t>(3 * (g - 1) + 2 * N));
        CHECK(rep.dim_d == static_cast<std::size_t>(3 * (g - 1) + N));
        CHECK(rep.rank_r == static_cast<std::size_t>(N));
        CHECK(rep.kernel_dim == rep.dim_d);
        CHECK(rep.kernel_is_d);
        CHECK(gauss_jordan_rank(hb.r_minus_2_matrix()) == rep.rank_r);
        CHECK(rep.dim_2d == rep.dim_d + rep.rank_r);
    }
}

TEST_CASE("r_minus_2 examples") {
    const HitchinBase hb(marked(2, 2));
    for (const auto& b : hb.space_d().basis()) {
        const auto r = hb.r_minus_2(QuadDifferential{b});
        CHECK(is_zero_vector(r));
    }
    // an element with c_0 = (1, 0): double pole at z_1 only
    const auto sol = solve_affine(hb.r_minus_2_matrix(), RatVector{Rat(1), Rat(0)});
    REQUIRE(sol);
    const QuadDifferential q{hb.space_2d().combination(sol->particular)};
    CHECK(hb.r_minus_2(q) == RatVector{Rat(1), Rat(0)});
    // a fifth-order pole at z_1 is outside Omega^2(2D)
    const auto& c = hb.marked().curve();
    const QuadDifferential far{FieldElement(c, RatFunc(Poly(Rat(1)), xpow(5)))};
    CHECK_THROWS_WITH_AS(hb.r_minus_2(far), doctest::Contains("MembershipFailure"), MathError);
}

TEST_CASE("fiber points") {
    SUBCASE("lambda = 0 gives c_0 = 0") {
        const HitchinBase hb(marked(2, 2));
        const auto fp = hb.fiber_point({Rat(0), Rat(0)});
        CHECK(is_zero_vector(hb.r_minus_2(fp.q)));
        CHECK(fp.kernel.size() == hb.space_d().dim());
    }
    SUBCASE("lambda = (2)") {
        const HitchinBase hb(marked(2, 1));
        const auto fp = hb.fiber_point({Rat(2)});
        CHECK(hb.r_minus_2(fp.q) == RatVector{Rat(2)});
    }
    SUBCASE("lambda = (1, 3)") {
        const HitchinBase hb(marked(2, 2));
        const auto fp = hb.fiber_point({Rat(1), Rat(3)});
        CHECK(hb.r_minus_2(fp.q) == RatVector{Rat(3, 4), Rat(15, 4)});
    }
    SUBCASE("the whole affine fibre satisfies the constraint") {
        Rng rng(5);
        for (const auto& [g, N] : kGrid) {
            const HitchinBase hb(marked(g, N));
            std::vector<Rat> lambda;
            for (int i = 0; i < N; ++i) lambda.push_back(Rat(rng.between(-3, 6)));
            const auto fp = hb.fiber_point(lambda);
            RatVector coords = fp.coords;
            for (const auto& k : fp.kernel) {
                const Rat s = rng.small_rat(3);
                for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += s * k[j];
            }
            const QuadDifferential q{hb.space_2d().combination(coords)};
            CHECK(hb.r_minus_2(q) == RatVector(deltas(lambda)));
            CHECK(is_admissible(hb.jets(q, 0), lambda));
        }
    }
    CHECK_THROWS_AS(HitchinBase(marked(2, 2)).fiber_point({Rat(1)}), MathError);
}

TEST_CASE("is_global") {
    const HitchinBase hb(marked(2, 2));
    const int M = hb.restriction_stabilization().order + 1;
    Rng rng(9);
    RatVector coords(hb.space_2d().dim());
    for (auto& c : coords) c = rng.small_rat(4);
    const QuadDifferential q{hb.space_2d().combination(coords)};

    SUBCASE("roundtrip contains the section") {
        const auto sol = hb.is_global(hb.jets(q, M), M);
        REQUIRE(sol);
        CHECK(sol->kernel.empty());
        CHECK(sol->particular == coords);
    }
    SUBCASE("zero jets") {
        const auto zero = hb.jets(QuadDifferential{FieldElement(hb.marked().curve(), RatFunc())}, M);
        const auto sol = hb.is_global(zero, M);
        REQUIRE(sol);
        CHECK(is_zero_vector(sol->particular));
    }
    SUBCASE("a perturbation outside the image is not global") {
        const RatMatrix J = jets_matrix(hb, hb.space_2d(), M, 0);
        const std::size_t base_rank = gauss_jordan_rank(J);
        // first jet coordinate whose unit vector leaves the image, c_{-1} rows first
        auto jets = hb.jets(q, M);
        bool perturbed = false;
        for (std::size_t i = 0; i < jets.values.size() && !perturbed; ++i) {
            for (int m = -1; m >= -M - 1 && !perturbed; --m) {
                std::vector<RatVector> cols;
                for (std::size_t c = 0; c < J.cols(); ++c) {
                    RatVector col;
                    for (std::size_t r = 0; r < J.rows(); ++r) col.push_back(J(r, c));
                    cols.push_back(col);
                }
                RatVector unit(J.rows());
                unit[i * static_cast<std::size_t>(M + 2) + static_cast<std::size_t>(m + M + 1)] = Rat(1);
                cols.push_back(unit);
                if (gauss_jordan_rank(RatMatrix::from_columns(cols, J.rows())) > base_rank) {
                    jets.values[i][m] += Rat(1);
                    perturbed = true;
                }
            }
        }
        REQUIRE(perturbed);
        CHECK_FALSE(hb.is_global(jets, M));
    }
    SUBCASE("missing jets") {
        auto jets = hb.jets(q, 0);
        CHECK_THROWS_WITH_AS(hb.is_global(jets, 2), doctest::Contains("missing"), MathError);
    }
}

TEST_CASE("is_admissible examples") {
    const auto one_point = [](const Rat& c0) { return LocalJetTuple{0, {{{-1, Rat(0)}, {0, c0}}}}; };
    CHECK(is_admissible(one_point(Rat(0)), {Rat(0)}));
    CHECK(is_admissible(one_point(Rat(2)), {Rat(2)}));
    CHECK_FALSE(is_admissible(one_point(Rat(1)), {Rat(1)}));
    CHECK(is_admissible(one_point(Rat(3, 4)), {Rat(1)}));
    CHECK_THROWS_AS(is_admissible(one_point(Rat(0)), {Rat(0), Rat(0)}), MathError);
}

TEST_CASE("f_q") {
    const HitchinBase hb(marked(2, 2));
    const auto fp = hb.fiber_point({Rat(1), Rat(2)});
    CHECK(is_zero_vector(hb.f_q(fp, fp.q)));
    const QuadDifferential f1{hb.space_d().basis()[0]};
    const auto e1 = hb.f_q(fp, fp.q + f1);
    RatVector expected(hb.space_d().dim());
    expected[0] = Rat(1);
    CHECK(e1 == expected);

    SUBCASE("pairing with the restriction matrix reproduces the jets") {
        Rng rng(13);
        const int M = 3;
        const RatMatrix R = jets_matrix(hb, hb.space_d(), M, -1);
        const auto base = hb.jets(fp.q, M, -1);
        for (int trial = 0; trial < 10; ++trial) {
            RatVector c(hb.space_d().dim());
            for (auto& x : c) x = rng.small_rat(4);
            const QuadDifferential q = fp.q + QuadDifferential{hb.space_d().combination(c)};
            const auto f = hb.f_q(fp, q);
            CHECK(f == c);
            const RatVector shifted = R * f;
            const auto j = hb.jets(q, M, -1);
            std::size_t row = 0;
            for (std::size_t i = 0; i < j.values.size(); ++i) {
                for (int m = -M - 1; m <= -1; ++m, ++row) CHECK(j.at(i, m) - base.at(i, m) == shifted[row]);
            }
            CHECK(hb.r_minus_2(q) == hb.r_minus_2(fp.q));
        }
    }
    SUBCASE("outside the fibre") {
        const auto other = hb.fiber_point({Rat(0), Rat(0)});
        CHECK_THROWS_WITH_AS(hb.f_q(fp, other.q), doctest::Contains("MembershipFailure"), MathError);
    }
}

TEST_CASE("graded dimensions") {
    const HitchinBase hb(marked(2, 1));
    CHECK(hb.graded_dims(2).enumerated == 4);
    CHECK(hb.graded_dims(1).enumerated == 0);
    CHECK(hb.graded_dims(1).closed_form == 0);
    CHECK(hb.graded_dims(4).enumerated == 10);
    for (const auto& [g, N] : kGrid) {
        const HitchinBase b(marked(g, N));
        const int n = 3 * (g - 1) + N;
        for (int d = 0; d <= 12; ++d) {
            const auto gd = b.graded_dims(d);
            CHECK(gd.enumerated == gd.closed_form);
            CHECK(gd.closed_form == (d % 2 ? 0 : binomial(d / 2 + n - 1, n - 1)));
        }
    }
}

TEST_CASE("cross law: Hitchin images are 0-admissible") {
    Rng rng(17);
    const MarkedCurve mc = marked(2, 2);
    const HitchinBase hb(mc);
    for (int trial = 0; trial < 10; ++trial) {
        const FlagData flags{random_line(rng), random_line(rng)};
        const auto A = random_field(mc, flags, rng);
        const QuadDifferential q = mc.hitchin_map(A);
        CHECK(is_admissible(hb.jets(q, 0), {Rat(0), Rat(0)}));
    }
}

TEST_CASE("cross law: Verma quotients at depth 0") {
    Rng rng(23);
    for (const auto& [g, N] : {std::pair{2, 1}, std::pair{2, 2}}) {
        const HitchinBase hb(marked(g, N));
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rat> lambda;
            for (int i = 0; i < N; ++i) lambda.push_back(Rat(rng.between(0, 4)));
            const auto fp = hb.fiber_point(lambda);
            const auto jets = hb.jets(fp.q, 0);
            CHECK(verma_quotient_truncated(lambda, jets.to_jet_values(), 0) == QuotientVerdict::NonzeroUpToDepth);
            auto wrong = jets.to_jet_values();
            wrong[{N, 0}] += Rat(1);
            CHECK(verma_quotient_truncated(lambda, wrong, 0) == QuotientVerdict::ZeroCertified);
        }
    }
}
