// One line per acceptance criterion. All comparisons are exact over Q; the
// only tolerances are the wall-clock limits below.

#include <parahiggs/bridge.hpp>
#include <parahiggs/error.hpp>

#include "runner.hpp"
#include "support/curves.hpp"
#include "support/fields.hpp"
#include "support/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace parahiggs;
using namespace parahiggs::testing;

namespace {

const std::pair<int, int> kConfigs[] = {{1, 2}, {2, 1}, {2, 2}, {3, 1}};

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string str(const std::pair<int, int>& gn) {
    return "(g=" + std::to_string(gn.first) + ", N=" + std::to_string(gn.second) + ")";
}

Outcome dimension_law() {
    Outcome o;
    std::string dims;
    for (const auto& gn : kConfigs) {
        const auto t0 = Clock::now();
        const MarkedCurve mc = marked(gn.first, gn.second);
        const std::size_t dim = mc.omega2().dim();
        o.require(dim == static_cast<std::size_t>(3 * (gn.first - 1) + gn.second),
                  str(gn) + ": dim " + std::to_string(dim));
        o.require(seconds_since(t0) < 30.0, str(gn) + " exceeded 30 s");
        dims += (dims.empty() ? "" : " ") + str(gn) + "->" + std::to_string(dim);
    }
    if (o.ok) o.detail = dims;
    return o;
}

Outcome spectral_genus() {
    Outcome o;
    Rng rng(101);
    int smooth_total = 0;
    for (int N : {1, 2}) {
        const MarkedCurve mc = marked(2, N);
        int smooth = 0;
        for (int trial = 0; trial < 40 && smooth < 10; ++trial) {
            RatVector coords(mc.omega2().dim());
            for (auto& c : coords) c = rng.small_rat(6);
            const QuadDifferential q{mc.omega2().combination(coords)};
            if (q.coeff.is_zero()) continue;
            const auto s = mc.spectral_check(q);
            if (s.status != SpectralStatus::Smooth) continue;
            ++smooth;
            o.require(s.genus_rh && *s.genus_rh == 4 * 2 - 3 + N, "Riemann-Hurwitz genus differs from 4g-3+N");
            o.require(s.prym_dim == 3 + N, "Prym dimension differs from 3(g-1)+N");
        }
        o.require(smooth >= 10, "fewer than 10 certified smooth samples at N=" + std::to_string(N));
        smooth_total += smooth;
    }
    if (o.ok) o.detail = std::to_string(smooth_total) + " smooth samples, genera 6 and 7, Prym 4 and 5";
    return o;
}

Outcome hitchin_membership() {
    Outcome o;
    Rng rng(202);
    const MarkedCurve mc = marked(2, 2);
    for (int t = 0; t < 50; ++t) {
        const FlagData flags{random_line(rng), random_line(rng)};
        const auto A = random_field(mc, flags, rng);
        o.require(mc.check_parabolic(A), "random field is not parabolic");
        const QuadDifferential q = mc.hitchin_map(A);
        o.require(mc.omega2().contains(q.coeff), "det A outside span quad_basis(C, D)");
        for (const auto& p : mc.points()) o.require(c_coefficients(q, p, 0, 0).at(0).is_zero(), "c_0 of det A nonzero");
    }
    if (o.ok) o.detail = "50 fields on (2,2)";
    return o;
}

Outcome borel_reconstruction() {
    Outcome o;
    Rng rng(303);
    int instances = 0;
    const auto run = [&](const MarkedCurve& mc, bool shared_flag, int trials) {
        for (int t = 0; t < trials; ++t) {
            FlagData flags;
            for (std::size_t i = 0; i < mc.n_points(); ++i) flags.push_back(random_line(rng));
            if (shared_flag) std::fill(flags.begin(), flags.end(), flags.front());
            const auto A = random_field(mc, flags, rng);
            bool nonzero = true;
            for (std::size_t i = 0; i < mc.n_points(); ++i) nonzero = nonzero && !mc.residue_matrix(A, i).is_zero();
            if (!nonzero) continue;
            ++instances;
            o.require(mc.borel_from_residue(A) == flags, "flags not recovered");
        }
    };
    run(marked(2, 2), true, 30);
    run(marked(1, 4), false, 30);
    run(marked(2, 4), false, 20);
    o.require(instances >= 30, "only " + std::to_string(instances) + " instances with nonzero residues");
    if (o.ok) o.detail = std::to_string(instances) + " roundtrips";
    return o;
}

Outcome central_extension() {
    Outcome o;
    std::vector<LoopGen> gens;
    for (int n = -3; n <= 3; ++n)
        for (Sl2 g : kSl2Basis) gens.push_back({1, n, g});
    const auto lin = [](const LoopGen& a, const AffineElement& x) {
        AffineElement out;
        for (const auto& [m, c] : x.terms()) {
            if (m.empty()) continue;
            out += c.coeff(0) * bracket(a, m[0]);
        }
        return out;
    };
    std::size_t triples = 0;
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            o.require(bracket(a, b) == Rat(-1) * bracket(b, a), "antisymmetry fails");
            for (const auto& c : gens) {
                ++triples;
                o.require((lin(a, bracket(b, c)) + lin(b, bracket(c, a)) + lin(c, bracket(a, b))).is_zero(), "Jacobi fails");
            }
        }
    }
    const AffineElement K = AffineElement::central();
    o.require(bracket(LoopGen::e(1), LoopGen::f(-1)) == AffineElement::generator(LoopGen::h(0)) + K, "[e1,f-1] != h0 + K");
    o.require(bracket(LoopGen::h(1), LoopGen::h(-1)) == Rat(2) * K, "[h1,h-1] != 2K");
    if (o.ok) o.detail = std::to_string(triples) + " Jacobi triples, [e1,f-1]=h0+K, [h1,h-1]=2K";
    return o;
}

Outcome critical_sugawara() {
    Outcome o;
    const auto t0 = Clock::now();
    for (long lam : {0L, 1L, 2L, 3L, 5L}) {
        const auto M = AffineModule::verma({Rat(lam)});
        o.require(M.sugawara(0, 1, M.highest()) == sugawara_eigenvalue(Rat(lam)) * M.highest(),
                  "S_0 eigenvalue wrong at lambda=" + std::to_string(lam));
        o.require(sugawara_eigenvalue(Rat(lam)) == Rat(lam * (lam + 2), 4), "Delta formula");
    }
    const auto V = AffineModule::vacuum(1);
    for (int m = 1; m <= 4; ++m) o.require(V.sugawara(m, 1, V.highest()).is_zero(), "S_m v != 0");

    std::size_t commutators = 0;
    const std::vector<AffineModule> modules{AffineModule::vacuum(1), AffineModule::true_vacuum(1),
                                            AffineModule::verma({Rat(1)})};
    for (const auto& M : modules) {
        for (int d = 0; d <= 4; ++d) {
            for (const auto& mono : M.basis(d, 1)) {
                const auto v = M.basis_vector(mono);
                for (int m = -3; m <= 3; ++m) {
                    for (int n = -2; n <= 2; ++n) {
                        for (Sl2 g : kSl2Basis) {
                            ++commutators;
                            o.require(M.sugawara_commutator(m, 1, LoopGen{1, n, g}, v).is_zero(),
                                      "[S_m, X_n] v != 0 at k=-2");
                        }
                    }
                }
            }
        }
    }
    const auto V0 = AffineModule::vacuum(1, Rat(0));
    const auto w = V0.sugawara_commutator(0, 1, LoopGen::e(1), V0.basis_vector({LoopGen::f(-1)}));
    o.require(w == Rat(-2) * V0.basis_vector({LoopGen::h(0)}), "k=0 witness");
    const double secs = seconds_since(t0);
    o.require(secs < 300.0, "exceeded 5 min");
    if (o.ok) {
        o.detail = std::to_string(commutators) + " commutators vanish; k=0 witness [S_0,e_1] f_-1 v = -2 h_0 v";
    }
    return o;
}

Outcome feigin_frenkel_shadow() {
    Outcome o;
    const int golden[] = {1, 0, 1, 1, 2, 2, 4};
    // partitions of d into parts >= 2
    std::vector<long> p(7, 0);
    p[0] = 1;
    for (int part = 2; part <= 6; ++part)
        for (int s = part; s <= 6; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    const auto T = AffineModule::true_vacuum(1);
    std::string dims;
    for (int d = 0; d <= 6; ++d) {
        const auto vs = singular_vectors(T, d);
        dims += (d ? "," : "") + std::to_string(vs.size());
        o.require(static_cast<int>(vs.size()) == golden[d], "degree " + std::to_string(d) + " differs from golden");
        o.require(golden[d] == p[static_cast<std::size_t>(d)], "golden differs from partition count");
        for (const auto& v : vs) o.require(is_singular(T, v), "kernel vector not singular");
    }
    if (o.ok) o.detail = "dims " + dims;
    return o;
}

Outcome base_exactness() {
    Outcome o;
    for (const auto& gn : kConfigs) {
        const auto [g, N] = gn;
        const HitchinBase hb(marked(g, N));
        const auto rep = hb.exactness();
        o.require(rep.dim_2d == static_cast<std::size_t>(3 * (g - 1) + 2 * N), str(gn) + ": dim H^0(Omega^2(2D))");
        o.require(rep.rank_r == static_cast<std::size_t>(N), str(gn) + ": R_{-2} not surjective");
        o.require(rep.kernel_is_d, str(gn) + ": kernel differs from H^0(Omega^2(D))");
        o.require(hb.restriction_stabilization().rank == static_cast<std::size_t>(3 * (g - 1) + N),
                  str(gn) + ": restriction rank");
    }
    if (o.ok) o.detail = "4 configurations";
    return o;
}

Outcome admissibility_shadow() {
    Outcome o;
    std::size_t verdicts = 0;
    for (int N : {1, 2}) {
        const HitchinBase hb(marked(2, N));
        for (long a : {0L, 1L, 2L, 3L}) {
            std::vector<Rat> lambda(static_cast<std::size_t>(N), Rat(a));
            lambda.back() = Rat(a == 3 ? 0 : a + 1);
            const auto fp = hb.fiber_point(lambda);
            for (int depth = 0; depth <= 2; ++depth) {
                ++verdicts;
                o.require(verma_quotient_truncated(lambda, hb.jets(fp.q, depth).to_jet_values(), depth) ==
                              QuotientVerdict::NonzeroUpToDepth,
                          "fibre jets certified zero");
            }
            for (int i = 1; i <= N; ++i) {
                for (const Rat& shift : {Rat(1), Rat(-1, 2)}) {
                    auto wrong = hb.jets(fp.q, 0).to_jet_values();
                    wrong[{i, 0}] += shift;
                    ++verdicts;
                    o.require(verma_quotient_truncated(lambda, wrong, 0) == QuotientVerdict::ZeroCertified,
                              "perturbed c_0 not certified zero");
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(verdicts) + " verdicts";
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto cfg = cli::load_config(PARAHIGGS_TEST_DATA "/g2n2.json");
    const auto a = cli::run_suites(cfg, cli::all_suites());
    const auto b = cli::run_suites(cfg, cli::all_suites());
    o.require(a.passed && b.passed, "some suite failed");
    o.require(cli::strip_timings(a.report).dump() == cli::strip_timings(b.report).dump(), "reports differ");
    if (o.ok) o.detail = "two full runs identical modulo timings";
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"dimension law", dimension_law},
        {"spectral genus", spectral_genus},
        {"Hitchin-image membership", hitchin_membership},
        {"Borel reconstruction", borel_reconstruction},
        {"central extension", central_extension},
        {"critical-level Sugawara", critical_sugawara},
        {"Feigin-Frenkel character shadow", feigin_frenkel_shadow},
        {"base exactness", base_exactness},
        {"admissibility shadow", admissibility_shadow},
        {"determinism", determinism},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.ok) ++failed;
        std::printf("%-4s criterion %2d  %-32s %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
