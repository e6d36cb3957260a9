#include "runner.hpp"

#include <parahiggs/bridge.hpp>
#include <parahiggs/error.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>

namespace parahiggs::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw MathError(Errc::ConfigInvalid, what); }

Rat rat_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            invalid(where + ": " + e.what());
        }
    }
    invalid(where + ": expected an integer or a rational string");
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        invalid(std::string(key) + ": " + e.what());
    }
}

/// Draws do not go through std distributions, so they match across
/// standard libraries.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : gen_(seed) {}
    long between(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rat small_rat(long h) { return Rat(between(-h, h), between(1, 3)); }
    Line line() { return between(0, 5) == 0 ? Line::through(Rat(0), Rat(1)) : Line::through(Rat(1), small_rat(4)); }

private:
    std::mt19937_64 gen_;
};

json rat_json(const Rat& r) { return r.str(); }

json vec_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

struct Suite {
    json values = json::object();
    json checks = json::array();
    bool passed = true;

    template <class L, class R>
    void eq(const std::string& name, const L& lhs, const R& rhs) {
        add(name, to_json(lhs), to_json(rhs), lhs == rhs);
    }
    void truth(const std::string& name, bool ok) { add(name, ok, true, ok); }

private:
    void add(const std::string& name, json lhs, json rhs, bool ok) {
        checks.push_back({{"name", name}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}, {"passed", ok}});
        passed = passed && ok;
    }
    template <class T>
    static json to_json(const T& v) {
        if constexpr (std::is_same_v<T, Rat>) return v.str();
        else if constexpr (std::is_same_v<T, std::vector<Rat>>) return vec_json(v);
        else return json(v);
    }
};

struct Context {
    const ScenarioConfig& cfg;
    MarkedCurve mc;
    std::vector<Rat> lambda;
    int g;
    int n;
};

ParabolicHiggsField random_field(const MarkedCurve& mc, const FlagData& flags, Draw& draw) {
    const auto basis = mc.parabolic_basis(flags);
    RatVector coords(3 * mc.omega().dim());
    for (const auto& b : basis) {
        const Rat s = draw.small_rat(3);
        for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += s * b[j];
    }
    return mc.field_from_coordinates(coords, flags);
}

FlagData random_flags(const MarkedCurve& mc, Draw& draw) {
    FlagData flags;
    for (std::size_t i = 0; i < mc.n_points(); ++i) flags.push_back(draw.line());
    return flags;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
    // each suite draws from its own stream so selections do not shift values
    std::uint64_t h = seed;
    for (char c : name) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
    return h;
}

void suite_dims(const Context& cx, Suite& s) {
    const int expected = 3 * (cx.g - 1) + cx.n;
    const int base_dim = static_cast<int>(cx.mc.omega2().dim());
    Draw draw(suite_seed(cx.cfg.seed, "dims"));
    const int higgs_dim = static_cast<int>(cx.mc.parabolic_basis(random_flags(cx.mc, draw)).size());
    s.values = {{"genus", cx.g},
                {"points", cx.n},
                {"base_dim", base_dim},
                {"omega_dim", cx.mc.omega().dim()},
                {"parabolic_higgs_dim", higgs_dim},
                {"spectral_genus", 4 * cx.g - 3 + cx.n},
                {"prym_dim", expected}};
    s.eq("base_dim = 3(g-1)+N", base_dim, expected);
    s.eq("omega_dim = g-1+N", static_cast<int>(cx.mc.omega().dim()), cx.g - 1 + cx.n);
}

void suite_hitchin(const Context& cx, Suite& s) {
    Draw draw(suite_seed(cx.cfg.seed, "hitchin"));
    int parabolic = 0, in_base = 0, c0_zero = 0, borel_tried = 0, borel_ok = 0;
    for (int t = 0; t < cx.cfg.samples; ++t) {
        // on the trivial bundle distinct flags often force zero residues;
        // every other sample uses one line everywhere so Borel instances occur
        FlagData flags = random_flags(cx.mc, draw);
        if (t % 2 == 1) std::fill(flags.begin(), flags.end(), flags.front());
        const auto A = random_field(cx.mc, flags, draw);
        if (cx.mc.check_parabolic(A)) ++parabolic;
        const QuadDifferential q = cx.mc.hitchin_map(A);
        if (cx.mc.omega2().contains(q.coeff)) ++in_base;
        bool zero = true;
        bool residues_nonzero = true;
        for (std::size_t i = 0; i < cx.mc.n_points(); ++i) {
            zero = zero && c_coefficients(q, cx.mc.points()[i], 0, 0).at(0).is_zero();
            residues_nonzero = residues_nonzero && !cx.mc.residue_matrix(A, i).is_zero();
        }
        if (zero) ++c0_zero;
        if (residues_nonzero) {
            ++borel_tried;
            if (cx.mc.borel_from_residue(A) == flags) ++borel_ok;
        }
    }
    s.values = {{"samples", cx.cfg.samples}, {"borel_instances", borel_tried}};
    s.eq("fields satisfying the parabolic condition", parabolic, cx.cfg.samples);
    s.eq("det A in H^0(Omega^2(D))", in_base, cx.cfg.samples);
    s.eq("det A with c_0 = 0 at every point", c0_zero, cx.cfg.samples);
    s.eq("Borel roundtrips", borel_ok, borel_tried);
}

void suite_spectral(const Context& cx, Suite& s) {
    Draw draw(suite_seed(cx.cfg.seed, "spectral"));
    const int formula = 4 * cx.g - 3 + cx.n;
    int smooth = 0, agree = 0;
    std::size_t draws = 0;
    json genera = json::array();
    while (smooth < cx.cfg.samples && draws < cx.cfg.search_budget) {
        ++draws;
        RatVector coords(cx.mc.omega2().dim());
        for (auto& c : coords) c = draw.small_rat(6);
        const QuadDifferential q{cx.mc.omega2().combination(coords)};
        if (q.coeff.is_zero()) continue;
        const auto d = cx.mc.spectral_check(q);
        if (d.status != SpectralStatus::Smooth) continue;
        ++smooth;
        genera.push_back(*d.genus_rh);
        if (*d.genus_rh == formula && d.prym_dim == 3 * (cx.g - 1) + cx.n) ++agree;
    }
    s.values = {{"spectral_genus", formula},
                {"prym_dim", 3 * (cx.g - 1) + cx.n},
                {"draws", draws},
                {"riemann_hurwitz_genera", genera}};
    s.eq("smooth samples found", smooth, cx.cfg.samples);
    s.eq("Riemann-Hurwitz genus = 4g-3+N", agree, smooth);
}

void suite_sugawara(const Context& cx, Suite& s) {
    const auto M = AffineModule::verma(cx.lambda);
    json eig = json::array();
    for (int i = 0; i < cx.n; ++i) {
        const Rat expected = sugawara_eigenvalue(cx.lambda[static_cast<std::size_t>(i)]);
        eig.push_back(expected.str());
        const auto w = M.sugawara(0, i + 1, M.highest());
        s.eq("S_0 mu coefficient at copy " + std::to_string(i + 1), w.coeff({}), expected);
        s.eq("S_0 mu is a multiple of mu at copy " + std::to_string(i + 1), w.terms.size(),
             expected.is_zero() ? std::size_t{0} : std::size_t{1});
        for (int m = 1; m <= 4; ++m) {
            s.truth("S_" + std::to_string(m) + " mu = 0 at copy " + std::to_string(i + 1),
                    M.sugawara(m, i + 1, M.highest()).is_zero());
        }
    }
    const auto V = AffineModule::vacuum(cx.n);
    for (int i = 1; i <= cx.n; ++i) {
        for (int m = 1; m <= 4; ++m) {
            s.truth("S_" + std::to_string(m) + " v = 0 at copy " + std::to_string(i), V.sugawara(m, i, V.highest()).is_zero());
        }
    }
    s.values = {{"eigenvalues", eig}};
}

void suite_centrality(const Context& cx, Suite& s) {
    const int top = *std::max_element(cx.cfg.truncation_depths.begin(), cx.cfg.truncation_depths.end());
    std::size_t tested = 0, vanished = 0;
    const std::vector<AffineModule> modules{AffineModule::true_vacuum(1), AffineModule::verma({cx.lambda[0]}),
                                            AffineModule::vacuum(1)};
    for (const auto& M : modules) {
        for (int d = 0; d <= top; ++d) {
            for (const auto& mono : M.basis(d, 1)) {
                const auto v = M.basis_vector(mono);
                for (int m = -3; m <= 3; ++m) {
                    for (int k = -2; k <= 2; ++k) {
                        for (Sl2 g : kSl2Basis) {
                            ++tested;
                            if (M.sugawara_commutator(m, 1, LoopGen{1, k, g}, v).is_zero()) ++vanished;
                        }
                    }
                }
            }
        }
    }
    const auto V0 = AffineModule::vacuum(1, Rat(0));
    const auto w = V0.sugawara_commutator(0, 1, LoopGen::e(1), V0.basis_vector({LoopGen::f(-1)}));
    s.values = {{"max_degree", top}, {"commutators", tested}, {"witness_k0", w.str()}};
    s.eq("vanishing commutators at k = -2", vanished, tested);
    s.truth("nonzero commutator at k = 0", !w.is_zero());
}

void suite_singular(const Context&, Suite& s) {
    // golden data from the brute-force kernel run; partitions into parts >= 2
    const std::vector<int> golden{1, 0, 1, 1, 2, 2, 4};
    const auto T = AffineModule::true_vacuum(1);
    json dims = json::array();
    for (int d = 0; d < static_cast<int>(golden.size()); ++d) {
        const auto vs = singular_vectors(T, d);
        dims.push_back(vs.size());
        s.eq("dim singular space in degree " + std::to_string(d), static_cast<int>(vs.size()), golden[static_cast<std::size_t>(d)]);
    }
    s.values = {{"true_vacuum_singular_dims", dims}};
}

void suite_bridge(const Context& cx, Suite& s) {
    const HitchinBase hb(cx.mc);
    const auto rep = hb.exactness();
    const auto st = hb.restriction_stabilization();
    const auto fp = hb.fiber_point(cx.lambda);
    const int order = std::max(cx.cfg.series_precision, st.order);
    const auto jets = hb.jets(fp.q, order);
    std::vector<Rat> target;
    for (const auto& l : cx.lambda) target.push_back(sugawara_eigenvalue(l));

    s.values = {{"dim_d", rep.dim_d},
                {"dim_2d", rep.dim_2d},
                {"rank_r_minus_2", rep.rank_r},
                {"kernel_dim", rep.kernel_dim},
                {"stabilization_order", st.order},
                {"restriction_rank", st.rank},
                {"jet_order", order},
                {"fiber_point", vec_json(fp.coords)},
                {"delta", vec_json(target)}};
    const int n = 3 * (cx.g - 1) + cx.n;
    s.eq("dim H^0(Omega^2(2D)) = 3(g-1)+2N", static_cast<int>(rep.dim_2d), n + cx.n);
    s.eq("rank R_{-2} = N", static_cast<int>(rep.rank_r), cx.n);
    s.eq("ker R_{-2} dim = 3(g-1)+N", static_cast<int>(rep.kernel_dim), n);
    s.truth("ker R_{-2} = H^0(Omega^2(D))", rep.kernel_is_d);
    s.eq("restriction rank = 3(g-1)+N", static_cast<int>(st.rank), n);
    s.eq("R_{-2}(q_0) = Delta(lambda)", hb.r_minus_2(fp.q), target);
    s.truth("jets of q_0 are lambda-admissible", is_admissible(jets, cx.lambda));
    const auto glob = hb.is_global(jets, order);
    s.truth("jets of q_0 are global", glob.has_value());
    if (glob) s.eq("global solution is q_0", glob->particular, fp.coords);
    s.truth("f_q(q_0) = 0", is_zero_vector(hb.f_q(fp, fp.q)));
    s.eq("graded dim in weight 2", hb.graded_dims(2).enumerated, static_cast<long>(n));
    s.eq("graded dim in weight 4", hb.graded_dims(4).enumerated, hb.graded_dims(4).closed_form);
}

void suite_admissibility(const Context& cx, Suite& s) {
    const HitchinBase hb(cx.mc);
    const auto fp = hb.fiber_point(cx.lambda);
    json verdicts = json::object();
    for (int depth : cx.cfg.truncation_depths) {
        const auto jets = hb.jets(fp.q, depth).to_jet_values();
        const auto v = verma_quotient_truncated(cx.lambda, jets, depth);
        verdicts[std::to_string(depth)] = to_string(v);
        s.eq("fibre jets at depth " + std::to_string(depth), to_string(v), to_string(QuotientVerdict::NonzeroUpToDepth));
    }
    for (int i = 1; i <= cx.n; ++i) {
        auto wrong = hb.jets(fp.q, 0).to_jet_values();
        wrong[{i, 0}] += Rat(1);
        s.eq("c_0 perturbed at copy " + std::to_string(i), to_string(verma_quotient_truncated(cx.lambda, wrong, 0)),
             to_string(QuotientVerdict::ZeroCertified));
    }
    s.values = {{"verdicts", verdicts}};
}

const std::vector<std::pair<std::string, std::function<void(const Context&, Suite&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<void(const Context&, Suite&)>>> r{
        {"dims", suite_dims},           {"hitchin", suite_hitchin},       {"spectral", suite_spectral},
        {"sugawara", suite_sugawara},   {"centrality", suite_centrality}, {"singular", suite_singular},
        {"bridge", suite_bridge},       {"admissibility", suite_admissibility},
    };
    return r;
}

void check_suite_names(const std::vector<std::string>& names) {
    const auto& all = all_suites();
    for (const auto& n : names) {
        if (std::find(all.begin(), all.end(), n) == all.end()) invalid("unknown suite '" + n + "'");
    }
}

MarkedCurve build_curve(const ScenarioConfig& cfg) {
    try {
        HyperellipticCurve c(cfg.curve_f);
        std::vector<CurvePoint> pts;
        for (const auto& [x, y] : cfg.marked_points) pts.push_back(CurvePoint::affine(c, x, y));
        return MarkedCurve(c, pts);
    } catch (const MathError& e) {
        invalid(e.what());
    }
}

}  // namespace

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, f] : registry()) out.push_back(n);
        return out;
    }();
    return names;
}

ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) invalid("config must be a JSON object");
    static const std::set<std::string> known{"curve_f",         "marked_points", "lambda", "series_precision",
                                             "truncation_depths", "search_budget", "samples", "seed", "suites"};
    for (const auto& [k, v] : j.items()) {
        if (!known.contains(k)) invalid("unknown field '" + k + "'");
    }
    ScenarioConfig cfg;
    if (!j.contains("curve_f") || !j["curve_f"].is_array()) invalid("curve_f: coefficient list required");
    std::vector<Rat> f;
    for (const auto& c : j["curve_f"]) f.push_back(rat_field(c, "curve_f"));
    cfg.curve_f = Poly(std::move(f));

    if (!j.contains("marked_points") || !j["marked_points"].is_array()) invalid("marked_points: list required");
    for (const auto& p : j["marked_points"]) {
        if (!p.is_array() || p.size() != 2) invalid("marked_points: each entry is [x, y]");
        cfg.marked_points.emplace_back(rat_field(p[0], "marked_points"), rat_field(p[1], "marked_points"));
    }
    if (!j.contains("lambda") || !j["lambda"].is_array()) invalid("lambda: integer list required");
    for (const auto& l : j["lambda"]) {
        if (!l.is_number_integer()) invalid("lambda: integers only");
        cfg.lambda.push_back(l.get<long>());
    }
    cfg.series_precision = get_or(j, "series_precision", cfg.series_precision);
    cfg.truncation_depths = get_or(j, "truncation_depths", cfg.truncation_depths);
    cfg.search_budget = get_or(j, "search_budget", cfg.search_budget);
    cfg.samples = get_or(j, "samples", cfg.samples);
    cfg.seed = get_or(j, "seed", cfg.seed);
    if (j.contains("suites")) {
        cfg.suites = get_or(j, "suites", std::vector<std::string>{});
        check_suite_names(*cfg.suites);
    }

    if (cfg.marked_points.empty()) invalid("at least one marked point is required");
    if (cfg.lambda.size() != cfg.marked_points.size()) invalid("lambda needs one entry per marked point");
    if (cfg.series_precision < 0) invalid("series_precision must be non-negative");
    if (cfg.truncation_depths.empty()) invalid("truncation_depths must not be empty");
    for (int d : cfg.truncation_depths) {
        if (d < 0) invalid("truncation_depths must be non-negative");
    }
    if (cfg.samples < 1) invalid("samples must be positive");

    const MarkedCurve mc = build_curve(cfg);
    if (2 * mc.genus() - 2 + static_cast<int>(mc.n_points()) <= 0) invalid("2g - 2 + N must be positive");
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        invalid(path + ": " + e.what());
    }
    return parse_config(j);
}

RunResult run_suites(const ScenarioConfig& cfg, const std::vector<std::string>& suites, std::ostream* log) {
    check_suite_names(suites);
    const MarkedCurve mc = build_curve(cfg);
    std::vector<Rat> lambda;
    for (long l : cfg.lambda) lambda.emplace_back(l);
    const Context cx{cfg, mc, lambda, mc.genus(), static_cast<int>(mc.n_points())};

    RunResult out;
    json points = json::array();
    for (const auto& [x, y] : cfg.marked_points) points.push_back({rat_json(x), rat_json(y)});
    json f = json::array();
    for (int i = 0; i <= cfg.curve_f.degree(); ++i) f.push_back(cfg.curve_f.coeff(i).str());
    out.report = {{"schema", "parahiggs-report/1"},
                  {"seed", cfg.seed},
                  {"scenario", {{"curve_f", f}, {"marked_points", points}, {"lambda", cfg.lambda}}},
                  {"suites", json::array()}};

    for (const auto& [name, fn] : registry()) {
        if (std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
        Suite s;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(cx, s);
        } catch (const std::exception& e) {
            s.passed = false;
            s.values["error"] = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.passed = out.passed && s.passed;
        out.report["suites"].push_back({{"name", name},
                                        {"status", s.passed ? "pass" : "fail"},
                                        {"values", s.values},
                                        {"checks", s.checks},
                                        {"seconds", secs}});
        if (log) *log << (s.passed ? "pass " : "FAIL ") << name << " (" << s.checks.size() << " checks, " << secs << " s)\n";
    }
    out.report["passed"] = out.passed;
    return out;
}

json strip_timings(json report) {
    if (report.is_object()) {
        report.erase("seconds");
        for (auto it = report.begin(); it != report.end(); ++it) it.value() = strip_timings(it.value());
    } else if (report.is_array()) {
        for (auto& v : report) v = strip_timings(v);
    }
    return report;
}

int run(const RunOptions& opts, std::ostream& err) {
    ScenarioConfig cfg;
    std::vector<std::string> suites;
    try {
        cfg = load_config(opts.config_path);
        if (opts.seed) cfg.seed = *opts.seed;
        suites = !opts.suites.empty() ? opts.suites : cfg.suites.value_or(all_suites());
        check_suite_names(suites);
    } catch (const MathError& e) {
        err << e.what() << "\n";
        return 2;
    }
    const RunResult r = run_suites(cfg, suites, opts.verbose ? &err : nullptr);
    const std::string text = r.report.dump(2) + "\n";
    if (opts.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output_path);
        if (!out) {
            err << "cannot write " << opts.output_path << "\n";
            return 2;
        }
        out << text;
    }
    return r.passed ? 0 : 1;
}

}  // namespace parahiggs::cli
