#include "parahiggs/module.hpp"

#include "parahiggs/error.hpp"
#include "parahiggs/matrix.hpp"
#include "straighten.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace parahiggs {

std::string to_string(ModuleKind k) {
    switch (k) {
        case ModuleKind::Vacuum: return "vacuum";
        case ModuleKind::TrueVacuum: return "true_vacuum";
        case ModuleKind::Verma: return "verma";
    }
    return "?";
}

std::string to_string(QuotientVerdict v) {
    return v == QuotientVerdict::ZeroCertified ? "ZeroCertified" : "NonzeroUpToDepth";
}

Rat sugawara_eigenvalue(const Rat& lambda) { return lambda * (lambda + Rat(2)) / Rat(4); }

Rat ModuleVector::coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
}

int ModuleVector::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, monomial_degree(m));
    return d;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms) detail::add_term(terms, m, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms) detail::add_term(terms, m, -c);
    return *this;
}

ModuleVector operator*(const Rat& s, const ModuleVector& v) {
    ModuleVector out{v.kind, {}};
    if (s.is_zero()) return out;
    for (const auto& [m, c] : v.terms) out.terms.emplace(m, c * s);
    return out;
}

std::string ModuleVector::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (!m.empty()) os << " " << monomial_str(m);
    }
    os << " |" << (kind == ModuleKind::Verma ? "mu" : "v") << ">";
    return os.str();
}

namespace {

struct ModulePolicy {
    ModuleKind kind;
    std::vector<Rat> lambda;

    bool creates(const LoopGen& x) const {
        switch (kind) {
            case ModuleKind::Vacuum: return x.mode <= 0;
            case ModuleKind::TrueVacuum: return x.mode <= -1;
            case ModuleKind::Verma: return x.mode <= -1 || (x.mode == 0 && x.gen == Sl2::F);
        }
        return false;
    }

    std::optional<Rat> on_vacuum(const LoopGen& x) const {
        if (kind == ModuleKind::Verma && x.mode == 0 && x.gen == Sl2::H) {
            const Rat& l = lambda[static_cast<std::size_t>(x.copy - 1)];
            if (l.is_zero()) return std::nullopt;
            return l;
        }
        return std::nullopt;
    }
};

using Terms = detail::TermMap<Rat>;

int ceil_half(int m) { return m >= 0 ? (m + 1) / 2 : -((-m) / 2); }

}  // namespace

struct AffineModule::Impl {
    ModuleKind kind;
    int copies;
    Rat level;
    std::vector<Rat> lambda;
    mutable detail::Straightener<Rat, ModulePolicy> engine;
    mutable std::map<std::tuple<int, int, Monomial>, Terms> sugawara_cache;

    Impl(ModuleKind k, int n, Rat lvl, std::vector<Rat> lam)
        : kind(k), copies(n), level(std::move(lvl)), lambda(lam), engine(level, ModulePolicy{k, std::move(lam)}) {}

    void check_copy(int copy) const {
        if (copy < 1 || copy > copies) {
            throw MathError(Errc::DimensionMismatch, "copy " + std::to_string(copy) + " outside 1.." + std::to_string(copies));
        }
    }

    const Terms& sugawara(int m, int copy, const Monomial& mono) const {
        auto key = std::make_tuple(m, copy, mono);
        if (auto it = sugawara_cache.find(key); it != sugawara_cache.end()) return it->second;
        Terms out;
        const auto apply2 = [&](const LoopGen& left, const LoopGen& right, const Rat& c) {
            const Terms& r = engine.act(right, mono);
            for (const auto& [mm, cc] : r) detail::add_scaled(out, engine.act(left, mm), cc * c);
        };
        // The right factor carries the larger mode j; it kills mono once j
        // exceeds the copy's degree.
        const int top = monomial_degree(mono, copy);
        for (int j = ceil_half(m); j <= top; ++j) {
            const int i = m - j;
            if (i < j) {
                apply2(LoopGen::e(i, copy), LoopGen::f(j, copy), Rat(1));
                apply2(LoopGen::f(i, copy), LoopGen::e(j, copy), Rat(1));
                apply2(LoopGen::h(i, copy), LoopGen::h(j, copy), Rat(1, 2));
            } else {
                apply2(LoopGen::e(j, copy), LoopGen::f(j, copy), Rat(1, 2));
                apply2(LoopGen::f(j, copy), LoopGen::e(j, copy), Rat(1, 2));
                apply2(LoopGen::h(j, copy), LoopGen::h(j, copy), Rat(1, 4));
            }
        }
        return sugawara_cache.emplace(std::move(key), std::move(out)).first->second;
    }
};

AffineModule AffineModule::vacuum(int copies, const Rat& level) {
    if (copies < 1) throw MathError(Errc::DimensionMismatch, "need at least one copy");
    return AffineModule(std::make_shared<Impl>(ModuleKind::Vacuum, copies, level, std::vector<Rat>(copies)));
}

AffineModule AffineModule::true_vacuum(int copies, const Rat& level) {
    if (copies < 1) throw MathError(Errc::DimensionMismatch, "need at least one copy");
    return AffineModule(std::make_shared<Impl>(ModuleKind::TrueVacuum, copies, level, std::vector<Rat>(copies)));
}

AffineModule AffineModule::verma(std::vector<Rat> lambda, const Rat& level) {
    if (lambda.empty()) throw MathError(Errc::DimensionMismatch, "need at least one copy");
    const int n = static_cast<int>(lambda.size());
    return AffineModule(std::make_shared<Impl>(ModuleKind::Verma, n, level, std::move(lambda)));
}

ModuleKind AffineModule::kind() const { return impl_->kind; }
int AffineModule::copies() const { return impl_->copies; }
const Rat& AffineModule::level() const { return impl_->level; }
const std::vector<Rat>& AffineModule::lambda() const { return impl_->lambda; }

bool AffineModule::creates(const LoopGen& x) const { return impl_->engine.policy().creates(x); }

ModuleVector AffineModule::highest() const { return {impl_->kind, {{Monomial{}, Rat(1)}}}; }

ModuleVector AffineModule::basis_vector(const Monomial& m) const {
    for (std::size_t i = 0; i < m.size(); ++i) {
        impl_->check_copy(m[i].copy);
        if (!creates(m[i])) throw MathError(Errc::DimensionMismatch, m[i].str() + " does not create in this module");
        if (i > 0 && m[i] < m[i - 1]) throw MathError(Errc::DimensionMismatch, monomial_str(m) + " is not PBW ordered");
    }
    return {impl_->kind, {{m, Rat(1)}}};
}

void AffineModule::check_kind(const ModuleVector& v) const {
    if (v.kind != impl_->kind) {
        throw MathError(Errc::DimensionMismatch, "vector of a " + to_string(v.kind) + " module given to a " +
                                                     to_string(impl_->kind) + " module");
    }
}

ModuleVector AffineModule::act(const LoopGen& x, const ModuleVector& v) const {
    check_kind(v);
    impl_->check_copy(x.copy);
    return {impl_->kind, impl_->engine.act(x, v.terms)};
}

ModuleVector AffineModule::act(const AffineElement& x, const ModuleVector& v) const {
    check_kind(v);
    if (x.level() && *x.level() != impl_->level) {
        throw MathError(Errc::LevelMismatch,
                        "element at level " + x.level()->str() + " acting on a module at level " + impl_->level.str());
    }
    ModuleVector out{impl_->kind, {}};
    for (const auto& [m, c] : x.terms()) {
        Terms w = v.terms;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            impl_->check_copy(it->copy);
            w = impl_->engine.act(*it, w);
        }
        detail::add_scaled(out.terms, w, c.eval(impl_->level));
    }
    return out;
}

ModuleVector AffineModule::sugawara(int m, int copy, const ModuleVector& v) const {
    check_kind(v);
    impl_->check_copy(copy);
    ModuleVector out{impl_->kind, {}};
    for (const auto& [mono, c] : v.terms) detail::add_scaled(out.terms, impl_->sugawara(m, copy, mono), c);
    return out;
}

ModuleVector AffineModule::sugawara_commutator(int m, int copy, const LoopGen& x, const ModuleVector& v) const {
    return sugawara(m, copy, act(x, v)) - act(x, sugawara(m, copy, v));
}

std::vector<Monomial> AffineModule::basis(int d, std::optional<int> zero_mode_bound) const {
    std::vector<LoopGen> candidates;
    bool zero_modes = false;
    for (int copy = 1; copy <= impl_->copies; ++copy) {
        for (int mode = -d; mode <= 0; ++mode) {
            for (Sl2 g : {Sl2::F, Sl2::H, Sl2::E}) {
                const LoopGen x{copy, mode, g};
                if (!creates(x)) continue;
                candidates.push_back(x);
                zero_modes = zero_modes || mode == 0;
            }
        }
    }
    if (zero_modes && !zero_mode_bound) {
        throw MathError(Errc::TruncationRequired, "zero modes act freely on the " + to_string(impl_->kind) +
                                                      " module; a zero-mode bound is required");
    }
    const int bound = zero_mode_bound.value_or(0);

    std::vector<Monomial> out;
    Monomial current;
    std::vector<int> zero_count(static_cast<std::size_t>(impl_->copies) + 1, 0);
    const auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) out.push_back(current);
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const LoopGen& x = candidates[i];
            if (x.degree() > remaining) continue;
            int& zc = zero_count[static_cast<std::size_t>(x.copy)];
            if (x.mode == 0 && zc >= bound) continue;
            if (x.mode == 0) ++zc;
            current.push_back(x);
            self(self, i, remaining - x.degree());
            current.pop_back();
            if (x.mode == 0) --zc;
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<ModuleVector> singular_vectors(const AffineModule& module, int d, std::optional<int> zero_mode_bound) {
    if (d < 0) return {};
    const std::vector<Monomial> cols = module.basis(d, zero_mode_bound);

    std::map<std::tuple<int, int, int, Monomial>, std::size_t> row_index;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> column_entries(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const ModuleVector b = module.basis_vector(cols[j]);
        for (int copy = 1; copy <= module.copies(); ++copy) {
            for (int n = 1; n <= d; ++n) {
                for (Sl2 g : kSl2Basis) {
                    const ModuleVector img = module.act(LoopGen{copy, n, g}, b);
                    for (const auto& [m, c] : img.terms) {
                        const auto key = std::make_tuple(copy, n, static_cast<int>(g), m);
                        auto [it, inserted] = row_index.try_emplace(key, row_index.size());
                        column_entries[j].emplace_back(it->second, c);
                    }
                }
            }
        }
    }
    RatMatrix M(row_index.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [r, c] : column_entries[j]) M(r, j) = c;
    }

    std::vector<ModuleVector> out;
    for (const RatVector& k : kernel_basis(M)) {
        ModuleVector v{module.kind(), {}};
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!k[j].is_zero()) v.terms.emplace(cols[j], k[j]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool is_singular(const AffineModule& module, const ModuleVector& v) {
    // modes above deg v kill it outright
    for (int copy = 1; copy <= module.copies(); ++copy) {
        for (int n = 1; n <= v.degree(); ++n) {
            for (Sl2 g : kSl2Basis) {
                if (!module.act(LoopGen{copy, n, g}, v).is_zero()) return false;
            }
        }
    }
    return true;
}

QuotientVerdict verma_quotient_truncated(const std::vector<Rat>& lambda, const JetValues& jets, int depth,
                                         int f0_bound) {
    if (depth < 0) throw MathError(Errc::DimensionMismatch, "depth must be non-negative");
    const AffineModule M = AffineModule::verma(lambda, Rat(-2));

    std::vector<ModuleVector> relations;
    for (int deg = 0; deg <= depth; ++deg) {
        for (const Monomial& w : M.basis(deg, f0_bound)) {
            const ModuleVector wv = M.basis_vector(w);
            for (int copy = 1; copy <= M.copies(); ++copy) {
                for (int m = deg - depth; m <= 0; ++m) {
                    auto it = jets.find({copy, m});
                    const Rat c = it == jets.end() ? Rat(0) : it->second;
                    ModuleVector r = M.sugawara(m, copy, wv) - c * wv;
                    if (!r.is_zero()) relations.push_back(std::move(r));
                }
            }
        }
    }

    std::map<Monomial, std::size_t> row_index;
    row_index.emplace(Monomial{}, 0);
    for (const auto& r : relations) {
        for (const auto& [m, c] : r.terms) row_index.try_emplace(m, row_index.size());
    }
    RatMatrix A(row_index.size(), relations.size());
    for (std::size_t j = 0; j < relations.size(); ++j) {
        for (const auto& [m, c] : relations[j].terms) A(row_index.at(m), j) = c;
    }
    RatVector mu(row_index.size());
    mu[0] = Rat(1);
    return solve(A, mu) ? QuotientVerdict::ZeroCertified : QuotientVerdict::NonzeroUpToDepth;
}

}  // namespace parahiggs
