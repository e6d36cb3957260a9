#pragma once

#include "parahiggs/affine.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace parahiggs {

/// Vacuum: induced from the positive modes, zero modes act freely.
/// TrueVacuum: modes >= 0 kill the generator.
/// Verma: modes >= 1 and e_0 kill mu, h_0 mu = lambda_i mu.
enum class ModuleKind { Vacuum, TrueVacuum, Verma };

std::string to_string(ModuleKind k);

/// Finite combination of PBW basis vectors (monomial applied to the
/// generating vector).
struct ModuleVector {
    ModuleKind kind = ModuleKind::Vacuum;
    std::map<Monomial, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    Rat coeff(const Monomial& m) const;
    /// Largest total t-degree among the terms (0 for the zero vector).
    int degree() const;

    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rat& s, const ModuleVector& v);
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

    std::string str() const;
};

class AffineModule {
public:
    static AffineModule vacuum(int copies, const Rat& level = Rat(-2));
    static AffineModule true_vacuum(int copies, const Rat& level = Rat(-2));
    static AffineModule verma(std::vector<Rat> lambda, const Rat& level = Rat(-2));

    ModuleKind kind() const;
    int copies() const;
    const Rat& level() const;
    const std::vector<Rat>& lambda() const;

    /// The generating vector (v_{-2}, the true vacuum, or mu_lambda).
    ModuleVector highest() const;
    /// Basis vector m * generator; m must be PBW ordered and use only
    /// creation generators of this module.
    ModuleVector basis_vector(const Monomial& m) const;
    bool creates(const LoopGen& x) const;

    ModuleVector act(const LoopGen& x, const ModuleVector& v) const;
    /// Throws LevelMismatch if x carries a level different from the module's.
    ModuleVector act(const AffineElement& x, const ModuleVector& v) const;

    /// S_m^{(copy)} v with
    /// S_m = 1/2 sum_k (:e_k f_{m-k}: + :f_k e_{m-k}: + 1/2 :h_k h_{m-k}:).
    ModuleVector sugawara(int m, int copy, const ModuleVector& v) const;
    /// (S_m X - X S_m) v.
    ModuleVector sugawara_commutator(int m, int copy, const LoopGen& x, const ModuleVector& v) const;

    /// PBW basis monomials of total t-degree exactly d. zero_mode_bound caps
    /// the number of zero-mode generators per copy (required when zero modes
    /// act freely, ignored otherwise).
    std::vector<Monomial> basis(int d, std::optional<int> zero_mode_bound = std::nullopt) const;

private:
    struct Impl;
    explicit AffineModule(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    void check_kind(const ModuleVector& v) const;
    std::shared_ptr<Impl> impl_;
};

/// Delta(lambda) = lambda (lambda + 2) / 4.
Rat sugawara_eigenvalue(const Rat& lambda);

/// Filtration weight of S_m (deg X = 1).
inline constexpr int kSugawaraWeight = 2;

/// Basis of the degree-d vectors killed by every generator of mode 1..d in
/// every copy. Vacuum and Verma modules need zero_mode_bound
/// (TruncationRequired otherwise); the kernel is then taken inside the
/// truncated space.
std::vector<ModuleVector> singular_vectors(const AffineModule& module, int d,
                                           std::optional<int> zero_mode_bound = std::nullopt);

/// True iff every generator of positive mode, in every copy, kills v.
bool is_singular(const AffineModule& module, const ModuleVector& v);

enum class QuotientVerdict { ZeroCertified, NonzeroUpToDepth };

std::string to_string(QuotientVerdict v);

/// Jet values c_m^{(i)} keyed by (copy, m); missing entries are 0.
using JetValues = std::map<std::pair<int, int>, Rat>;

/// Truncation of M_{-2,lambda} / (S_m^{(i)} - c_m^{(i)}): spans
/// (S_m - c_m) w for m in [-depth, 0] over basis vectors w with
/// deg w - m <= depth and at most f0_bound powers of f_0 per copy, and
/// certifies vanishing when mu_lambda lies in that span.
QuotientVerdict verma_quotient_truncated(const std::vector<Rat>& lambda, const JetValues& jets, int depth,
                                         int f0_bound = 2);

}  // namespace parahiggs
