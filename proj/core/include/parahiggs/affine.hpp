#pragma once

#include "parahiggs/poly.hpp"
#include "parahiggs/rat.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parahiggs {

/// sl2 basis. The enumerator order is the PBW order inside one mode.
enum class Sl2 : std::uint8_t { F = 0, H = 1, E = 2 };

inline constexpr Sl2 kSl2Basis[] = {Sl2::E, Sl2::H, Sl2::F};

char sl2_name(Sl2 a);
/// Trace form of the defining representation: Tr(e,f) = 1, Tr(h,h) = 2.
Rat trace_form(Sl2 a, Sl2 b);

struct Sl2Term {
    Rat coeff;
    Sl2 gen;
};
/// [a, b] as a multiple of one basis element, or nullopt when it vanishes.
std::optional<Sl2Term> sl2_bracket(Sl2 a, Sl2 b);

/// gen (x) t^mode in copy `copy` (1-based).
struct LoopGen {
    int copy = 1;
    int mode = 0;
    Sl2 gen = Sl2::E;

    static LoopGen e(int mode, int copy = 1) { return {copy, mode, Sl2::E}; }
    static LoopGen h(int mode, int copy = 1) { return {copy, mode, Sl2::H}; }
    static LoopGen f(int mode, int copy = 1) { return {copy, mode, Sl2::F}; }

    /// t-degree lowered by this generator when it acts.
    int degree() const { return -mode; }
    std::uint32_t packed() const;
    std::string str() const;

    friend bool operator==(const LoopGen&, const LoopGen&) = default;
    friend auto operator<=>(const LoopGen&, const LoopGen&) = default;
};

/// PBW-ordered (non-decreasing) product of generators.
using Monomial = std::vector<LoopGen>;

std::string monomial_str(const Monomial& m);
int monomial_degree(const Monomial& m);
int monomial_degree(const Monomial& m, int copy);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// [a, b] = term + central * K.
struct LoopBracket {
    std::optional<std::pair<Rat, LoopGen>> term;
    Rat central;
};
LoopBracket loop_bracket(const LoopGen& a, const LoopGen& b);

/// Element of U(g_N^) in PBW normal form; coefficients are polynomials in
/// the central element K. A level, when set, is the value K takes on the
/// modules the element acts on.
class AffineElement {
public:
    using Terms = std::map<Monomial, Poly>;

    AffineElement() = default;
    static AffineElement scalar(const Poly& c);
    static AffineElement generator(const LoopGen& x);
    static AffineElement central() { return scalar(Poly::x()); }

    const Terms& terms() const { return terms_; }
    const std::optional<Rat>& level() const { return level_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const Monomial& m) const;

    /// K replaced by k; the result remembers k as its level.
    AffineElement at_level(const Rat& k) const;
    /// Longest monomial (the filtration degree, deg X = 1).
    int filtration_degree() const;

    AffineElement& operator+=(const AffineElement& o);
    AffineElement& operator-=(const AffineElement& o);
    friend AffineElement operator+(AffineElement a, const AffineElement& b) { return a += b; }
    friend AffineElement operator-(AffineElement a, const AffineElement& b) { return a -= b; }
    friend AffineElement operator*(const Rat& s, const AffineElement& a);
    /// Product, straightened into normal form.
    friend AffineElement operator*(const AffineElement& a, const AffineElement& b);
    friend bool operator==(const AffineElement&, const AffineElement&) = default;

    std::string str() const;

private:
    void add(const Monomial& m, const Poly& c);

    Terms terms_;
    std::optional<Rat> level_;
};

/// [a, b] with K symbolic.
AffineElement bracket(const LoopGen& a, const LoopGen& b);
/// Normal form of an arbitrary product of generators, K symbolic.
AffineElement pbw_reduce(const std::vector<LoopGen>& word);
/// The same, with K specialised to k.
AffineElement pbw_reduce(const std::vector<LoopGen>& word, const Rat& k);

}  // namespace parahiggs
