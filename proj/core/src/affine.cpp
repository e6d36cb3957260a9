#include "parahiggs/affine.hpp"

#include "parahiggs/error.hpp"
#include "straighten.hpp"

#include <algorithm>
#include <sstream>

namespace parahiggs {

char sl2_name(Sl2 a) {
    switch (a) {
        case Sl2::E: return 'e';
        case Sl2::H: return 'h';
        case Sl2::F: return 'f';
    }
    return '?';
}

Rat trace_form(Sl2 a, Sl2 b) {
    if (a == Sl2::H && b == Sl2::H) return Rat(2);
    if ((a == Sl2::E && b == Sl2::F) || (a == Sl2::F && b == Sl2::E)) return Rat(1);
    return Rat(0);
}

std::optional<Sl2Term> sl2_bracket(Sl2 a, Sl2 b) {
    if (a == b) return std::nullopt;
    const auto table = [](Sl2 x, Sl2 y) -> Sl2Term {
        if (x == Sl2::H && y == Sl2::E) return {Rat(2), Sl2::E};
        if (x == Sl2::H && y == Sl2::F) return {Rat(-2), Sl2::F};
        return {Rat(1), Sl2::H};  // [e, f]
    };
    const bool forward = (a == Sl2::H) || (a == Sl2::E && b == Sl2::F);
    Sl2Term t = forward ? table(a, b) : table(b, a);
    if (!forward) t.coeff = -t.coeff;
    return t;
}

std::uint32_t LoopGen::packed() const {
    return (static_cast<std::uint32_t>(copy) << 20) | (static_cast<std::uint32_t>(mode + (1 << 17)) << 2) |
           static_cast<std::uint32_t>(gen);
}

std::string LoopGen::str() const {
    std::string s(1, sl2_name(gen));
    s += "[" + std::to_string(mode) + "]";
    if (copy != 1) s += "^" + std::to_string(copy);
    return s;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += " ";
        s += m[i].str();
    }
    return s;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& x : m) d += x.degree();
    return d;
}

int monomial_degree(const Monomial& m, int copy) {
    int d = 0;
    for (const auto& x : m) {
        if (x.copy == copy) d += x.degree();
    }
    return d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = m.size();
    for (const auto& x : m) h ^= x.packed() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

LoopBracket loop_bracket(const LoopGen& a, const LoopGen& b) {
    LoopBracket out;
    if (a.copy != b.copy) return out;
    if (auto t = sl2_bracket(a.gen, b.gen)) out.term = std::make_pair(t->coeff, LoopGen{a.copy, a.mode + b.mode, t->gen});
    // cocycle Res(Tr(a db)) with a = A t^m, b = B t^n
    if (a.mode + b.mode == 0) out.central = Rat(a.mode) * trace_form(a.gen, b.gen);
    return out;
}

namespace {

struct FreeAlgebra {
    bool creates(const LoopGen&) const { return true; }
    std::optional<Poly> on_vacuum(const LoopGen&) const { return std::nullopt; }
};

detail::Straightener<Poly, FreeAlgebra>& algebra() {
    static detail::Straightener<Poly, FreeAlgebra> s(Poly::x(), FreeAlgebra{});
    return s;
}

}  // namespace

AffineElement AffineElement::scalar(const Poly& c) {
    AffineElement a;
    a.add({}, c);
    return a;
}

AffineElement AffineElement::generator(const LoopGen& x) {
    AffineElement a;
    a.add({x}, Poly(Rat(1)));
    return a;
}

Poly AffineElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Poly() : it->second;
}

void AffineElement::add(const Monomial& m, const Poly& c) { detail::add_term(terms_, m, c); }

AffineElement AffineElement::at_level(const Rat& k) const {
    AffineElement out;
    for (const auto& [m, c] : terms_) out.add(m, Poly(c.eval(k)));
    out.level_ = k;
    return out;
}

int AffineElement::filtration_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

namespace {

std::optional<Rat> merged_level(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (a && b && *a != *b) throw MathError(Errc::LevelMismatch, "levels " + a->str() + " and " + b->str());
    return a ? a : b;
}

}  // namespace

AffineElement& AffineElement::operator+=(const AffineElement& o) {
    level_ = merged_level(level_, o.level_);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

AffineElement& AffineElement::operator-=(const AffineElement& o) {
    level_ = merged_level(level_, o.level_);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

AffineElement operator*(const Rat& s, const AffineElement& a) {
    AffineElement out;
    out.level_ = a.level_;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.add(m, c * s);
    return out;
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    AffineElement out;
    out.level_ = merged_level(a.level_, b.level_);
    auto& s = algebra();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            detail::TermMap<Poly> prod{{mb, cb}};
            for (auto it = ma.rbegin(); it != ma.rend(); ++it) prod = s.act(*it, prod);
            for (const auto& [m, c] : prod) out.add(m, ca * c);
        }
    }
    if (out.level_) out = out.at_level(*out.level_);
    return out;
}

std::string AffineElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str("K") << ")";
        if (!m.empty()) os << " " << monomial_str(m);
    }
    return os.str();
}

AffineElement bracket(const LoopGen& a, const LoopGen& b) {
    const LoopBracket br = loop_bracket(a, b);
    AffineElement out;
    if (br.term) out += br.term->first * AffineElement::generator(br.term->second);
    if (!br.central.is_zero()) out += br.central * AffineElement::central();
    return out;
}

AffineElement pbw_reduce(const std::vector<LoopGen>& word) {
    AffineElement out = AffineElement::scalar(Poly(Rat(1)));
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = AffineElement::generator(*it) * out;
    return out;
}

AffineElement pbw_reduce(const std::vector<LoopGen>& word, const Rat& k) { return pbw_reduce(word).at_level(k); }

}  // namespace parahiggs
