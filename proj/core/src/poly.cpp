#include "parahiggs/poly.hpp"

#include "parahiggs/error.hpp"

#include <ostream>
#include <sstream>

namespace parahiggs {

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const Rat& c, int exponent) {
    if (c.is_zero()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear_power(const Rat& root, int multiplicity) {
    Poly result(Rat(1));
    const Poly lin({-root, Rat(1)});
    for (int i = 0; i < multiplicity; ++i) result *= lin;
    return result;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(exponent)];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Poly Poly::shifted(const Rat& x0) const {
    // Horner in the ring Q[t]: p(x0 + t) = (...(c_n (x0+t) + c_{n-1})(x0+t) + ...)
    const Poly lin({x0, Rat(1)});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += Poly(*it);
    }
    return acc;
}

int Poly::root_multiplicity(const Rat& x0) const {
    if (is_zero()) throw MathError(Errc::ZeroElement, "root multiplicity of zero polynomial");
    const Poly s = shifted(x0);
    int m = 0;
    while (s.c_[static_cast<std::size_t>(m)].is_zero()) ++m;
    return m;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError(Errc::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rat lead_inv = b.leading().inverse();
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rat q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) return false;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

Poly strip_roots(Poly p, const std::vector<Rat>& roots) {
    for (const auto& r : roots) {
        const Poly lin({-r, Rat(1)});
        while (!p.is_zero() && p.eval(r).is_zero()) p = p / lin;
    }
    return p;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rat a = c.abs();
        if (i == 0 || a != Rat(1)) os << a;
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace parahiggs
