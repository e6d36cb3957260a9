#include "parahiggs/laurent.hpp"

#include "parahiggs/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace parahiggs {

LaurentSeries LaurentSeries::zero(int precision) {
    LaurentSeries s;
    s.val_ = precision;
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int precision) {
    LaurentSeries s;
    s.val_ = 0;
    const int n = std::max(precision, 0);
    s.c_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.c_[static_cast<std::size_t>(i)] = p.coeff(i);
    if (precision < 0) s.val_ = precision;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(int valuation, std::vector<Rat> coeffs) {
    LaurentSeries s;
    s.val_ = valuation;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::monomial(const Rat& c, int exponent, int precision) {
    if (precision <= exponent || c.is_zero()) return zero(precision);
    std::vector<Rat> v(static_cast<std::size_t>(precision - exponent));
    v[0] = c;
    return from_coeffs(exponent, std::move(v));
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
    }
}

Rat LaurentSeries::leading() const {
    if (is_zero()) throw MathError(Errc::PrecisionExhausted, "series is zero to its precision");
    return c_.front();
}

Rat LaurentSeries::coeff(int n) const {
    if (n >= precision()) {
        throw MathError(Errc::PrecisionExhausted,
                        "coefficient t^" + std::to_string(n) + " beyond precision " + std::to_string(precision()));
    }
    if (n < val_) return Rat(0);
    return c_[static_cast<std::size_t>(n - val_)];
}

LaurentSeries LaurentSeries::truncated(int prec) const {
    if (prec >= precision()) return *this;
    if (prec <= val_) return zero(prec);
    LaurentSeries s;
    s.val_ = val_;
    s.c_.assign(c_.begin(), c_.begin() + (prec - val_));
    s.normalize();
    return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    const int prec = std::min(precision(), o.precision());
    const int lo = std::min(val_, o.val_);
    if (prec <= lo) return *this = zero(prec);
    std::vector<Rat> v(static_cast<std::size_t>(prec - lo));
    for (int n = lo; n < prec; ++n) {
        Rat& slot = v[static_cast<std::size_t>(n - lo)];
        if (n >= val_) slot += c_[static_cast<std::size_t>(n - val_)];
        if (n >= o.val_) slot += o.c_[static_cast<std::size_t>(n - o.val_)];
    }
    return *this = from_coeffs(lo, std::move(v));
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const Rat& s) {
    if (s.is_zero()) return *this = zero(precision());
    for (auto& c : c_) c *= s;
    return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // A zero factor O(t^p) times a series of valuation v is O(t^{p+v}).
    if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(a.precision() + b.precision());
    if (a.is_zero()) return LaurentSeries::zero(a.precision() + b.val_);
    if (b.is_zero()) return LaurentSeries::zero(b.precision() + a.val_);
    const std::size_t rel = std::min(a.c_.size(), b.c_.size());
    std::vector<Rat> v(rel);
    for (std::size_t i = 0; i < rel; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < rel; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries::from_coeffs(a.val_ + b.val_, std::move(v));
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero()) throw MathError(Errc::PrecisionExhausted, "inverse of a series that is zero to its precision");
    const std::size_t n = c_.size();
    std::vector<Rat> r(n);
    const Rat lead_inv = c_[0].inverse();
    r[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
        Rat acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!c_[j].is_zero()) acc += c_[j] * r[k - j];
        }
        r[k] = -acc * lead_inv;
    }
    return from_coeffs(-val_, std::move(r));
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries s = *this;
    s.val_ += k;
    return s;
}

LaurentSeries series_sqrt(const LaurentSeries& s, const Rat& branch) {
    if (branch.is_zero()) throw MathError(Errc::LeadingNotSquareOfBranch, "branch must be nonzero");
    if (s.is_zero()) throw MathError(Errc::LeadingNotSquareOfBranch, "series is zero to its precision");
    if (s.valuation() % 2 != 0) throw MathError(Errc::OddValuation, "valuation " + std::to_string(s.valuation()));
    if (s.leading() != branch * branch) {
        throw MathError(Errc::LeadingNotSquareOfBranch,
                        "leading coefficient " + s.leading().str() + " is not " + branch.str() + "^2");
    }
    // r_0 = b,  r_k = (s_k - sum_{j=1}^{k-1} r_j r_{k-j}) / (2 b)
    const int n = s.relative_precision();
    const int v = s.valuation();
    std::vector<Rat> r(static_cast<std::size_t>(n));
    r[0] = branch;
    const Rat half_inv = (Rat(2) * branch).inverse();
    for (int k = 1; k < n; ++k) {
        Rat acc = s.coeff(v + k);
        for (int j = 1; j < k; ++j) acc -= r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = acc * half_inv;
    }
    return LaurentSeries::from_coeffs(v / 2, std::move(r));
}

std::string LaurentSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const int e = val_ + static_cast<int>(i);
        if (!first) os << " + ";
        os << c_[i];
        if (e != 0) os << "*" << var << "^" << e;
        first = false;
    }
    if (!first) os << " + ";
    os << "O(" << var << "^" << precision() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.str(); }

}  // namespace parahiggs
