#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace parahiggs {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality is structural.
class Rat {
public:
    Rat() = default;

    template <std::signed_integral I>
    Rat(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral I>
    Rat(I n) : q_(static_cast<unsigned long>(n)) {}  // NOLINT(google-explicit-constructor)

    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(mpq_class q);

    /// Accepts "a", "-a" and "a/b".
    static Rat parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return Rat(::abs(q_)); }
    Rat inverse() const;
    Rat pow(unsigned e) const;

    std::string str() const { return q_.get_str(); }
    std::size_t hash() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

struct RatHash {
    std::size_t operator()(const Rat& r) const { return r.hash(); }
};

}  // namespace parahiggs
