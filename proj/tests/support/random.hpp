#pragma once

#include <parahiggs/matrix.hpp>
#include <parahiggs/poly.hpp>

#include <cstdint>
#include <random>

namespace parahiggs::testing {

/// Deterministic generator; draws do not depend on std distributions so the
/// sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long between(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(gen_() % span);
    }

    Rat small_rat(long h = 5) {
        const long den = between(1, 3);
        return Rat(between(-h, h), den);
    }

    Poly poly(int max_degree, long h = 5) {
        std::vector<Rat> c(static_cast<std::size_t>(between(0, max_degree)) + 1);
        for (auto& x : c) x = small_rat(h);
        return Poly(std::move(c));
    }

    RatMatrix matrix(std::size_t rows, std::size_t cols, long h = 3, int zero_bias = 2) {
        RatMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (between(0, zero_bias) == 0) continue;
                m(r, c) = small_rat(h);
            }
        }
        return m;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace parahiggs::testing
