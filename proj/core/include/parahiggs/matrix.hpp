#pragma once

#include "parahiggs/rat.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace parahiggs {

using RatVector = std::vector<Rat>;

/// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<const Rat> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Rat> row);

    RatVector operator*(std::span<const Rat> v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

std::size_t rank(const RatMatrix& m);

/// Basis of {v : M v = 0}. Each vector has a 1 in one free column and 0 in
/// the others; count = cols - rank.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// One solution of M x = b (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rat> b);

/// Affine solution set  particular + span(kernel).
struct AffineSolutionSet {
    RatVector particular;
    std::vector<RatVector> kernel;
};

std::optional<AffineSolutionSet> solve_affine(const RatMatrix& m, std::span<const Rat> b);

bool is_zero_vector(std::span<const Rat> v);

}  // namespace parahiggs
