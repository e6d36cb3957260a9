#include "parahiggs/matrix.hpp"

#include "parahiggs/error.hpp"

#include <algorithm>
#include <utility>

namespace parahiggs {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw MathError(Errc::DimensionMismatch, "column length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

void RatMatrix::append_row(std::span<const Rat> row) {
    if (row.size() != cols_) throw MathError(Errc::DimensionMismatch, "row length");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

RatVector RatMatrix::operator*(std::span<const Rat> v) const {
    if (v.size() != cols_) throw MathError(Errc::DimensionMismatch, "matrix-vector product");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rat acc(0);
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rat& x = (*this)(r, c);
            if (!x.is_zero() && !v[c].is_zero()) acc += x * v[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

bool is_zero_vector(std::span<const Rat> v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

namespace {

/// Row echelon form over Z by fraction-free (Bareiss) elimination. Rows are
/// first cleared of denominators; the optional right-hand side rides along
/// as the last column but is never chosen as a pivot.
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
    bool inconsistent = false;
};

Echelon bareiss(const RatMatrix& m, std::span<const Rat> rhs) {
    const bool aug = !rhs.empty();
    const std::size_t n = m.cols();
    const std::size_t width = n + (aug ? 1 : 0);

    Echelon e;
    e.cols = n;
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        if (aug) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[r].raw().get_den_mpz_t());
        std::vector<mpz_class> row(width);
        bool nonzero = false;
        for (std::size_t c = 0; c < width; ++c) {
            const Rat& x = c < n ? m(r, c) : rhs[r];
            if (x.is_zero()) continue;
            row[c] = x.raw().get_num() * (l / x.raw().get_den());
            nonzero = true;
        }
        if (nonzero) e.rows.push_back(std::move(row));
    }

    const std::size_t nrows = e.rows.size();
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < nrows; ++c) {
        std::size_t p = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (sgn(e.rows[i][c]) != 0 && (p == nrows || mpz_cmpabs(e.rows[i][c].get_mpz_t(), e.rows[p][c].get_mpz_t()) < 0)) p = i;
        }
        if (p == nrows) continue;
        std::swap(e.rows[r], e.rows[p]);
        const auto& prow = e.rows[r];
        const mpz_class& piv = prow[c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            auto& row = e.rows[i];
            const mpz_class lead = row[c];
            for (std::size_t j = c + 1; j < width; ++j) {
                // row[j] = (piv * row[j] - lead * prow[j]) / prev, exact by Sylvester's identity
                mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), row[j].get_mpz_t());
                if (sgn(lead) != 0) mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), prow[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    if (aug) {
        for (std::size_t i = r; i < nrows; ++i) {
            if (sgn(e.rows[i][n]) != 0) e.inconsistent = true;
        }
    }
    e.rows.resize(r);
    return e;
}

/// Back substitution: fixes the free variables from `x` and solves for
/// the pivot variables in place.
void back_substitute(const Echelon& e, RatVector& x, bool use_rhs) {
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        const auto& row = e.rows[k];
        mpq_class acc = use_rhs ? mpq_class(row[e.cols]) : mpq_class(0);
        for (std::size_t j = pc + 1; j < e.cols; ++j) {
            if (sgn(row[j]) == 0 || x[j].is_zero()) continue;
            acc -= mpq_class(row[j]) * x[j].raw();
        }
        x[pc] = Rat(mpq_class(acc / mpq_class(row[pc])));
    }
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss(m, {}).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    const Echelon e = bareiss(m, {});
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector x(m.cols());
        x[f] = Rat(1);
        back_substitute(e, x, false);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rat> b) {
    if (b.size() != m.rows()) throw MathError(Errc::DimensionMismatch, "right-hand side length");
    if (is_zero_vector(b)) return RatVector(m.cols());
    const Echelon e = bareiss(m, b);
    if (e.inconsistent) return std::nullopt;
    RatVector x(m.cols());
    back_substitute(e, x, true);
    return x;
}

std::optional<AffineSolutionSet> solve_affine(const RatMatrix& m, std::span<const Rat> b) {
    auto x = solve(m, b);
    if (!x) return std::nullopt;
    return AffineSolutionSet{std::move(*x), kernel_basis(m)};
}

}  // namespace parahiggs
