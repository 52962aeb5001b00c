#ifndef QFACTOR_MATRIX_HPP
#define QFACTOR_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qfactor/scalar.hpp"

namespace qfactor {

// Dense matrix over one exact field. All entries share the field descriptor;
// 0xN and Nx0 shapes are legal.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Field field)
        : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, field_zero(field)) {}

    static Matrix identity(std::size_t n, Field field) {
        Matrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field_one(field);
        return m;
    }

    static Matrix from_rows(std::vector<std::vector<Scalar>> rows, Field field) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols, field);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("ragged rows in matrix literal");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // Exact rank. Over Q the matrix is scaled row-wise to integers and reduced
    // with fraction-free (Bareiss) elimination, so every intermediate value is
    // an integer; over F_p plain elimination. Pivots are the first nonzero
    // entry in column order, which keeps certificates reproducible.
    std::size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        if (field_.is_prime_field()) return rank_fp();
        return rank_bareiss();
    }

    // Basis of the right null space, each vector scaled so its first nonzero
    // entry is 1. Size is always cols() - rank().
    std::vector<std::vector<Scalar>> kernel_basis() const {
        Echelon e = reduced_echelon(*this);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : e.pivot_cols) is_pivot[c] = true;

        std::vector<std::vector<Scalar>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Scalar> v(cols_, field_zero(field_));
            v[f] = field_one(field_);
            for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
                v[e.pivot_cols[i]] = -e.m.at(i, f);
            normalize_first_nonzero(v);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One exact solution of M x = target (free variables set to zero), or
    // nullopt when the system is inconsistent.
    std::optional<std::vector<Scalar>> solve_affine(const std::vector<Scalar>& target) const {
        if (target.size() != rows_) throw DimensionError("solve_affine: target length != rows");
        Matrix aug(rows_, cols_ + 1, field_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = target[i];
        }
        Echelon e = reduced_echelon(aug);
        for (auto c : e.pivot_cols)
            if (c == cols_) return std::nullopt;
        std::vector<Scalar> x(cols_, field_zero(field_));
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            x[e.pivot_cols[i]] = e.m.at(i, cols_);
        return x;
    }

    // v must have cols() entries; returns M v.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_) throw DimensionError("apply: vector length != cols");
        std::vector<Scalar> out(rows_, field_zero(field_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

private:
    struct Echelon {
        Matrix m;
        std::vector<std::size_t> pivot_cols;
    };

    // Row-reduced echelon form via exact field arithmetic. Pivot: first row
    // with a nonzero entry in the current column.
    static Echelon reduced_echelon(Matrix m) {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
            std::size_t p = row;
            while (p < m.rows_ && m.at(p, col).is_zero()) ++p;
            if (p == m.rows_) continue;
            if (p != row)
                for (std::size_t j = 0; j < m.cols_; ++j)
                    std::swap(m.at(p, j), m.at(row, j));
            Scalar inv = m.at(row, col).inverse();
            for (std::size_t j = col; j < m.cols_; ++j) m.at(row, j) *= inv;
            for (std::size_t i = 0; i < m.rows_; ++i) {
                if (i == row || m.at(i, col).is_zero()) continue;
                Scalar factor = m.at(i, col);
                for (std::size_t j = col; j < m.cols_; ++j)
                    m.at(i, j) -= factor * m.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return {std::move(m), std::move(pivots)};
    }

    std::size_t rank_fp() const {
        const std::uint64_t p = field_.modulus();
        std::vector<std::vector<std::uint64_t>> a(rows_, std::vector<std::uint64_t>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j).residue();

        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && a[piv][col] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(a[piv], a[rank]);
            std::uint64_t inv = Scalar::fp(field_.modulus(), static_cast<long long>(a[rank][col]))
                                    .inverse()
                                    .residue();
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                if (a[i][col] == 0) continue;
                std::uint64_t f = a[i][col] * inv % p;
                for (std::size_t j = col; j < cols_; ++j)
                    a[i][j] = (a[i][j] + (p - f) * a[rank][j] % p) % p;
            }
            ++rank;
        }
        return rank;
    }

    std::size_t rank_bareiss() const {
        // Clear denominators per row; rank is invariant under row scaling.
        std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            mpz_class lcm = 1;
            for (std::size_t j = 0; j < cols_; ++j)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                        at(i, j).rational().get_den().get_mpz_t());
            for (std::size_t j = 0; j < cols_; ++j) {
                const mpq_class& q = at(i, j).rational();
                a[i][j] = q.get_num() * (lcm / q.get_den());
            }
        }

        mpz_class prev = 1;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && a[piv][col] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(a[piv], a[rank]);
            const mpz_class pivot = a[rank][col];
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                for (std::size_t j = col + 1; j < cols_; ++j) {
                    a[i][j] = a[i][j] * pivot - a[i][col] * a[rank][j];
                    mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                a[i][col] = 0;
            }
            prev = pivot;
            ++rank;
        }
        return rank;
    }

    static void normalize_first_nonzero(std::vector<Scalar>& v) {
        for (const Scalar& s : v) {
            if (!s.is_zero()) {
                Scalar inv = s.inverse();
                for (Scalar& t : v) t *= inv;
                return;
            }
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

}  // namespace qfactor

#endif
