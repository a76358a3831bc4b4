#pragma once

// Sparse arbitrary-precision integer matrices and Smith normal form.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

namespace acyc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Column-major sparse storage; zero entries are never stored.
class IntegerMatrix {
public:
    using Column = std::map<std::size_t, Integer>;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_.size(); }

    Integer at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Integer& value);
    void add(std::size_t r, std::size_t c, const Integer& value);

    const Column& column(std::size_t c) const { return cols_.at(c); }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    IntegerMatrix transpose() const;
    std::vector<std::vector<Integer>> dense() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<Column> cols_;
};

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, with
/// successive divisibility d1 | d2 | ... .
struct SmithNormalForm {
    IntegerMatrix d;
    IntegerMatrix u;
    IntegerMatrix v;

    /// Nonzero diagonal entries in order.
    std::vector<Integer> invariant_factors() const;
    std::size_t rank() const { return invariant_factors().size(); }
};

/// Dense elimination with smallest-magnitude pivots; tracks U and V.
SmithNormalForm smith_normal_form(const IntegerMatrix& a);

/// Nonzero invariant factors only (no change-of-basis), via sparse
/// elimination.  Suited to large boundary matrices.
std::vector<Integer> invariant_factors(const IntegerMatrix& a);

/// Rearranges positive diagonal entries into invariant-factor form by
/// repeated (gcd, lcm) exchanges.
std::vector<Integer> normalize_diagonal(std::vector<Integer> entries);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& a);

using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rational_rank(RationalMatrix m);

}  // namespace acyc
