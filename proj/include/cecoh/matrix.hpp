#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cecoh/errors.hpp"
#include "cecoh/rational.hpp"

namespace cecoh {

/// Dense matrix over the rationals. All reductions use exact arithmetic with
/// leftmost-column pivoting, so echelon bases are reproducible across runs.
class QMatrix {
public:
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int r, int c) const { return a_[index(r, c)]; }
    Rational& at(int r, int c) { return a_[index(r, c)]; }

    std::vector<Rational> row(int r) const;
    std::vector<Rational> col(int c) const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    QMatrix operator-(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const = default;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref();
    int rank() const;

    /// Canonical (echelonized) basis of {x : Mx = 0}, one row per basis vector.
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// One solution of Mx = b, or nullopt when inconsistent. Free variables
    /// of the row-reduced system are set to zero, so the solution is the
    /// minimal-support one and deterministic.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    std::string str() const;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Factorization of a fixed matrix for repeated exact solves: the row
/// transform of the reduced echelon form is recorded once, so each solve is
/// a matrix-vector product instead of a fresh elimination. Solutions use the
/// same free-variables-zero convention as QMatrix::solve.
class PrefactoredSolver {
public:
    explicit PrefactoredSolver(const QMatrix& m);

    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    int cols_ = 0;
    std::vector<int> solution_pivots_;   // pivot column per solution row
    std::vector<int> consistency_rows_;  // rows that must transform to zero
    QMatrix transform_{0, 0};
};

/// Subspace of Q^n maintained as reduced row echelon rows with increasing
/// pivot columns. Insertion order does not matter: the stored rows are the
/// unique RREF basis of the span.
class RowSpace {
public:
    explicit RowSpace(int cols);

    int cols() const { return cols_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Returns true when the vector enlarged the span.
    bool insert(std::vector<Rational> v);
    /// Residual of v after elimination against the span (zero iff contained).
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    bool contains(const std::vector<Rational>& v) const;

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
    std::vector<int> pivots_;
};

bool is_zero_vec(const std::vector<Rational>& v);

}  // namespace cecoh
