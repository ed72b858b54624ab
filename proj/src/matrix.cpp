#include "cecoh/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cecoh {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0)) {
    if (rows < 0 || cols < 0)
        throw ValidationError("negative matrix size");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw ValidationError("ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

std::vector<Rational> QMatrix::row(int r) const {
    std::vector<Rational> out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j)
        out[static_cast<std::size_t>(j)] = at(r, j);
    return out;
}

std::vector<Rational> QMatrix::col(int c) const {
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        out[static_cast<std::size_t>(i)] = at(i, c);
    return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (sgn(at(i, j)) != 0)
                out[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
        throw DimensionMismatch("matrix subtraction size mismatch");
    QMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] - o.a_[i];
    return m;
}

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int prow = 0;
    for (int c = 0; c < cols_ && prow < rows_; ++c) {
        int sel = -1;
        for (int r = prow; r < rows_; ++r) {
            if (sgn(at(r, c)) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0)
            continue;
        if (sel != prow)
            for (int j = 0; j < cols_; ++j)
                std::swap(at(sel, j), at(prow, j));
        Rational inv = at(prow, c);
        for (int j = c; j < cols_; ++j)
            at(prow, j) /= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == prow || sgn(at(r, c)) == 0)
                continue;
            Rational f = at(r, c);
            for (int j = c; j < cols_; ++j)
                at(r, j) -= f * at(prow, j);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    QMatrix red = *this;
    std::vector<int> pivots = red.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    RowSpace canon(cols_);
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -red.at(static_cast<int>(r), f);
        canon.insert(std::move(v));
    }
    return canon.rows();
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw DimensionMismatch("solve: right-hand side size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;  // inconsistent
    std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), cols_);
    return x;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            out << (j ? " " : "") << at(i, j).get_str();
        out << "\n";
    }
    return out.str();
}

PrefactoredSolver::PrefactoredSolver(const QMatrix& m) : cols_(m.cols()) {
    QMatrix aug(m.rows(), m.cols() + m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols() + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    transform_ = QMatrix(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            transform_.at(i, j) = aug.at(i, m.cols() + j);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < cols_)
            solution_pivots_.push_back(pivots[r]);
        else
            consistency_rows_.push_back(static_cast<int>(r));
    }
    for (int r = static_cast<int>(pivots.size()); r < m.rows(); ++r)
        consistency_rows_.push_back(r);
}

std::optional<std::vector<Rational>> PrefactoredSolver::solve(
    const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != transform_.rows())
        throw DimensionMismatch("solve: right-hand side size mismatch");
    std::vector<Rational> y = transform_.apply(b);
    for (int r : consistency_rows_)
        if (sgn(y[static_cast<std::size_t>(r)]) != 0)
            return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
    for (std::size_t r = 0; r < solution_pivots_.size(); ++r)
        x[static_cast<std::size_t>(solution_pivots_[r])] = y[r];
    return x;
}

RowSpace::RowSpace(int cols) : cols_(cols) {
    if (cols < 0)
        throw ValidationError("negative column count");
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionMismatch("row space reduce size mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[static_cast<std::size_t>(pivots_[r])];
        if (sgn(c) == 0)
            continue;
        Rational f = c;  // rows are pivot-normalized to 1
        const auto& row = rows_[r];
        for (int j = pivots_[r]; j < cols_; ++j)
            if (sgn(row[static_cast<std::size_t>(j)]) != 0)
                v[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
    }
    return v;
}

bool RowSpace::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < cols_; ++j) {
        if (sgn(v[static_cast<std::size_t>(j)]) != 0) {
            lead = j;
            break;
        }
    }
    if (lead < 0)
        return false;
    Rational inv = v[static_cast<std::size_t>(lead)];
    for (int j = lead; j < cols_; ++j)
        v[static_cast<std::size_t>(j)] /= inv;
    // back-eliminate the new pivot column from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][static_cast<std::size_t>(lead)];
        if (sgn(f) == 0)
            continue;
        for (int j = lead; j < cols_; ++j)
            rows_[r][static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    return true;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
    return is_zero_vec(reduce(v));
}

bool is_zero_vec(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (sgn(c) != 0)
            return false;
    return true;
}

}  // namespace cecoh
