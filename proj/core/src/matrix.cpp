#include "grassbs/matrix.hpp"

#include <stdexcept>

namespace grassbs {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

QMatrix QMatrix::operator-() const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

bool QMatrix::is_zero() const {
    for (const Rat& v : data_)
        if (v != 0) return false;
    return true;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
    std::vector<Rat> out(static_cast<std::size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) out[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    return out;
}

QMatrix QMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    QMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (int i = 0; i < out.rows_; ++i)
        for (int j = 0; j < out.cols_; ++j)
            out(i, j) = (*this)(row_idx[static_cast<std::size_t>(i)], col_idx[static_cast<std::size_t>(j)]);
    return out;
}

Echelon QMatrix::rref() const {
    Echelon e;
    std::vector<std::vector<Rat>>& m = e.reduced;
    m.assign(static_cast<std::size_t>(rows_), std::vector<Rat>(static_cast<std::size_t>(cols_)));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (*this)(r, c);
    int pivot_row = 0;
    for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows_; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pivot_row) std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(pivot_row)]);
        auto& pivot = m[static_cast<std::size_t>(pivot_row)];
        Rat inv = Rat(1) / pivot[static_cast<std::size_t>(col)];
        for (int c = col; c < cols_; ++c) pivot[static_cast<std::size_t>(c)] *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            Rat factor = row[static_cast<std::size_t>(col)];
            for (int c = col; c < cols_; ++c) row[static_cast<std::size_t>(c)] -= factor * pivot[static_cast<std::size_t>(c)];
        }
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return e;
}

int QMatrix::rank() const {
    return static_cast<int>(rref().pivot_cols.size());
}

std::vector<std::vector<Rat>> QMatrix::nullspace_basis() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols_), Rat(0));
        v[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
            int pc = e.pivot_cols[pr];
            v[static_cast<std::size_t>(pc)] = -e.reduced[pr][static_cast<std::size_t>(free_col)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    QMatrix m = *this;
    Rat det = 1;
    for (int col = 0; col < cols_; ++col) {
        int sel = -1;
        for (int r = col; r < rows_; ++r)
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return 0;
        if (sel != col) {
            for (int c = 0; c < cols_; ++c) std::swap(m(sel, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        Rat inv = Rat(1) / m(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (m(r, col) == 0) continue;
            Rat factor = m(r, col) * inv;
            for (int c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: length mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[static_cast<std::size_t>(r)];
    }
    Echelon e = aug.rref();
    for (int c : e.pivot_cols)
        if (c == cols_) return std::nullopt;  // inconsistent
    std::vector<Rat> x(static_cast<std::size_t>(cols_), Rat(0));
    for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
        x[static_cast<std::size_t>(e.pivot_cols[pr])] = e.reduced[pr][static_cast<std::size_t>(cols_)];
    return x;
}

}  // namespace grassbs
