#pragma once

#include <optional>
#include <vector>

#include "grassbs/rational.hpp"

namespace grassbs {

class QMatrix;

struct Echelon {
    // Defined after QMatrix; holds the RREF and its pivot columns.
    std::vector<int> pivot_cols;  // ascending
    std::vector<std::vector<Rat>> reduced;
};

/// Dense exact-rational matrix. Row reduction uses the first nonzero pivot in
/// each column (no magnitude pivoting), so every derived object — pivot
/// columns, nullspace basis, solutions — is deterministic.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return data_[index(r, c)]; }
    const Rat& operator()(int r, int c) const { return data_[index(r, c)]; }

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-() const;
    bool operator==(const QMatrix&) const = default;

    bool is_zero() const;
    std::vector<Rat> apply(const std::vector<Rat>& x) const;  // A * x

    QMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    Echelon rref() const;
    int rank() const;

    // Nullspace basis from the RREF parametrization: one vector per free
    // column, with entry 1 at the free column. Deterministic.
    std::vector<std::vector<Rat>> nullspace_basis() const;

    Rat determinant() const;  // square only

    // Solve A x = b exactly; nullopt if inconsistent. Free variables are 0.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

}  // namespace grassbs
