#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pimenov/scalar.hpp"

namespace pimenov {

/// Dense row-major matrix of exact scalars.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivot_columns[i] is the pivot of row i, and rows
/// at or beyond rank() are zero.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_reduce(Matrix m);

/// Full solution set of A x = b.
struct LinearSolution {
    /// Free variables set to zero.
    std::vector<Scalar> particular;
    /// Null-space basis of A in reduced echelon form.
    std::vector<std::vector<Scalar>> kernel;
    std::size_t rank = 0;
};

/// nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace pimenov
