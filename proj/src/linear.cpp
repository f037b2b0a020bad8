#include "pimenov/linear.hpp"

#include "pimenov/errors.hpp"

namespace pimenov {

Matrix Matrix::identity(std::size_t size) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) {
        throw DimensionError("vector length does not match matrix columns");
    }
    std::vector<Scalar> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& entry = (*this)(r, c);
            if (!entry.is_zero() && !x[c].is_zero()) y[r] += entry * x[c];
        }
    }
    return y;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t row = 0;
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }

        Scalar inv = m(row, col).inverse();
        support.clear();
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (m(row, c).is_zero()) continue;
            m(row, c) *= inv;
            support.push_back(c);
        }
        // The operator matrices are sparse; only touch the pivot row's support.
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar factor = m(r, col);
            for (std::size_t c : support) m(r, c) -= factor * m(row, c);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) {
        throw DimensionError("right-hand side length does not match matrix rows");
    }
    const std::size_t n = a.cols();
    Matrix augmented(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
        augmented(r, n) = b[r];
    }
    RowEchelon ech = row_reduce(std::move(augmented));
    if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == n) return std::nullopt;

    LinearSolution sol;
    sol.rank = ech.rank();
    sol.particular.assign(n, Scalar());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        sol.particular[ech.pivot_columns[i]] = ech.reduced(i, n);
        is_pivot[ech.pivot_columns[i]] = true;
    }
    // One basis vector per free column; each has a 1 in its own free column and
    // zeros in the others, which is already reduced echelon form over the free
    // columns. Re-reduce so the pivots are the leading entries.
    Matrix basis(n - ech.rank(), n);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(k, f) = 1;
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            const Scalar& entry = ech.reduced(i, f);
            if (!entry.is_zero()) basis(k, ech.pivot_columns[i]) = -entry;
        }
        ++k;
    }
    RowEchelon reduced_basis = row_reduce(std::move(basis));
    for (std::size_t i = 0; i < reduced_basis.rank(); ++i) {
        std::vector<Scalar> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = reduced_basis.reduced(i, c);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace pimenov
