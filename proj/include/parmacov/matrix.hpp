#pragma once

#include <cstddef>
#include <vector>

namespace parmacov {

/// Dense row-major matrix of doubles with 0-based indices.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}

    static Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<double>& data() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Largest absolute entry.
double max_abs(const Matrix& a);

/// Maximum absolute row sum.
double inf_norm(const Matrix& a);

/// Spectral radius estimated by repeated squaring with norm renormalization.
/// Stops when the estimate changes by less than 1e-12 between squarings,
/// capped at 200 squarings; `converged`, when non-null, reports whether the
/// cap was hit.
double spectral_radius(Matrix a, bool* converged = nullptr);

/// Solves a*x = b by Gaussian elimination with partial pivoting. Throws
/// SingularSystem when a pivot falls below 1e-12 times the largest entry
/// of `a`.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

} // namespace parmacov
