#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "minmod/errors.hpp"

namespace minmod {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense complex matrix, row-major storage.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw Error(ErrorCode::InvalidInput, "matrix dimensions must be positive");
    }

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw Error(ErrorCode::InvalidInput, "matrix dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw Error(ErrorCode::DimensionMismatch, "entry count does not match dimensions");
    }

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix zero(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }
    static DenseMatrix diagonal(const std::vector<double>& values);
    static DenseMatrix from_real(std::size_t rows, std::size_t cols, const std::vector<double>& values);
    static DenseMatrix column(const CVector& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    bool is_finite() const;
    bool is_square() const { return rows_ == cols_; }

    DenseMatrix adjoint() const;

    CVector col(std::size_t j) const;
    CVector row(std::size_t i) const;
    void set_col(std::size_t j, const CVector& v);

    // Principal submatrix on the given (strictly increasing) index set.
    DenseMatrix submatrix(const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) const;

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix operator+(const DenseMatrix& rhs) const;
    DenseMatrix operator-(const DenseMatrix& rhs) const;
    DenseMatrix operator*(Complex s) const;

    CVector apply(const CVector& x) const;

    double frobenius_norm() const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

// Scaled Euclidean norm; exact for vectors with a single nonzero component.
double vec_norm(const CVector& v);
// Inner product conj(x)·y.
Complex vec_dot(const CVector& x, const CVector& y);
CVector vec_sub(const CVector& x, const CVector& y);
CVector vec_scale(const CVector& x, Complex s);

} // namespace minmod
