#include "minmod/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace minmod {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::EmptySubspace: return "EmptySubspace";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::DuplicateValue: return "DuplicateValue";
        case ErrorCode::NonMonotoneTail: return "NonMonotoneTail";
        case ErrorCode::NegativeValueInPositiveMode: return "NegativeValueInPositiveMode";
        case ErrorCode::NotBoundedlyInvertible: return "NotBoundedlyInvertible";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ContractionRequired: return "ContractionRequired";
        case ErrorCode::NotReducing: return "NotReducing";
        case ErrorCode::StaleCertificate: return "StaleCertificate";
        case ErrorCode::PositivityRequired: return "PositivityRequired";
        case ErrorCode::UnvalidatedSpec: return "UnvalidatedSpec";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::DegenerateBoundary: return "DegenerateBoundary";
        case ErrorCode::KTooLarge: return "KTooLarge";
    }
    return "UnknownError";
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& values) {
    DenseMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = Complex{values[i], 0.0};
    return m;
}

DenseMatrix DenseMatrix::from_real(std::size_t rows, std::size_t cols,
                                   const std::vector<double>& values) {
    if (values.size() != rows * cols)
        throw Error(ErrorCode::DimensionMismatch, "value count does not match dimensions");
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i] = Complex{values[i], 0.0};
    return m;
}

DenseMatrix DenseMatrix::column(const CVector& v) {
    DenseMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool DenseMatrix::is_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CVector DenseMatrix::col(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

CVector DenseMatrix::row(std::size_t i) const {
    CVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void DenseMatrix::set_col(std::size_t j, const CVector& v) {
    if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

DenseMatrix DenseMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                   const std::vector<std::size_t>& col_idx) const {
    DenseMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

DenseMatrix DenseMatrix::operator*(Complex s) const {
    DenseMatrix out = *this;
    for (Complex& z : out.entries_) z *= s;
    return out;
}

CVector DenseMatrix::apply(const CVector& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
    CVector y(rows_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc{0.0, 0.0};
        const Complex* row = entries_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

double DenseMatrix::frobenius_norm() const {
    double amax = max_abs();
    if (amax == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex& z : entries_) {
        const double re = z.real() / amax, im = z.imag() / amax;
        sum += re * re + im * im;
    }
    return amax * std::sqrt(sum);
}

double DenseMatrix::max_abs() const {
    double amax = 0.0;
    for (const Complex& z : entries_)
        amax = std::max({amax, std::abs(z.real()), std::abs(z.imag())});
    return amax;
}

double vec_norm(const CVector& v) {
    double amax = 0.0;
    for (const Complex& z : v) amax = std::max({amax, std::abs(z.real()), std::abs(z.imag())});
    if (amax == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex& z : v) {
        const double re = z.real() / amax, im = z.imag() / amax;
        sum += re * re + im * im;
    }
    return amax * std::sqrt(sum);
}

Complex vec_dot(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

CVector vec_sub(const CVector& x, const CVector& y) {
    CVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

CVector vec_scale(const CVector& x, Complex s) {
    CVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * s;
    return out;
}

} // namespace minmod
