#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"
#include "parallel.hpp"

namespace qwspectra {

// Dense row-major matrix over an exact or floating scalar.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionError("matrix product shape mismatch: " + a.shape_str() + " * " + b.shape_str());
        Matrix out(a.rows_, b.cols_);
        parallel_chunks(a.rows_, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t k = 0; k < a.cols_; ++k) {
                    const T& aik = a(i, k);
                    if (scalar_is_zero(aik))
                        continue;
                    for (std::size_t j = 0; j < b.cols_; ++j) {
                        const T& bkj = b(k, j);
                        if (!scalar_is_zero(bkj))
                            out(i, j) += aik * bkj;
                    }
                }
        });
        return out;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix out(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k)
            out.data_[k] = s * m.data_[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix conj_transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = conjugate((*this)(i, j));
        return out;
    }

    T trace() const {
        if (!is_square())
            throw DimensionError("trace of non-square matrix " + shape_str());
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    // Small nonnegative powers only; e = 0 gives the identity.
    Matrix pow(unsigned e) const {
        if (!is_square())
            throw DimensionError("power of non-square matrix " + shape_str());
        Matrix acc = identity(rows_);
        for (unsigned k = 0; k < e; ++k)
            acc = acc * (*this);
        return acc;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("matrix ") + op + " shape mismatch: " +
                                 shape_str() + " vs " + o.shape_str());
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using FloatMatrix = Matrix<std::complex<double>>;

template <class T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix<T> out(r, c);
    std::size_t i0 = 0, j0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i0 + i, j0 + j) = b(i, j);
        i0 += b.rows();
        j0 += b.cols();
    }
    return out;
}

inline FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = to_complex(m(i, j));
    return out;
}

inline bool is_real(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real())
                return false;
    return true;
}

// First entry where a and b differ, if any. Shapes must already match.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>>
first_difference(const Matrix<T>& a, const Matrix<T>& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j)))
                return std::make_pair(i, j);
    return std::nullopt;
}

} // namespace qwspectra
