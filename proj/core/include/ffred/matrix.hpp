#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ffred/errors.hpp"
#include "ffred/ring.hpp"

namespace ffred {

// Dense row-major matrix over an integral domain.  Zero rows or columns are
// legal; several reduction paths produce genuinely empty blocks.
// All indices are zero-based.  Minor "orders" used elsewhere are counts, not
// indices: the corner minor of order k covers rows 0..k-1 and columns 0..k-1.
template <IntegralDomain T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw DimensionMismatch("matrix data size does not match shape");
        }
    }

    // Row-of-rows initializer, for literals in tests and fixtures.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw DimensionMismatch("ragged matrix initializer");
            }
            for (const auto& v : r) {
                data_.push_back(v);
            }
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    T& at(std::size_t i, std::size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) {
            throw IndexError("matrix index (" + std::to_string(i) + "," +
                             std::to_string(j) + ") out of range for " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Copy of the half-open row/column range [r0,r1) x [c0,c1).
template <IntegralDomain T>
Matrix<T> block(const Matrix<T>& a, std::size_t r0, std::size_t r1,
                std::size_t c0, std::size_t c1) {
    if (r1 < r0 || c1 < c0 || r1 > a.rows() || c1 > a.cols()) {
        throw IndexError("block range out of matrix bounds");
    }
    Matrix<T> out(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i) {
        for (std::size_t j = c0; j < c1; ++j) {
            out(i - r0, j - c0) = a(i, j);
        }
    }
    return out;
}

template <IntegralDomain T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) {
        throw DimensionMismatch("hconcat: row counts differ");
    }
    Matrix<T> out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(i, a.cols() + j) = b(i, j);
        }
    }
    return out;
}

template <IntegralDomain T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) {
        throw DimensionMismatch("vconcat: column counts differ");
    }
    Matrix<T> out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(a.rows() + i, j) = b(i, j);
        }
    }
    return out;
}

template <IntegralDomain T>
std::string format(const Matrix<T>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += format(a(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace ffred
