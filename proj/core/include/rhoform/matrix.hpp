#pragma once

#include <vector>

#include "rhoform/scalar.hpp"

namespace rhoform {

/// Dense matrix over Q(eps_n)(q) with exact Gaussian elimination. Small and
/// boring on purpose: every rank below is bit-exact.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero()) {}

    static ScalarMatrix identity(size_t n);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix scaled(const Scalar& c) const;

    bool operator==(const ScalarMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    /// Exact rank by Gaussian elimination; pivots chosen by minimal term
    /// count to keep intermediate entries small.
    size_t rank() const;

    /// Basis of the right kernel {v : A v = 0}, each vector of length cols().
    std::vector<std::vector<Scalar>> kernel_basis() const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

} // namespace rhoform
