#include "rhoform/matrix.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

ScalarMatrix ScalarMatrix::identity(size_t n) {
    ScalarMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorKind::BadArgument, "matrix shape mismatch");
    ScalarMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorKind::BadArgument, "matrix shape mismatch");
    ScalarMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::BadArgument, "matrix shape mismatch in product");
    ScalarMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
    ScalarMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

namespace {

struct Echelon {
    ScalarMatrix mat;
    std::vector<size_t> pivot_cols;
};

// Row echelon form with pivot normalization; pivots picked as the smallest
// nonzero entry by term count in the current column block.
Echelon echelonize(ScalarMatrix m) {
    Echelon e{std::move(m), {}};
    ScalarMatrix& a = e.mat;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t best = a.rows();
        size_t best_size = 0;
        for (size_t r = row; r < a.rows(); ++r) {
            const Scalar& s = a.at(r, col);
            if (s.is_zero()) continue;
            if (best == a.rows() || s.complexity() < best_size) {
                best = r;
                best_size = s.complexity();
            }
        }
        if (best == a.rows()) continue;
        if (best != row)
            for (size_t c = col; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(best, c));
        Scalar inv = a.at(row, col).inverse();
        for (size_t c = col; c < a.cols(); ++c) a.at(row, c) = a.at(row, c) * inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const Scalar f = a.at(r, col);
            if (f.is_zero()) continue;
            for (size_t c = col; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) - f * a.at(row, c);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

size_t ScalarMatrix::rank() const { return echelonize(*this).pivot_cols.size(); }

std::vector<std::vector<Scalar>> ScalarMatrix::kernel_basis() const {
    Echelon e = echelonize(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero());
        v[free_col] = Scalar::one();
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.mat.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace rhoform
