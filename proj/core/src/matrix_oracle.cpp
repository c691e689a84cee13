#include "rhoform/matrix_oracle.hpp"

#include "rhoform/errors.hpp"

namespace rhoform {

ClockShiftOracle::ClockShiftOracle(int n) : n_(n), clock_(static_cast<size_t>(n), static_cast<size_t>(n)), shift_(static_cast<size_t>(n), static_cast<size_t>(n)) {
    if (n < 2) fail(ErrorKind::BadArgument, "clock-shift oracle needs n >= 2");
    for (int i = 0; i < n; ++i) clock_.at(static_cast<size_t>(i), static_cast<size_t>(i)) = Scalar::eps_power(n, i);
    shift_.at(0, static_cast<size_t>(n - 1)) = Scalar::one();
    for (int i = 1; i < n; ++i)
        shift_.at(static_cast<size_t>(i), static_cast<size_t>(i - 1)) = Scalar::eps_power(n, i);
}

ScalarMatrix ClockShiftOracle::model(const Monomial& m) const {
    if (m.size() != 2) fail(ErrorKind::BadArgument, "clock-shift monomials have two exponents");
    ScalarMatrix r = ScalarMatrix::identity(static_cast<size_t>(n_));
    for (long i = 0; i < m[0]; ++i) r = r * clock_;
    for (long i = 0; i < m[1]; ++i) r = r * shift_;
    return r;
}

ScalarMatrix ClockShiftOracle::model(const AlgebraElement& u) const {
    ScalarMatrix r(static_cast<size_t>(n_), static_cast<size_t>(n_));
    for (const auto& [m, c] : u.terms()) r = r + model(m).scaled(c);
    return r;
}

size_t ClockShiftOracle::basis_rank() const {
    size_t dim = static_cast<size_t>(n_) * static_cast<size_t>(n_);
    ScalarMatrix coords(dim, dim);
    size_t row = 0;
    for (long a = 0; a < n_; ++a) {
        for (long b = 0; b < n_; ++b) {
            ScalarMatrix m = model(Monomial{a, b});
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j)
                    coords.at(row, i * m.cols() + j) = m.at(i, j);
            ++row;
        }
    }
    return coords.rank();
}

} // namespace rhoform
