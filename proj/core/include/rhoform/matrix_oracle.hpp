#pragma once

#include "rhoform/element.hpp"
#include "rhoform/matrix.hpp"

namespace rhoform {

/// Concrete n x n matrix model of the clock-shift presentation over Q(eps_n):
/// p = diag(1, eps, ..., eps^{n-1}) and the shift matrix with entries
/// g2[0][n-1] = 1, g2[i][i-1] = eps^i. Basis monomials map to p^a g2^b, so
/// multiplying models must agree with the abstract product. This is the
/// independent brute-force check that pins the cocycle sign.
class ClockShiftOracle {
public:
    explicit ClockShiftOracle(int n);

    int n() const noexcept { return n_; }
    const ScalarMatrix& clock() const noexcept { return clock_; }
    const ScalarMatrix& shift() const noexcept { return shift_; }

    ScalarMatrix model(const Monomial& m) const;
    ScalarMatrix model(const AlgebraElement& u) const;

    /// Rank of the n^2 x n^2 coordinate matrix of all basis monomials;
    /// n^2 exactly when they span M_n.
    size_t basis_rank() const;

private:
    int n_;
    ScalarMatrix clock_;
    ScalarMatrix shift_;
};

} // namespace rhoform
