#pragma once

#include "rhoform/form.hpp"
#include "rhoform/matrix.hpp"

namespace rhoform {

/// The grade-alpha slice of the de Rham complex of Omega*(A, phi): canonically
/// ordered bases of the (i, alpha) components for i = 0..max_degree+1 and the
/// exact matrices of d between consecutive components. d^2 = 0 is asserted
/// at assembly.
class ComplexSlice {
public:
    ComplexSlice(PresentationPtr pres, GradedUnitHom phi, Grade alpha, int max_degree);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const Grade& grade() const noexcept { return alpha_; }
    int max_degree() const noexcept { return max_degree_; }

    const std::vector<FormTensor>& basis(int i) const { return bases_[static_cast<size_t>(i)]; }
    /// Matrix of d: Omega^i_alpha -> Omega^{i+1}_alpha (rows index the target
    /// basis), for i = 0..max_degree.
    const ScalarMatrix& differential_matrix(int i) const {
        return matrices_[static_cast<size_t>(i)];
    }

    long dimension(int i) const { return static_cast<long>(basis(i).size()); }
    std::vector<long> dimensions() const;

    /// Betti numbers b_0..b_max_degree: dim ker(d_i) - rank(d_{i-1}), exact.
    std::vector<long> betti() const;

private:
    PresentationPtr pres_;
    GradedUnitHom phi_;
    Grade alpha_;
    int max_degree_;
    std::vector<std::vector<FormTensor>> bases_;   // 0..max_degree+1
    std::vector<ScalarMatrix> matrices_;           // d_i for i = 0..max_degree
};

/// Canonically ordered basis of the (degree, alpha) component of Omega*(A).
std::vector<FormTensor> component_basis(const PresentationPtr& pres, const GradedUnitHom& phi,
                                        long degree, const Grade& alpha);

struct BettiResult {
    std::vector<long> betti;
    std::vector<long> dims;
};

BettiResult betti_numbers(const PresentationPtr& pres, const GradedUnitHom& phi,
                          const Grade& alpha, int max_degree);

} // namespace rhoform
