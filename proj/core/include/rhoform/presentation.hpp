#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rhoform/grading.hpp"

namespace rhoform {

/// Normal-form monomial: exponent vector over the presentation's generators,
/// x_1^{a_1} ... x_g^{a_g} in ascending generator order.
using Monomial = std::vector<long>;

struct GeneratorInfo {
    std::string name;
    Grade grade;
    /// 0 for a free exponent (monoid N), n >= 2 for Z_n exponents.
    int exponent_order = 0;
    /// Scalar value of x^n when the exponent wraps (1 for free generators).
    Scalar power_wrap = Scalar::one();
};

/// A rho-commutative algebra presented as a twisted monoid algebra: monomials
/// form the basis, and the product is determined by pairwise swap factors
/// x_i x_j = swap[i][j] * x_j x_i (i > j) plus per-generator wrap scalars
/// x_i^{n_i} = w_i. Covers the quantum hyperplane S_N^q, the clock-shift
/// presentation of M_n, group algebras of cyclic groups, and user-defined
/// data validated against the factor-set laws.
class AlgebraPresentation : public std::enable_shared_from_this<AlgebraPresentation> {
public:
    static std::shared_ptr<const AlgebraPresentation> make(std::string name, Cocycle rho,
                                                           std::vector<GeneratorInfo> generators,
                                                           std::vector<std::vector<Scalar>> swap);

    /// S_N^q: x_i x_j = q x_j x_i for i < j, graded by Z^N.
    static std::shared_ptr<const AlgebraPresentation> quantum_plane(int dimension);
    /// Clock-shift presentation of M_n: generators p ("clock") and g2
    /// ("shift", the phased cyclic permutation), p g2 = eps g2 p, graded by
    /// Z_n + Z_n.
    /// The shift generator wraps with g2^n = eps^{n(n-1)/2}.
    static std::shared_ptr<const AlgebraPresentation> clock_shift(int n);
    /// Group algebra k[Z_n] with the trivial cocycle; the minimal test bed
    /// for a nontrivial phi on a torsion grade group.
    static std::shared_ptr<const AlgebraPresentation> cyclic_group(int n);

    /// Parses `qplane:N=<int>`, `clockshift:n=<int>`, `cyclic:n=<int>`.
    static std::shared_ptr<const AlgebraPresentation> from_spec(const std::string& spec);

    const std::string& name() const noexcept { return name_; }
    const Cocycle& rho() const noexcept { return rho_; }
    const GradeGroup& group() const noexcept { return rho_.group(); }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const GeneratorInfo& generator(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<GeneratorInfo>& generators() const noexcept { return gens_; }
    /// -1 when the name is unknown.
    int generator_index(const std::string& name) const;
    /// Natural root of unity order of the presentation (1 when none).
    int root_order() const noexcept { return root_order_; }

    Monomial unit_monomial() const { return Monomial(gens_.size(), 0); }
    Monomial generator_monomial(int i) const;
    bool is_unit(const Monomial& m) const;
    Grade monomial_grade(const Monomial& m) const;
    /// Structure constants: x_a * x_b = c(a,b) x_{a+b}; returns (c(a,b), a+b).
    std::pair<Scalar, Monomial> monomial_mul(const Monomial& a, const Monomial& b) const;

    /// All monomials of the given grade (both built-in families carry at most
    /// one); throws InfiniteComponent if the set is provably infinite.
    std::vector<Monomial> monomials_of_grade(const Grade& grade) const;
    /// Every monomial (finite presentations only, e.g. clock-shift, cyclic).
    std::vector<Monomial> all_monomials() const;
    bool has_finite_basis() const;

    bool operator==(const AlgebraPresentation& o) const;
    bool operator!=(const AlgebraPresentation& o) const { return !(*this == o); }

private:
    AlgebraPresentation(std::string name, Cocycle rho, std::vector<GeneratorInfo> generators,
                        std::vector<std::vector<Scalar>> swap);

    void validate() const;

    std::string name_;
    Cocycle rho_;
    std::vector<GeneratorInfo> gens_;
    std::vector<std::vector<Scalar>> swap_; // swap_[i][j] for i > j
    int root_order_ = 1;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

/// Raises PresentationMismatch unless both presentations agree structurally.
void require_same_presentation(const PresentationPtr& a, const PresentationPtr& b);

} // namespace rhoform
