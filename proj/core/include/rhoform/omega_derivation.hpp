#pragma once

#include "rhoform/field_valued_form.hpp"

namespace rhoform {

/// Graded rhobar-derivation of Omega*(A) of degree (k, alpha), determined by
/// its values on the generators x_i and their differentials dx_i and extended
/// by D(w /\ t) = Dw /\ t + rhobar((k,alpha),|w|) w /\ Dt. Construction
/// verifies the values respect the defining relations of A and their
/// differentials, which makes the Leibniz extension sound.
class OmegaDerivation {
public:
    OmegaDerivation(PresentationPtr pres, GradedUnitHom phi, Bidegree degree,
                    std::vector<Form> on_generators, std::vector<Form> on_differentials);

    static OmegaDerivation exterior_d(PresentationPtr pres, GradedUnitHom phi);
    static OmegaDerivation from_contraction(const FieldValuedForm& k);
    static OmegaDerivation from_lie(const FieldValuedForm& k);
    static OmegaDerivation zero(PresentationPtr pres, GradedUnitHom phi, Bidegree degree);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const GradedUnitHom& phi_twist() const noexcept { return phi_; }
    const Bidegree& degree() const noexcept { return degree_; }
    const Form& on_generator(int i) const { return on_gen_[static_cast<size_t>(i)]; }
    const Form& on_differential(int i) const { return on_dgen_[static_cast<size_t>(i)]; }

    bool is_zero() const;

    Form apply(const Form& w) const;
    Form apply_element(const AlgebraElement& u) const;

    OmegaDerivation operator+(const OmegaDerivation& o) const;
    OmegaDerivation operator-() const;
    OmegaDerivation scaled(const Scalar& c) const;

    bool operator==(const OmegaDerivation& o) const;
    bool operator!=(const OmegaDerivation& o) const { return !(*this == o); }

private:
    PresentationPtr pres_;
    GradedUnitHom phi_;
    Bidegree degree_;
    std::vector<Form> on_gen_;
    std::vector<Form> on_dgen_;

    Form apply_monomial(const Monomial& m) const;
    Form apply_d_monomial(const Monomial& m) const;
    Form apply_word(const std::vector<int>& letters) const;
    Form apply_d_word(const std::vector<int>& letters) const;
    void validate() const;

    friend OmegaDerivation omega_derivation_bracket(const OmegaDerivation& a,
                                                    const OmegaDerivation& b);
};

/// [D1,D2] = D1 D2 - rhobar(|D1|,|D2|) D2 D1.
OmegaDerivation omega_derivation_bracket(const OmegaDerivation& a, const OmegaDerivation& b);

/// Decomposition D = L_K + j_L into Lie and algebraic parts:
/// K(dx_i) = D(x_i) and
/// L = (D - L_K)|_{Omega^1}; requires deg(D) = (k,alpha) with k >= 0.
std::pair<FieldValuedForm, FieldValuedForm> decompose_derivation(const OmegaDerivation& d);

} // namespace rhoform
