#pragma once

#include "rhoform/derivation.hpp"
#include "rhoform/form.hpp"

namespace rhoform {

/// Bimodule homomorphism K: Omega^1(A) -> Omega^k(A) of grade alpha, given by
/// its values on generator differentials. The k = 0 case is a field X(A).
/// The associated contraction j_K is the algebraic derivation of degree
/// (k-1, alpha); the left module law uses the rhobar twist
/// K(a w) = rhobar((k-1,alpha),(0,|a|)) a K(w), which reduces to the plain
/// rho twist for trivial phi.
///
/// Construction eagerly checks well-definedness: the induced map K.d applied
/// to both sides of every defining relation of A must agree.
class FieldValuedForm {
public:
    FieldValuedForm(PresentationPtr pres, GradedUnitHom phi, long target_degree, Grade alpha,
                    std::vector<Form> generator_values);

    static FieldValuedForm zero(PresentationPtr pres, GradedUnitHom phi, long target_degree,
                                Grade alpha);
    /// The identity Omega^1 -> Omega^1 (target degree 1, grade 0).
    static FieldValuedForm identity(PresentationPtr pres, GradedUnitHom phi);
    /// The field corresponding to a derivation under the universality of Omega^1.
    static FieldValuedForm from_derivation(const Derivation& x, GradedUnitHom phi);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const GradedUnitHom& phi_twist() const noexcept { return phi_; }
    long target_degree() const noexcept { return target_degree_; }
    const Grade& grade() const noexcept { return alpha_; }
    /// Degree of j_K as a derivation of Omega*(A): (k-1, alpha).
    Bidegree contraction_degree() const { return Bidegree{target_degree_ - 1, alpha_}; }
    const Form& value(int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<Form>& values() const noexcept { return values_; }

    bool is_zero() const;
    bool is_field() const { return target_degree_ == 0; }

    /// K.d applied to an element (the twisted derivation A -> Omega^k).
    Form apply_d(const AlgebraElement& u) const;
    /// K(dm) for a single basis monomial.
    Form apply_d_monomial(const Monomial& m) const;
    /// K applied to a one-form.
    Form apply(const Form& one_form) const;
    /// The derivation corresponding to a field (target degree 0).
    Derivation to_derivation() const;

    FieldValuedForm operator+(const FieldValuedForm& o) const;
    FieldValuedForm operator-() const;
    FieldValuedForm scaled(const Scalar& c) const;

    bool operator==(const FieldValuedForm& o) const;
    bool operator!=(const FieldValuedForm& o) const { return !(*this == o); }

private:
    PresentationPtr pres_;
    GradedUnitHom phi_;
    long target_degree_;
    Grade alpha_;
    std::vector<Form> values_;

    void validate() const;
};

/// j_K(w): the algebraic rhobar-derivation of degree (k-1, alpha) extending K;
/// zero on Omega^0, K itself on Omega^1, slot-by-slot insertion with rhobar
/// prefactors on higher products.
Form contract(const FieldValuedForm& k, const Form& w);

/// L_K(w) = j_K(dw) - rhobar((k-1,alpha),(1,0)) d(j_K w).
Form lie_derivative(const FieldValuedForm& k, const Form& w);

/// Nijenhuis bracket [K,L]^D = j_K . L - rhobar(...) j_L . K as a map
/// Omega^1 -> Omega^{k+l-1}; two fields give the zero map.
FieldValuedForm nijenhuis_bracket(const FieldValuedForm& k, const FieldValuedForm& l);

/// The unique M with L_M = [L_K, L_L] (Frolicher-Nijenhuis bracket),
/// determined by M(dx_i) = [L_K,L_L](x_i).
FieldValuedForm fn_bracket(const FieldValuedForm& k, const FieldValuedForm& l);

/// Composition j_K . L as a field-valued form (target degree k+l-1).
FieldValuedForm contract_compose(const FieldValuedForm& k, const FieldValuedForm& l);

} // namespace rhoform
