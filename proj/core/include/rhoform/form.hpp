#pragma once

#include <map>
#include <vector>

#include "rhoform/element.hpp"

namespace rhoform {

/// Basis tensor of the universal form algebra: m0 * d(bar1) /\ ... /\ d(bark)
/// with m0 any basis monomial and every barred slot a non-unit monomial.
struct FormTensor {
    Monomial m0;
    std::vector<Monomial> bars;

    bool operator==(const FormTensor& o) const { return m0 == o.m0 && bars == o.bars; }
    bool operator<(const FormTensor& o) const {
        if (bars.size() != o.bars.size()) return bars.size() < o.bars.size();
        if (m0 != o.m0) return m0 < o.m0;
        return bars < o.bars;
    }
};

/// Element of Omega*(A, phi) in canonical tensor normal form. The structural
/// differential prepends m0 as a barred slot; products rewrite from the
/// rightmost slot with (da)b = d(ab) - phi(|a|) a db. Immutable after
/// construction; no zero coefficients, no unit monomial in a barred slot.
class Form {
public:
    using Terms = std::map<FormTensor, Scalar>;

    Form(PresentationPtr pres, GradedUnitHom phi) : pres_(std::move(pres)), phi_(std::move(phi)) {}
    Form(PresentationPtr pres, GradedUnitHom phi, Terms terms);

    static Form zero(PresentationPtr pres, GradedUnitHom phi);
    static Form from_element(const AlgebraElement& u, GradedUnitHom phi);
    static Form from_scalar(PresentationPtr pres, GradedUnitHom phi, const Scalar& c);
    static Form tensor(PresentationPtr pres, GradedUnitHom phi, FormTensor t,
                       Scalar coeff = Scalar::one());
    /// dx_i as a one-form.
    static Form generator_differential(PresentationPtr pres, GradedUnitHom phi, int i);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const GradedUnitHom& phi() const noexcept { return phi_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Common bidegree; NonHomogeneous / ZeroElement otherwise.
    Bidegree bidegree() const;
    Bidegree tensor_bidegree(const FormTensor& t) const;

    /// True when every tensor has zero slots (an element of A seen in
    /// Omega^0); to_element converts back.
    bool is_element() const;
    AlgebraElement to_element() const;

    Form operator-() const;
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    /// The twisted wedge product of the universal calculus.
    Form operator*(const Form& o) const;
    Form scaled(const Scalar& c) const;

    /// d_phi: (m0; bars) -> (1; m0, bars), zero when m0 is the unit.
    Form differential() const;

    /// Appends differential slots (right multiplication by d(m) factors).
    Form with_appended_bars(const std::vector<Monomial>& extra) const;

    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

private:
    PresentationPtr pres_;
    GradedUnitHom phi_;
    Terms terms_;

    void add_term(FormTensor t, const Scalar& c);
    /// (m0 da_1 ... da_k) * b for an algebra element b.
    Form tensor_times_element(const FormTensor& t, const AlgebraElement& b) const;
    friend Form form_mul_impl(const Form& a, const Form& b);
};

inline Form operator*(const Scalar& c, const Form& w) { return w.scaled(c); }

/// d(w /\ t) = dw /\ t + rhobar((1,0),(n,alpha)) w /\ dt for homogeneous w of
/// bidegree (n,alpha); exact equality check.
bool leibniz_check(const Form& w, const Form& t);

/// All basis tensors of the (degree, grade) component of Omega*(A), in
/// canonical (lexicographic) order. Throws InfiniteComponent when the
/// component is provably infinite.
std::vector<FormTensor> component_basis_tensors(const PresentationPtr& pres, long degree,
                                                const Grade& grade);

} // namespace rhoform
