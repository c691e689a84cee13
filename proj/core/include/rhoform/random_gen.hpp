#pragma once

#include <random>

#include "rhoform/derivation.hpp"
#include "rhoform/field_valued_form.hpp"

namespace rhoform {

using Rng = std::mt19937_64;

/// Nonzero scalar from a small pool (small rationals, q-powers, eps-powers).
Scalar random_scalar(Rng& rng, int eps_order = 1);
Scalar random_scalar_or_zero(Rng& rng, int eps_order = 1);

Grade random_grade(const GradeGroup& group, Rng& rng, long bound);
Monomial random_monomial(const PresentationPtr& pres, Rng& rng, long max_exp);
AlgebraElement random_element(const PresentationPtr& pres, Rng& rng, int terms, long max_exp);

/// Random homogeneous element of the given grade (zero when the component is
/// empty).
AlgebraElement random_homogeneous_element(const PresentationPtr& pres, const Grade& grade,
                                          Rng& rng, int eps_order);

/// Random form with tensors of slot count <= max_degree.
Form random_form(const PresentationPtr& pres, const GradedUnitHom& phi, Rng& rng,
                 int max_degree, int terms, long max_exp);
/// Random nonzero homogeneous form (bidegree chosen from a random tensor).
Form random_homogeneous_form(const PresentationPtr& pres, const GradedUnitHom& phi, Rng& rng,
                             int max_degree, long max_exp);

/// Random rho-derivation of the quantum plane (valid for any generator
/// values); for torsion presentations returns the zero derivation of a random
/// degree (their rho-derivation module is trivial).
Derivation random_derivation(const PresentationPtr& pres, Rng& rng, long grade_bound);

/// Random well-defined field-valued (k,alpha)-form, sampled from the exact
/// kernel of the linear relation system on generator values. Returns the zero
/// map when the component admits no nonzero solution.
FieldValuedForm random_field_valued_form(const PresentationPtr& pres, const GradedUnitHom& phi,
                                         long target_degree, const Grade& alpha, Rng& rng);

/// Dimension of the solution space used by random_field_valued_form.
size_t field_valued_form_space_dim(const PresentationPtr& pres, const GradedUnitHom& phi,
                                   long target_degree, const Grade& alpha);

} // namespace rhoform
