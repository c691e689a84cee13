#pragma once

#include "rhoform/field_valued_form.hpp"

namespace rhoform {

/// Graded algebra homomorphism f: A -> B of degree alpha between
/// presentations over the same grade group and cocycle, stored by generator
/// images. Construction checks image grades and that the defining relations
/// of the source map to zero. f(1) is 1 for degree 0 and 0 otherwise (the
/// only homogeneous idempotents).
class AlgebraHom {
public:
    AlgebraHom(PresentationPtr source, PresentationPtr target, Grade degree,
               std::vector<AlgebraElement> images);

    static AlgebraHom identity(const PresentationPtr& pres);

    const PresentationPtr& source() const noexcept { return src_; }
    const PresentationPtr& target() const noexcept { return dst_; }
    const Grade& degree() const noexcept { return alpha_; }
    const AlgebraElement& image(int i) const { return images_[static_cast<size_t>(i)]; }

    AlgebraElement apply(const AlgebraElement& u) const;
    /// Omega(f): f(a0) d f(a1) /\ ... /\ d f(an).
    Form apply_form(const Form& w) const;

    bool operator==(const AlgebraHom& o) const;

private:
    PresentationPtr src_;
    PresentationPtr dst_;
    Grade alpha_;
    std::vector<AlgebraElement> images_;

    AlgebraElement apply_monomial(const Monomial& m) const;
    void validate() const;
};

/// K' . Omega^1(f) = Omega_k(f) . K, decided on generator differentials
/// (they generate Omega^1 under the module laws both sides satisfy).
/// Requires a degree-0 hom and matching (k, alpha); DegreeMismatch otherwise.
bool check_f_related(const AlgebraHom& f, const FieldValuedForm& k, const FieldValuedForm& kp);

struct NaturalityItem {
    int item = 0;
    bool passed = false;
    std::string witness; // failing input, empty when passed
};

struct NaturalityReport {
    bool preconditions_ok = false;
    std::string precondition_witness;
    std::vector<NaturalityItem> items;
    bool all_passed() const {
        if (!preconditions_ok) return false;
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }
};

/// Naturality battery for the pairs (K1,K1') and (K2,K2'): items 1/4 check
/// that Omega(f) intertwines j and L on a sample basis of forms up to the
/// given degree bound, items 3/6 that the Nijenhuis and FN brackets of
/// related pairs stay related, and items 2/5 evaluate the converse
/// hypotheses on d(A) resp. Omega^0 samples and then assert f-relatedness.
NaturalityReport naturality_report(const AlgebraHom& f, const FieldValuedForm& k1,
                                   const FieldValuedForm& k1p, const FieldValuedForm& k2,
                                   const FieldValuedForm& k2p, int degree_bound = 2,
                                   unsigned long seed = 1);

} // namespace rhoform
