#include "rhoform/hom.hpp"

#include <algorithm>
#include <random>

#include "rhoform/errors.hpp"

namespace rhoform {

AlgebraHom::AlgebraHom(PresentationPtr source, PresentationPtr target, Grade degree,
                       std::vector<AlgebraElement> images)
    : src_(std::move(source)), dst_(std::move(target)), alpha_(std::move(degree)),
      images_(std::move(images)) {
    if (src_->group() != dst_->group() || src_->rho() != dst_->rho())
        fail(ErrorKind::GroupMismatch,
             "homomorphisms require the same grade group and cocycle on both sides");
    if (alpha_.group != src_->group())
        fail(ErrorKind::GroupMismatch, "hom degree not in the grade group");
    if (static_cast<int>(images_.size()) != src_->generator_count())
        fail(ErrorKind::IllDefined, "need one image per generator");
    validate();
}

AlgebraHom AlgebraHom::identity(const PresentationPtr& pres) {
    std::vector<AlgebraElement> images;
    for (int i = 0; i < pres->generator_count(); ++i)
        images.push_back(AlgebraElement::generator(pres, i));
    return AlgebraHom(pres, pres, Grade::zero(pres->group()), std::move(images));
}

void AlgebraHom::validate() const {
    for (int i = 0; i < src_->generator_count(); ++i) {
        const AlgebraElement& v = images_[static_cast<size_t>(i)];
        require_same_presentation(dst_, v.presentation());
        if (!v.is_zero() && v.grade() != alpha_ + src_->generator(i).grade)
            fail(ErrorKind::IllDefined,
                 "image of " + src_->generator(i).name + " has wrong grade");
    }
    AlgebraElement unit_image = alpha_.is_zero() ? AlgebraElement::unit(dst_)
                                                 : AlgebraElement::zero(dst_);
    for (int i = 0; i < src_->generator_count(); ++i) {
        for (int j = 0; j < i; ++j) {
            Scalar t = src_->rho().eval(src_->generator(i).grade, src_->generator(j).grade);
            if (image(i) * image(j) != t * (image(j) * image(i)))
                fail(ErrorKind::IllDefined, "hom does not kill the relation between " +
                                                src_->generator(i).name + " and " +
                                                src_->generator(j).name);
        }
        int n = src_->generator(i).exponent_order;
        if (n > 0) {
            AlgebraElement pw = AlgebraElement::unit(dst_);
            for (int s = 0; s < n; ++s) pw = pw * image(i);
            if (pw != src_->generator(i).power_wrap * unit_image)
                fail(ErrorKind::IllDefined,
                     "hom does not respect the power relation of " + src_->generator(i).name);
        }
    }
}

AlgebraElement AlgebraHom::apply_monomial(const Monomial& m) const {
    if (src_->is_unit(m))
        return alpha_.is_zero() ? AlgebraElement::unit(dst_) : AlgebraElement::zero(dst_);
    AlgebraElement out = AlgebraElement::unit(dst_);
    for (size_t i = 0; i < m.size(); ++i)
        for (long e = 0; e < m[i]; ++e) out = out * images_[i];
    return out;
}

AlgebraElement AlgebraHom::apply(const AlgebraElement& u) const {
    require_same_presentation(src_, u.presentation());
    AlgebraElement out = AlgebraElement::zero(dst_);
    for (const auto& [m, c] : u.terms()) out = out + c * apply_monomial(m);
    return out;
}

Form AlgebraHom::apply_form(const Form& w) const {
    require_same_presentation(src_, w.presentation());
    Form out = Form::zero(dst_, w.phi());
    for (const auto& [t, c] : w.terms()) {
        Form acc = Form::from_element(apply_monomial(t.m0), w.phi());
        for (const Monomial& b : t.bars) {
            if (acc.is_zero()) break;
            Form db = Form::from_element(apply_monomial(b), w.phi()).differential();
            acc = acc * db;
        }
        out = out + c * acc;
    }
    return out;
}

bool AlgebraHom::operator==(const AlgebraHom& o) const {
    return *src_ == *o.src_ && *dst_ == *o.dst_ && alpha_ == o.alpha_ && images_ == o.images_;
}

bool check_f_related(const AlgebraHom& f, const FieldValuedForm& k, const FieldValuedForm& kp) {
    if (!f.degree().is_zero())
        fail(ErrorKind::DegreeMismatch, "f-relatedness is defined for degree-0 homs");
    require_same_presentation(f.source(), k.presentation());
    require_same_presentation(f.target(), kp.presentation());
    if (!(k.is_zero() && kp.is_zero()) &&
        (k.target_degree() != kp.target_degree() || k.grade() != kp.grade()))
        fail(ErrorKind::DegreeMismatch, "related forms must share (k, alpha)");
    for (int i = 0; i < f.source()->generator_count(); ++i) {
        // K'(d f(x_i)) vs Omega_k(f)(K(dx_i))
        Form lhs = kp.apply(Form::from_element(f.apply(AlgebraElement::generator(f.source(), i)),
                                               kp.phi_twist())
                                .differential());
        Form rhs = f.apply_form(k.value(i));
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

std::vector<AlgebraElement> sample_elements(const PresentationPtr& pres) {
    std::vector<AlgebraElement> out;
    out.push_back(AlgebraElement::unit(pres));
    for (int i = 0; i < pres->generator_count(); ++i) {
        AlgebraElement xi = AlgebraElement::generator(pres, i);
        out.push_back(xi);
        for (int j = 0; j < pres->generator_count(); ++j)
            out.push_back(xi * AlgebraElement::generator(pres, j));
    }
    if (pres->generator_count() >= 2) {
        AlgebraElement x0 = AlgebraElement::generator(pres, 0);
        AlgebraElement x1 = AlgebraElement::generator(pres, 1);
        out.push_back(x0 * x1 * x1 + x0);
    }
    return out;
}

std::vector<Form> sample_forms(const PresentationPtr& pres, const GradedUnitHom& phi,
                               int degree_bound, unsigned long seed) {
    // generators and their differentials are always present so that a failing
    // identity is caught on the spanning set; extras are subsampled
    std::vector<Form> core;
    core.push_back(Form::from_element(AlgebraElement::unit(pres), phi));
    for (int i = 0; i < pres->generator_count(); ++i) {
        core.push_back(Form::from_element(AlgebraElement::generator(pres, i), phi));
        if (degree_bound >= 1) core.push_back(Form::generator_differential(pres, phi, i));
    }

    std::vector<Form> extras;
    std::vector<Form> zero_forms;
    for (const auto& u : sample_elements(pres)) zero_forms.push_back(Form::from_element(u, phi));
    if (degree_bound >= 1) {
        for (const auto& w : zero_forms) {
            Form dw = w.differential();
            if (!dw.is_zero()) extras.push_back(dw);
            for (int i = 0; i < pres->generator_count(); ++i) {
                Form mixed = w * Form::generator_differential(pres, phi, i);
                if (!mixed.is_zero()) extras.push_back(mixed);
            }
        }
    }
    if (degree_bound >= 2) {
        for (int i = 0; i < pres->generator_count(); ++i) {
            Form dxi = Form::generator_differential(pres, phi, i);
            for (int j = 0; j < pres->generator_count(); ++j) {
                Form w = dxi * Form::generator_differential(pres, phi, j);
                if (!w.is_zero()) extras.push_back(w);
                for (const auto& z : zero_forms) {
                    Form v = z * w;
                    if (!v.is_zero()) extras.push_back(v);
                }
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::shuffle(extras.begin(), extras.end(), rng);
    if (extras.size() > 16) extras.erase(extras.begin() + 16, extras.end());
    core.insert(core.end(), extras.begin(), extras.end());
    return core;
}

std::string describe(const Form& w) {
    if (w.is_zero()) return "0";
    const FormTensor& t = w.terms().begin()->first;
    std::string s = "tensor(m0=";
    for (long e : t.m0) s += std::to_string(e) + ".";
    s += "; bars=" + std::to_string(t.bars.size()) + ") ...";
    return s;
}

} // namespace

NaturalityReport naturality_report(const AlgebraHom& f, const FieldValuedForm& k1,
                                   const FieldValuedForm& k1p, const FieldValuedForm& k2,
                                   const FieldValuedForm& k2p, int degree_bound,
                                   unsigned long seed) {
    NaturalityReport report;
    report.preconditions_ok = true;
    if (!check_f_related(f, k1, k1p)) {
        report.preconditions_ok = false;
        report.precondition_witness = "(K1, K1') are not f-related";
    } else if (!check_f_related(f, k2, k2p)) {
        report.preconditions_ok = false;
        report.precondition_witness = "(K2, K2') are not f-related";
    }

    auto forms = sample_forms(f.source(), k1.phi_twist(), degree_bound, seed);
    auto elems = sample_elements(f.source());

    auto run_on_forms = [&](int id, auto&& lhs_fn, auto&& rhs_fn) {
        NaturalityItem item{id, true, ""};
        for (const auto& w : forms) {
            if (lhs_fn(w) != rhs_fn(w)) {
                item.passed = false;
                item.witness = describe(w);
                break;
            }
        }
        report.items.push_back(std::move(item));
    };

    // (1) j_{K'} . Omega(f) = Omega(f) . j_K
    run_on_forms(
        1, [&](const Form& w) { return contract(k1p, f.apply_form(w)); },
        [&](const Form& w) { return f.apply_form(contract(k1, w)); });

    // (2) hypothesis restricted to d(A), then f-relatedness must follow
    {
        NaturalityItem item{2, true, ""};
        bool hypothesis = true;
        for (const auto& u : elems) {
            Form da = Form::from_element(u, k1.phi_twist()).differential();
            if (contract(k1p, f.apply_form(da)) != f.apply_form(contract(k1, da))) {
                hypothesis = false;
                break;
            }
        }
        if (hypothesis && !check_f_related(f, k1, k1p)) {
            item.passed = false;
            item.witness = "hypothesis on d(A) holds but forms are not f-related";
        }
        report.items.push_back(std::move(item));
    }

    // (3) Nijenhuis brackets (and the compositions j_{K1}.K2) stay f-related
    {
        NaturalityItem item{3, true, ""};
        FieldValuedForm comp = contract_compose(k1, k2);
        FieldValuedForm compp = contract_compose(k1p, k2p);
        if (!check_f_related(f, comp, compp)) {
            item.passed = false;
            item.witness = "j_{K1} . K2 not f-related to j_{K1'} . K2'";
        } else {
            FieldValuedForm nb = nijenhuis_bracket(k1, k2);
            FieldValuedForm nbp = nijenhuis_bracket(k1p, k2p);
            if (!check_f_related(f, nb, nbp)) {
                item.passed = false;
                item.witness = "[K1,K2]^D not f-related to [K1',K2']^D";
            }
        }
        report.items.push_back(std::move(item));
    }

    // (4) L_{K'} . Omega(f) = Omega(f) . L_K
    run_on_forms(
        4, [&](const Form& w) { return lie_derivative(k1p, f.apply_form(w)); },
        [&](const Form& w) { return f.apply_form(lie_derivative(k1, w)); });

    // (5) hypothesis restricted to Omega^0, then f-relatedness must follow
    {
        NaturalityItem item{5, true, ""};
        bool hypothesis = true;
        for (const auto& u : elems) {
            Form a = Form::from_element(u, k1.phi_twist());
            if (lie_derivative(k1p, f.apply_form(a)) != f.apply_form(lie_derivative(k1, a))) {
                hypothesis = false;
                break;
            }
        }
        if (hypothesis && !check_f_related(f, k1, k1p)) {
            item.passed = false;
            item.witness = "hypothesis on Omega^0 holds but forms are not f-related";
        }
        report.items.push_back(std::move(item));
    }

    // (6) Frolicher-Nijenhuis brackets stay f-related
    {
        NaturalityItem item{6, true, ""};
        FieldValuedForm fn = fn_bracket(k1, k2);
        FieldValuedForm fnp = fn_bracket(k1p, k2p);
        if (!check_f_related(f, fn, fnp)) {
            item.passed = false;
            item.witness = "[K1,K2] not f-related to [K1',K2']";
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

} // namespace rhoform
