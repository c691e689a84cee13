#include "rhoform/random_gen.hpp"

#include <map>

#include "rhoform/errors.hpp"
#include "rhoform/matrix.hpp"

namespace rhoform {

Scalar random_scalar(Rng& rng, int eps_order) {
    std::uniform_int_distribution<int> pick(0, eps_order > 1 ? 5 : 4);
    std::uniform_int_distribution<long> small(1, 3);
    std::uniform_int_distribution<long> qexp(-2, 2);
    switch (pick(rng)) {
        case 0: return Scalar(small(rng));
        case 1: return Scalar(-small(rng));
        case 2: return Scalar::from_rational(Rational(1, small(rng) + 1));
        case 3: return Scalar::q_power(qexp(rng));
        case 4: return Scalar(small(rng)) * Scalar::q_power(qexp(rng));
        default: return Scalar::eps_power(eps_order, small(rng));
    }
}

Scalar random_scalar_or_zero(Rng& rng, int eps_order) {
    std::uniform_int_distribution<int> pick(0, 3);
    if (pick(rng) == 0) return Scalar::zero();
    return random_scalar(rng, eps_order);
}

Grade random_grade(const GradeGroup& group, Rng& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<long> comps(static_cast<size_t>(group.generators()));
    for (auto& c : comps) c = d(rng);
    return Grade(group, std::move(comps));
}

Monomial random_monomial(const PresentationPtr& pres, Rng& rng, long max_exp) {
    Monomial m(static_cast<size_t>(pres->generator_count()), 0);
    for (int i = 0; i < pres->generator_count(); ++i) {
        long hi = max_exp;
        int order = pres->generator(i).exponent_order;
        if (order > 0) hi = std::min<long>(hi, order - 1);
        std::uniform_int_distribution<long> d(0, hi);
        m[static_cast<size_t>(i)] = d(rng);
    }
    return m;
}

AlgebraElement random_element(const PresentationPtr& pres, Rng& rng, int terms, long max_exp) {
    AlgebraElement u = AlgebraElement::zero(pres);
    for (int t = 0; t < terms; ++t)
        u = u + AlgebraElement::monomial(pres, random_monomial(pres, rng, max_exp),
                                         random_scalar(rng, pres->root_order()));
    return u;
}

AlgebraElement random_homogeneous_element(const PresentationPtr& pres, const Grade& grade,
                                          Rng& rng, int eps_order) {
    AlgebraElement u = AlgebraElement::zero(pres);
    for (const auto& m : pres->monomials_of_grade(grade))
        u = u + AlgebraElement::monomial(pres, m, random_scalar(rng, eps_order));
    return u;
}

Form random_form(const PresentationPtr& pres, const GradedUnitHom& phi, Rng& rng,
                 int max_degree, int terms, long max_exp) {
    Form w = Form::zero(pres, phi);
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        FormTensor tensor{random_monomial(pres, rng, max_exp), {}};
        int k = deg(rng);
        bool ok = true;
        for (int s = 0; s < k; ++s) {
            Monomial bar = random_monomial(pres, rng, max_exp);
            if (pres->is_unit(bar)) {
                // retry once with a forced generator letter
                bar[static_cast<size_t>(
                    std::uniform_int_distribution<int>(0, pres->generator_count() - 1)(rng))] = 1;
            }
            if (pres->is_unit(bar)) {
                ok = false;
                break;
            }
            tensor.bars.push_back(std::move(bar));
        }
        if (!ok) continue;
        w = w + Form::tensor(pres, phi, std::move(tensor), random_scalar(rng, pres->root_order()));
    }
    return w;
}

Form random_homogeneous_form(const PresentationPtr& pres, const GradedUnitHom& phi, Rng& rng,
                             int max_degree, long max_exp) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        Form seed = random_form(pres, phi, rng, max_degree, 1, max_exp);
        if (seed.is_zero()) continue;
        Bidegree d = seed.bidegree();
        // enumerate the component only while it is small; a single random
        // tensor is homogeneous anyway
        long weight = 0;
        for (long c : d.grade.comps) weight += c < 0 ? -c : c;
        if (weight > 5) return seed;
        Form out = Form::zero(pres, phi);
        auto basis = component_basis_tensors(pres, d.form_degree, d.grade);
        for (const auto& t : basis)
            out = out + Form::tensor(pres, phi, t, random_scalar_or_zero(rng, pres->root_order()));
        if (!out.is_zero()) return out;
    }
    return Form::from_scalar(pres, phi, Scalar::one());
}

Derivation random_derivation(const PresentationPtr& pres, Rng& rng, long grade_bound) {
    if (pres->has_finite_basis()) {
        // torsion examples carry no nonzero rho-derivations (char 0)
        return Derivation::zero(pres, random_grade(pres->group(), rng, grade_bound));
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        // degree gamma = |m| - e_i for a random monomial keeps some value legal
        Monomial m = random_monomial(pres, rng, grade_bound);
        std::uniform_int_distribution<int> gi(0, pres->generator_count() - 1);
        Grade gamma = pres->monomial_grade(m) - pres->generator(gi(rng)).grade;
        std::vector<AlgebraElement> vals;
        bool nonzero = false;
        for (int i = 0; i < pres->generator_count(); ++i) {
            Grade target = gamma + pres->generator(i).grade;
            AlgebraElement v = AlgebraElement::zero(pres);
            for (const auto& mono : pres->monomials_of_grade(target)) {
                Scalar c = random_scalar_or_zero(rng, pres->root_order());
                v = v + AlgebraElement::monomial(pres, mono, c);
            }
            nonzero = nonzero || !v.is_zero();
            vals.push_back(std::move(v));
        }
        if (!nonzero) continue;
        return Derivation(pres, gamma, std::move(vals));
    }
    return Derivation::zero(pres, Grade::zero(pres->group()));
}

namespace {

struct RelationSystem {
    // unknown layout: per generator, coordinates over its component basis
    std::vector<std::vector<FormTensor>> bases;
    std::vector<size_t> offsets;
    size_t unknowns = 0;
    std::vector<std::vector<Scalar>> kernel;
};

void add_expansion(ScalarMatrix& mat, size_t row_offset,
                   const std::map<FormTensor, size_t>& index, const Form& w, size_t col) {
    for (const auto& [t, c] : w.terms()) {
        auto it = index.find(t);
        if (it == index.end())
            fail(ErrorKind::IllDefined, "relation image left the enumerated component");
        mat.at(row_offset + it->second, col) = mat.at(row_offset + it->second, col) + c;
    }
}

RelationSystem solve_relation_system(const PresentationPtr& pres, const GradedUnitHom& phi,
                                     long k, const Grade& alpha) {
    RelationSystem sys;
    ExtendedCocycle rhobar(pres->rho(), phi);
    auto tau = [&](const Grade& g) { return rhobar.eval(Bidegree{k, alpha}, Bidegree{0, g}); };

    int g = pres->generator_count();
    sys.bases.resize(static_cast<size_t>(g));
    sys.offsets.resize(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
        sys.offsets[static_cast<size_t>(i)] = sys.unknowns;
        sys.bases[static_cast<size_t>(i)] =
            component_basis_tensors(pres, k, alpha + pres->generator(i).grade);
        sys.unknowns += sys.bases[static_cast<size_t>(i)].size();
    }
    if (sys.unknowns == 0) return sys;

    // count constraint rows
    struct Relation {
        int i, j;      // pair when j >= 0, torsion power of i otherwise
        std::vector<FormTensor> target;
        std::map<FormTensor, size_t> index;
    };
    std::vector<Relation> relations;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < i; ++j) {
            Relation r{i, j, {}, {}};
            r.target = component_basis_tensors(
                pres, k, alpha + pres->generator(i).grade + pres->generator(j).grade);
            for (size_t t = 0; t < r.target.size(); ++t) r.index.emplace(r.target[t], t);
            relations.push_back(std::move(r));
        }
        if (pres->generator(i).exponent_order > 0) {
            Relation r{i, -1, {}, {}};
            r.target = component_basis_tensors(pres, k, alpha); // n|x_i| = 0
            for (size_t t = 0; t < r.target.size(); ++t) r.index.emplace(r.target[t], t);
            relations.push_back(std::move(r));
        }
    }
    size_t rows = 0;
    for (const auto& r : relations) rows += r.target.size();
    ScalarMatrix mat(rows, sys.unknowns);

    size_t row_offset = 0;
    for (const auto& rel : relations) {
        if (rel.j >= 0) {
            int i = rel.i, j = rel.j;
            Form xi = Form::from_element(AlgebraElement::generator(pres, i), phi);
            Form xj = Form::from_element(AlgebraElement::generator(pres, j), phi);
            Grade gi = pres->generator(i).grade;
            Grade gj = pres->generator(j).grade;
            Scalar t = pres->rho().eval(gi, gj);
            // X(x_i x_j) - t X(x_j x_i) = 0 with X(ab) = X(a)b + tau(|a|) a X(b)
            for (size_t b = 0; b < sys.bases[static_cast<size_t>(i)].size(); ++b) {
                Form v = Form::tensor(pres, phi, sys.bases[static_cast<size_t>(i)][b]);
                size_t col = sys.offsets[static_cast<size_t>(i)] + b;
                add_expansion(mat, row_offset, rel.index, v * xj - (t * tau(gj)) * (xj * v), col);
            }
            for (size_t b = 0; b < sys.bases[static_cast<size_t>(j)].size(); ++b) {
                Form v = Form::tensor(pres, phi, sys.bases[static_cast<size_t>(j)][b]);
                size_t col = sys.offsets[static_cast<size_t>(j)] + b;
                add_expansion(mat, row_offset, rel.index, tau(gi) * (xi * v) - t * (v * xi), col);
            }
        } else {
            int i = rel.i;
            int n = pres->generator(i).exponent_order;
            AlgebraElement gen = AlgebraElement::generator(pres, i);
            Grade gi = pres->generator(i).grade;
            for (size_t b = 0; b < sys.bases[static_cast<size_t>(i)].size(); ++b) {
                Form v = Form::tensor(pres, phi, sys.bases[static_cast<size_t>(i)][b]);
                size_t col = sys.offsets[static_cast<size_t>(i)] + b;
                Form acc = Form::zero(pres, phi);
                AlgebraElement left = AlgebraElement::unit(pres);
                for (int s = 0; s < n; ++s) {
                    AlgebraElement right = AlgebraElement::unit(pres);
                    for (int t2 = 0; t2 < n - 1 - s; ++t2) right = right * gen;
                    acc = acc + tau(gi.scaled(s)) * (Form::from_element(left, phi) * v *
                                                     Form::from_element(right, phi));
                    left = left * gen;
                }
                add_expansion(mat, row_offset, rel.index, acc, col);
            }
        }
        row_offset += rel.target.size();
    }
    sys.kernel = mat.kernel_basis();
    return sys;
}

} // namespace

size_t field_valued_form_space_dim(const PresentationPtr& pres, const GradedUnitHom& phi,
                                   long target_degree, const Grade& alpha) {
    return solve_relation_system(pres, phi, target_degree, alpha).kernel.size();
}

FieldValuedForm random_field_valued_form(const PresentationPtr& pres, const GradedUnitHom& phi,
                                         long target_degree, const Grade& alpha, Rng& rng) {
    RelationSystem sys = solve_relation_system(pres, phi, target_degree, alpha);
    int g = pres->generator_count();
    std::vector<Scalar> coords(sys.unknowns, Scalar::zero());
    if (!sys.kernel.empty()) {
        for (const auto& basis_vec : sys.kernel) {
            Scalar c = random_scalar_or_zero(rng, pres->root_order());
            if (c.is_zero()) continue;
            for (size_t u = 0; u < sys.unknowns; ++u)
                coords[u] = coords[u] + c * basis_vec[u];
        }
    }
    std::vector<Form> values;
    for (int i = 0; i < g; ++i) {
        Form v = Form::zero(pres, phi);
        const auto& basis = sys.bases[static_cast<size_t>(i)];
        for (size_t b = 0; b < basis.size(); ++b) {
            const Scalar& c = coords[sys.offsets[static_cast<size_t>(i)] + b];
            if (!c.is_zero()) v = v + Form::tensor(pres, phi, basis[b], c);
        }
        values.push_back(std::move(v));
    }
    return FieldValuedForm(pres, phi, target_degree, alpha, std::move(values));
}

} // namespace rhoform
