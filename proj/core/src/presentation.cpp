#include "rhoform/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "rhoform/errors.hpp"

namespace rhoform {

AlgebraPresentation::AlgebraPresentation(std::string name, Cocycle rho,
                                         std::vector<GeneratorInfo> generators,
                                         std::vector<std::vector<Scalar>> swap)
    : name_(std::move(name)), rho_(std::move(rho)), gens_(std::move(generators)),
      swap_(std::move(swap)) {}

std::shared_ptr<const AlgebraPresentation> AlgebraPresentation::make(
    std::string name, Cocycle rho, std::vector<GeneratorInfo> generators,
    std::vector<std::vector<Scalar>> swap) {
    auto p = std::shared_ptr<AlgebraPresentation>(new AlgebraPresentation(
        std::move(name), std::move(rho), std::move(generators), std::move(swap)));
    // natural eps order: lcm of the cyclotomic orders in the structure data
    // and the torsion orders of the grade group
    long order = 1;
    auto lcm_in = [&order](long n) { order = std::lcm(order, n); };
    auto bump = [&lcm_in](const Scalar& s) {
        for (const auto& [e, c] : s.numerator()) lcm_in(c.order());
        for (const auto& [e, c] : s.denominator()) lcm_in(c.order());
    };
    for (const auto& row : p->rho_.pairing())
        for (const auto& s : row) bump(s);
    for (const auto& g : p->gens_) bump(g.power_wrap);
    for (const auto& row : p->swap_)
        for (const auto& s : row) bump(s);
    for (int n : p->group().torsion_orders) lcm_in(n);
    p->root_order_ = static_cast<int>(order);
    p->validate();
    return p;
}

void AlgebraPresentation::validate() const {
    size_t g = gens_.size();
    if (swap_.size() != g) fail(ErrorKind::IllDefined, "swap matrix has wrong size");
    for (const auto& row : swap_)
        if (row.size() != g) fail(ErrorKind::IllDefined, "swap matrix not square");
    const Scalar one = Scalar::one();
    for (size_t i = 0; i < g; ++i) {
        const GeneratorInfo& gi = gens_[i];
        if (gi.grade.group != group())
            fail(ErrorKind::GroupMismatch, "generator grade not in the presentation's group");
        if (gi.exponent_order < 0 || gi.exponent_order == 1)
            fail(ErrorKind::IllDefined, "generator exponent order must be 0 or >= 2");
        if (gi.power_wrap.is_zero())
            fail(ErrorKind::IllDefined, "power wrap scalar must be a unit");
        if (gi.exponent_order > 0) {
            // the grading map must kill n_i * |x_i|
            if (!gi.grade.scaled(gi.exponent_order).is_zero())
                fail(ErrorKind::IllDefined, "torsion generator grade not annihilated by order");
        }
        for (size_t j = 0; j < g; ++j) {
            if (i <= j) continue;
            const Scalar& t = swap_[i][j];
            if (t.is_zero()) fail(ErrorKind::IllDefined, "swap factors must be units");
            // swap factors must descend to residue exponents
            if (gens_[i].exponent_order > 0 && t.pow(gens_[i].exponent_order) != one)
                fail(ErrorKind::IllDefined, "swap factor incompatible with torsion order");
            if (gens_[j].exponent_order > 0 && t.pow(gens_[j].exponent_order) != one)
                fail(ErrorKind::IllDefined, "swap factor incompatible with torsion order");
            // rho-commutativity on generators: c(e_i,e_j) = rho(|x_i|,|x_j|) c(e_j,e_i)
            // with c(e_i,e_j) = swap[i][j] and c(e_j,e_i) = 1 for i > j
            if (t != rho_.eval(gens_[i].grade, gens_[j].grade))
                fail(ErrorKind::IllDefined,
                     "swap factor disagrees with the cocycle on generators " +
                         gens_[i].name + "," + gens_[j].name);
        }
    }
}

int AlgebraPresentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

Monomial AlgebraPresentation::generator_monomial(int i) const {
    Monomial m = unit_monomial();
    m.at(static_cast<size_t>(i)) = 1;
    return m;
}

bool AlgebraPresentation::is_unit(const Monomial& m) const {
    for (long e : m)
        if (e != 0) return false;
    return true;
}

Grade AlgebraPresentation::monomial_grade(const Monomial& m) const {
    Grade g = Grade::zero(group());
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) g = g + gens_[i].grade.scaled(m[i]);
    return g;
}

std::pair<Scalar, Monomial> AlgebraPresentation::monomial_mul(const Monomial& a,
                                                              const Monomial& b) const {
    Scalar coeff = Scalar::one();
    // move every letter of b leftward past the higher-indexed letters of a
    for (size_t i = 1; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < i; ++j) {
            if (b[j] == 0) continue;
            coeff = coeff * swap_[i][j].pow(a[i] * b[j]);
        }
    }
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        long e = a[i] + b[i];
        int n = gens_[i].exponent_order;
        if (n > 0 && e >= n) {
            coeff = coeff * gens_[i].power_wrap.pow(e / n);
            e %= n;
        }
        m[i] = e;
    }
    return {std::move(coeff), std::move(m)};
}

std::vector<Monomial> AlgebraPresentation::monomials_of_grade(const Grade& grade) const {
    if (grade.group != group()) fail(ErrorKind::GroupMismatch, "grade not in this group");
    // Both built-in families have |x_i| = e_i, so the exponent vector is the
    // grade itself. Handle the general case by bounded search when each
    // generator's grade is a nonnegative multiple of a distinct free
    // generator, else enumerate the finite monoid.
    if (has_finite_basis()) {
        std::vector<Monomial> out;
        for (auto& m : all_monomials())
            if (monomial_grade(m) == grade) out.push_back(std::move(m));
        return out;
    }
    // free case: require the grading map to be the identity on exponents
    bool identity_grading = group().torsion_orders.empty() &&
                            group().free_rank == generator_count();
    if (identity_grading) {
        for (int i = 0; i < generator_count(); ++i)
            if (gens_[static_cast<size_t>(i)].grade != Grade::generator(group(), i))
                identity_grading = false;
    }
    if (!identity_grading)
        fail(ErrorKind::InfiniteComponent,
             "cannot enumerate monomials of a grade for this presentation");
    for (long c : grade.comps)
        if (c < 0) return {};
    return {Monomial(grade.comps.begin(), grade.comps.end())};
}

bool AlgebraPresentation::has_finite_basis() const {
    for (const auto& g : gens_)
        if (g.exponent_order == 0) return false;
    return true;
}

std::vector<Monomial> AlgebraPresentation::all_monomials() const {
    if (!has_finite_basis())
        fail(ErrorKind::InfiniteComponent, "presentation has infinitely many monomials");
    std::vector<Monomial> out;
    Monomial m = unit_monomial();
    while (true) {
        out.push_back(m);
        size_t i = 0;
        for (; i < m.size(); ++i) {
            if (m[i] + 1 < gens_[i].exponent_order) {
                ++m[i];
                break;
            }
            m[i] = 0;
        }
        if (i == m.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& o) const {
    if (this == &o) return true;
    if (name_ != o.name_ || rho_ != o.rho_ || swap_ != o.swap_) return false;
    if (gens_.size() != o.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name != o.gens_[i].name || gens_[i].grade != o.gens_[i].grade ||
            gens_[i].exponent_order != o.gens_[i].exponent_order ||
            gens_[i].power_wrap != o.gens_[i].power_wrap)
            return false;
    }
    return true;
}

std::shared_ptr<const AlgebraPresentation> AlgebraPresentation::quantum_plane(int dimension) {
    if (dimension < 1 || dimension > 64)
        fail(ErrorKind::BadArgument, "quantum plane needs 1 <= N <= 64");
    Cocycle rho = Cocycle::quantum_plane(dimension);
    std::vector<GeneratorInfo> gens;
    gens.reserve(static_cast<size_t>(dimension));
    for (int i = 0; i < dimension; ++i)
        gens.push_back({"x" + std::to_string(i + 1), Grade::generator(rho.group(), i), 0,
                        Scalar::one()});
    size_t g = static_cast<size_t>(dimension);
    std::vector<std::vector<Scalar>> swap(g, std::vector<Scalar>(g, Scalar::one()));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < i; ++j) swap[i][j] = Scalar::q_power(-1);
    return make("qplane:N=" + std::to_string(dimension), std::move(rho), std::move(gens),
                std::move(swap));
}

std::shared_ptr<const AlgebraPresentation> AlgebraPresentation::clock_shift(int n) {
    Cocycle rho = Cocycle::clock_shift(n);
    std::vector<GeneratorInfo> gens;
    // p^n = 1; the phased shift matrix satisfies g2^n = eps^{n(n-1)/2}
    gens.push_back({"p", Grade::generator(rho.group(), 0), n, Scalar::one()});
    gens.push_back({"g2", Grade::generator(rho.group(), 1), n,
                    Scalar::eps_power(n, static_cast<long>(n) * (n - 1) / 2)});
    std::vector<std::vector<Scalar>> swap(2, std::vector<Scalar>(2, Scalar::one()));
    swap[1][0] = Scalar::eps_power(n, -1); // g2 p = eps^-1 p g2
    return make("clockshift:n=" + std::to_string(n), std::move(rho), std::move(gens),
                std::move(swap));
}

std::shared_ptr<const AlgebraPresentation> AlgebraPresentation::cyclic_group(int n) {
    if (n < 2 || n > 4096) fail(ErrorKind::BadArgument, "cyclic order must be in [2, 4096]");
    Cocycle rho = Cocycle::trivial(GradeGroup(0, {n}));
    std::vector<GeneratorInfo> gens;
    gens.push_back({"g1", Grade::generator(rho.group(), 0), n, Scalar::one()});
    std::vector<std::vector<Scalar>> swap(1, std::vector<Scalar>(1, Scalar::one()));
    return make("cyclic:n=" + std::to_string(n), std::move(rho), std::move(gens),
                std::move(swap));
}

std::shared_ptr<const AlgebraPresentation> AlgebraPresentation::from_spec(
    const std::string& spec) {
    auto parse_param = [&spec](const std::string& prefix) -> int {
        std::string v = spec.substr(prefix.size());
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::BadArgument, "bad presentation spec: " + spec);
        return std::stoi(v);
    };
    if (spec.rfind("qplane:N=", 0) == 0) return quantum_plane(parse_param("qplane:N="));
    if (spec.rfind("clockshift:n=", 0) == 0) return clock_shift(parse_param("clockshift:n="));
    if (spec.rfind("cyclic:n=", 0) == 0) return cyclic_group(parse_param("cyclic:n="));
    fail(ErrorKind::BadArgument,
         "unknown presentation spec '" + spec +
             "' (expected qplane:N=<int>, clockshift:n=<int> or cyclic:n=<int>)");
}

void require_same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b)
        fail(ErrorKind::PresentationMismatch, "operands belong to different presentations");
}

} // namespace rhoform
