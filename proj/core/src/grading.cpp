#include "rhoform/grading.hpp"

#include <sstream>

#include "rhoform/errors.hpp"

namespace rhoform {

GradeGroup::GradeGroup(int rank, std::vector<int> orders)
    : free_rank(rank), torsion_orders(std::move(orders)) {
    if (rank < 0) fail(ErrorKind::BadArgument, "free rank must be >= 0");
    for (int n : torsion_orders)
        if (n < 2) fail(ErrorKind::BadArgument, "torsion orders must be >= 2");
}

int GradeGroup::generator_order(int i) const {
    if (i < free_rank) return 0;
    return torsion_orders[static_cast<size_t>(i - free_rank)];
}

std::string GradeGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (int n : torsion_orders) {
        if (!first) os << "+";
        os << "Z" << n;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Grade::Grade(GradeGroup g, std::vector<long> components)
    : group(std::move(g)), comps(std::move(components)) {
    if (static_cast<int>(comps.size()) != group.generators())
        fail(ErrorKind::GroupMismatch, "grade has wrong number of components");
    for (int i = group.free_rank; i < group.generators(); ++i) {
        long n = group.generator_order(i);
        comps[static_cast<size_t>(i)] = ((comps[static_cast<size_t>(i)] % n) + n) % n;
    }
}

Grade Grade::zero(const GradeGroup& g) {
    return Grade(g, std::vector<long>(static_cast<size_t>(g.generators()), 0));
}

Grade Grade::generator(const GradeGroup& g, int i) {
    std::vector<long> c(static_cast<size_t>(g.generators()), 0);
    c.at(static_cast<size_t>(i)) = 1;
    return Grade(g, std::move(c));
}

bool Grade::is_zero() const {
    for (long c : comps)
        if (c != 0) return false;
    return true;
}

Grade Grade::operator+(const Grade& o) const {
    if (group != o.group) fail(ErrorKind::GroupMismatch, "grades from different groups");
    std::vector<long> c(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) c[i] = comps[i] + o.comps[i];
    return Grade(group, std::move(c));
}

Grade Grade::operator-() const { return scaled(-1); }

Grade Grade::scaled(long k) const {
    std::vector<long> c(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) c[i] = comps[i] * k;
    return Grade(group, std::move(c));
}

std::string Grade::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) os << ",";
        os << comps[i];
    }
    os << ")";
    return os.str();
}

Grade grade_add(const Grade& a, const Grade& b) { return a + b; }

Cocycle::Cocycle(GradeGroup group, std::vector<std::vector<Scalar>> pairing)
    : group_(std::move(group)), pairing_(std::move(pairing)) {
    size_t g = static_cast<size_t>(group_.generators());
    if (pairing_.size() != g)
        fail(ErrorKind::IllDefined, "cocycle pairing matrix has wrong size");
    for (const auto& row : pairing_)
        if (row.size() != g) fail(ErrorKind::IllDefined, "cocycle pairing matrix not square");
    const Scalar one = Scalar::one();
    for (size_t i = 0; i < g; ++i) {
        for (size_t j = 0; j < g; ++j) {
            if (pairing_[i][j].is_zero())
                fail(ErrorKind::IllDefined, "cocycle values must be units");
            if (pairing_[i][j] * pairing_[j][i] != one)
                fail(ErrorKind::IllDefined, "cocycle pairing violates rho(a,b)*rho(b,a)=1");
            int ni = group_.generator_order(static_cast<int>(i));
            if (ni > 0 && pairing_[i][j].pow(ni) != one)
                fail(ErrorKind::IllDefined, "cocycle pairing not well-defined on torsion");
            int nj = group_.generator_order(static_cast<int>(j));
            if (nj > 0 && pairing_[i][j].pow(nj) != one)
                fail(ErrorKind::IllDefined, "cocycle pairing not well-defined on torsion");
        }
        // rho(c,c) = +-1 on generators
        const Scalar& d = pairing_[i][i];
        if (d != one && d != -one)
            fail(ErrorKind::IllDefined, "cocycle diagonal must be +-1");
    }
}

Cocycle Cocycle::trivial(const GradeGroup& group) {
    size_t g = static_cast<size_t>(group.generators());
    return Cocycle(group,
                   std::vector<std::vector<Scalar>>(g, std::vector<Scalar>(g, Scalar::one())));
}

Cocycle Cocycle::quantum_plane(int dimension) {
    GradeGroup g = GradeGroup::free(dimension);
    std::vector<std::vector<Scalar>> s(static_cast<size_t>(dimension),
                                       std::vector<Scalar>(static_cast<size_t>(dimension)));
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j)
            s[i][j] = i == j ? Scalar::one() : Scalar::q_power(i < j ? 1 : -1);
    return Cocycle(std::move(g), std::move(s));
}

Cocycle Cocycle::clock_shift(int n) {
    if (n < 2 || n > 4096) fail(ErrorKind::BadArgument, "clock-shift order must be in [2, 4096]");
    GradeGroup g(0, {n, n});
    // rho(a,b) = eps^(a1*b2 - a2*b1): the sign fixed by the matrix relation
    // p q = eps q p, i.e. rho((1,0),(0,1)) = eps.
    std::vector<std::vector<Scalar>> s(2, std::vector<Scalar>(2, Scalar::one()));
    s[0][1] = Scalar::eps_power(n, 1);
    s[1][0] = Scalar::eps_power(n, -1);
    return Cocycle(std::move(g), std::move(s));
}

Scalar Cocycle::eval(const Grade& a, const Grade& b) const {
    if (a.group != group_ || b.group != group_)
        fail(ErrorKind::GroupMismatch, "grades do not belong to the cocycle's group");
    Scalar r = Scalar::one();
    for (size_t i = 0; i < a.comps.size(); ++i) {
        if (a.comps[i] == 0) continue;
        for (size_t j = 0; j < b.comps.size(); ++j) {
            if (b.comps[j] == 0) continue;
            r = r * pairing_[i][j].pow(a.comps[i] * b.comps[j]);
        }
    }
    return r;
}

GradedUnitHom::GradedUnitHom(GradeGroup group, std::vector<Scalar> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != group_.generators())
        fail(ErrorKind::IllDefined, "phi needs one value per group generator");
    for (int i = 0; i < group_.generators(); ++i) {
        const Scalar& v = values_[static_cast<size_t>(i)];
        if (v.is_zero()) fail(ErrorKind::IllDefined, "phi values must be units");
        int n = group_.generator_order(i);
        if (n > 0 && v.pow(n) != Scalar::one())
            fail(ErrorKind::IllDefined, "phi not well-defined on torsion generator");
    }
}

GradedUnitHom GradedUnitHom::trivial(const GradeGroup& group) {
    return GradedUnitHom(
        group, std::vector<Scalar>(static_cast<size_t>(group.generators()), Scalar::one()));
}

bool GradedUnitHom::is_trivial() const {
    for (const auto& v : values_)
        if (!v.is_one()) return false;
    return true;
}

Scalar GradedUnitHom::eval(const Grade& a) const {
    if (a.group != group_) fail(ErrorKind::GroupMismatch, "grade not in phi's group");
    Scalar r = Scalar::one();
    for (size_t i = 0; i < a.comps.size(); ++i)
        if (a.comps[i] != 0) r = r * values_[i].pow(a.comps[i]);
    return r;
}

Scalar GradedUnitHom::eval_power(const Grade& a, long k) const {
    if (k == 0) return Scalar::one();
    return eval(a).pow(k);
}

std::string Bidegree::to_string() const {
    return "(" + std::to_string(form_degree) + "," + grade.to_string() + ")";
}

ExtendedCocycle::ExtendedCocycle(Cocycle base, GradedUnitHom phi)
    : base_(std::move(base)), phi_(std::move(phi)) {
    if (base_.group() != phi_.group())
        fail(ErrorKind::GroupMismatch, "phi and rho must share the grade group");
}

Scalar ExtendedCocycle::eval(const Bidegree& a, const Bidegree& b) const {
    Scalar r = base_.eval(a.grade, b.grade);
    if ((a.form_degree * b.form_degree) % 2 != 0) r = -r;
    if (!phi_.is_trivial()) {
        r = r * phi_.eval_power(a.grade, -b.form_degree);
        r = r * phi_.eval_power(b.grade, a.form_degree);
    }
    return r;
}

} // namespace rhoform
