#pragma once

#include <string>
#include <vector>

#include "rhoform/scalar.hpp"

namespace rhoform {

/// Finitely generated abelian grade group G = Z^r x Z_{n_1} x ... x Z_{n_t}.
struct GradeGroup {
    int free_rank = 0;
    std::vector<int> torsion_orders; // each >= 2

    GradeGroup() = default;
    GradeGroup(int rank, std::vector<int> orders);

    static GradeGroup free(int rank) { return GradeGroup(rank, {}); }

    int generators() const { return free_rank + static_cast<int>(torsion_orders.size()); }
    /// 0 for free generators, n_i for torsion ones.
    int generator_order(int i) const;

    bool operator==(const GradeGroup& o) const {
        return free_rank == o.free_rank && torsion_orders == o.torsion_orders;
    }
    bool operator!=(const GradeGroup& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// Element of a GradeGroup; torsion components always reduced into [0, n_i).
struct Grade {
    GradeGroup group;
    std::vector<long> comps;

    Grade() = default;
    Grade(GradeGroup g, std::vector<long> components);

    static Grade zero(const GradeGroup& g);
    static Grade generator(const GradeGroup& g, int i);

    bool is_zero() const;
    long operator[](size_t i) const { return comps[i]; }

    Grade operator+(const Grade& o) const;
    Grade operator-() const;
    Grade operator-(const Grade& o) const { return *this + (-o); }
    Grade scaled(long k) const;

    bool operator==(const Grade& o) const { return group == o.group && comps == o.comps; }
    bool operator!=(const Grade& o) const { return !(*this == o); }
    bool operator<(const Grade& o) const { return comps < o.comps; }

    std::string to_string() const;
};

Grade grade_add(const Grade& a, const Grade& b);

/// Twisted cocycle rho: G x G -> k*, stored by its generator pairing matrix
/// s[i][j] = rho(e_i, e_j) and extended biadditively:
/// rho(a, b) = prod_{i,j} s[i][j]^(a_i * b_j).
/// Construction validates inverse symmetry s[i][j]*s[j][i] = 1, the diagonal
/// rho(c,c) = +-1, and torsion well-definedness s[i][j]^{n} = 1.
class Cocycle {
public:
    Cocycle(GradeGroup group, std::vector<std::vector<Scalar>> pairing);

    /// rho = 1 identically.
    static Cocycle trivial(const GradeGroup& group);
    /// Quantum-plane cocycle on Z^N: s[i][j] = q for i<j, q^-1 for i>j.
    static Cocycle quantum_plane(int dimension);
    /// Clock-shift cocycle on Z_n + Z_n: rho(a,b) = eps^(a1*b2 - a2*b1).
    static Cocycle clock_shift(int n);

    const GradeGroup& group() const noexcept { return group_; }
    const std::vector<std::vector<Scalar>>& pairing() const noexcept { return pairing_; }

    Scalar eval(const Grade& a, const Grade& b) const;

    bool operator==(const Cocycle& o) const {
        return group_ == o.group_ && pairing_ == o.pairing_;
    }
    bool operator!=(const Cocycle& o) const { return !(*this == o); }

private:
    GradeGroup group_;
    std::vector<std::vector<Scalar>> pairing_;
};

/// Group homomorphism phi: G -> U(k), stored by unit values on generators.
class GradedUnitHom {
public:
    GradedUnitHom() = default; // trivial on the empty group
    GradedUnitHom(GradeGroup group, std::vector<Scalar> values);

    static GradedUnitHom trivial(const GradeGroup& group);

    const GradeGroup& group() const noexcept { return group_; }
    bool is_trivial() const;

    Scalar eval(const Grade& a) const;
    /// phi^k(a) = phi(a)^k.
    Scalar eval_power(const Grade& a, long k) const;

    bool operator==(const GradedUnitHom& o) const {
        return group_ == o.group_ && values_ == o.values_;
    }
    bool operator!=(const GradedUnitHom& o) const { return !(*this == o); }

private:
    GradeGroup group_;
    std::vector<Scalar> values_;
};

/// Bidegree in the extended grade group Zbar = Z x G: (form degree, grade).
struct Bidegree {
    long form_degree = 0;
    Grade grade;

    bool operator==(const Bidegree& o) const {
        return form_degree == o.form_degree && grade == o.grade;
    }
    bool operator!=(const Bidegree& o) const { return !(*this == o); }

    Bidegree operator+(const Bidegree& o) const {
        return {form_degree + o.form_degree, grade + o.grade};
    }

    std::string to_string() const;
};

/// Extended cocycle on Zbar = Z x G:
/// rhobar((n,a),(m,b)) = (-1)^{nm} phi^{-m}(a) phi^{n}(b) rho(a,b),
/// restricting to rho on G x G.
class ExtendedCocycle {
public:
    ExtendedCocycle(Cocycle base, GradedUnitHom phi);

    const Cocycle& base() const noexcept { return base_; }
    const GradedUnitHom& phi() const noexcept { return phi_; }

    Scalar eval(const Bidegree& a, const Bidegree& b) const;

private:
    Cocycle base_;
    GradedUnitHom phi_;
};

} // namespace rhoform
