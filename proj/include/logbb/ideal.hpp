#pragma once

#include "logbb/mpoly.hpp"

#include <optional>

namespace logbb {

/// Polynomial ideal given by generators. Generator order is irrelevant to
/// every query.
struct Ideal {
    AmbientPtr amb;
    std::vector<MPoly> gens;
};

struct GbBudget {
    long max_reductions = 2'000'000;
};

/// Reduced Groebner basis with an exact cofactor matrix: for every i,
/// basis[i] = sum_j cofactors[i][j] * gens[j].
struct GroebnerData {
    AmbientPtr amb;
    MonomialOrder order;
    std::vector<MPoly> gens; // original generators
    std::vector<MPoly> basis;
    std::vector<std::vector<MPoly>> cofactors;
};

GroebnerData groebner(const Ideal& I, MonomialOrder order = MonomialOrder::grevlex(),
                      const GbBudget& budget = {});

/// Normal form plus an exact lift over the ORIGINAL generators:
/// f = sum_i lift[i] * gens[i] + normal_form, and no term of normal_form is
/// divisible by a basis head term.
struct Reduction {
    MPoly normal_form;
    std::vector<MPoly> lift;
};

Reduction reduce(const MPoly& f, const GroebnerData& G);

/// Cofactor row with f = sum_i row[i] * gens[i], or nullopt when f is not a
/// member.
std::optional<std::vector<MPoly>> member(const MPoly& f, const Ideal& I);

/// (I : s^infinity) via a single auxiliary variable and block elimination.
Ideal saturate(const Ideal& I, const MPoly& s);

/// Vector-space dimension of ambient/I (standard monomial count), nullopt
/// when the quotient is not finite-dimensional.
std::optional<long> quotient_dim(const Ideal& I);

/// Local quotient dimension at a rational point, by translating and adding
/// powers of the maximal ideal until two consecutive dimensions agree.
/// Throws NotIsolated when no stabilization occurs up to `cap`.
long local_multiplicity(const Ideal& I, std::span<const Rat> p, int cap = 24);

/// Multivariate gcd over Q, computed through the lcm by principal-ideal
/// intersection (elimination). Result is monic; gcd with 0 returns the other
/// argument.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// gcd(f, all partials of f) is constant.
bool is_squarefree(const MPoly& f);

} // namespace logbb
