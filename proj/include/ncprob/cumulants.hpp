#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncprob/combinat.hpp"
#include "ncprob/polynomial.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// A unital linear functional on polynomials in x_1..x_d, known through its
/// moments phi[x_u] for |u| <= N. No positivity is assumed.
class Functional {
public:
    /// `moments` holds phi[x_u] at z_u, including the constant term phi[1] = 1
    /// (PreconditionError otherwise).
    explicit Functional(NCSeries moments);

    static Functional delta0(int alphabet, int degree_cap);
    /// Univariate functional from m_1..m_N.
    static Functional from_moments(const std::vector<Rational>& m);

    int alphabet() const noexcept { return moments_.alphabet(); }
    int degree_cap() const noexcept { return moments_.degree_cap(); }

    const Rational& moment(const MultiIndex& word) const;
    /// m_n of a univariate functional.
    const Rational& moment(int n) const;

    /// 1 + M(z).
    const NCSeries& moment_table() const noexcept { return moments_; }
    /// M(z) = sum_{u != empty} phi[x_u] z_u.
    NCSeries moment_series() const;

    /// Distribution of x_i alone, as a univariate functional.
    Functional marginal(int i) const;

    /// phi[P]; the polynomial degree must not exceed N.
    Rational evaluate(const NCPolynomial& p) const;
    /// <P, Q>_phi = phi[P* Q].
    Rational inner(const NCPolynomial& p, const NCPolynomial& q) const;

    friend bool operator==(const Functional&, const Functional&) = default;

private:
    NCSeries moments_;
};

/// Boolean cumulants eta[x_u], |u| <= N, by the interval-partition recursion.
NCSeries boolean_cumulants_lattice(const Functional& phi);
/// eta(z) = 1 - (1 + M(z))^{-1}.
NCSeries boolean_cumulants(const Functional& phi);
/// Inverse of boolean_cumulants: M = (1 - eta)^{-1} - 1. eta(0) must vanish.
Functional moments_from_boolean_cumulants(const NCSeries& eta);

/// Free cumulants R[x_u] by the non-crossing-partition recursion.
NCSeries free_cumulants_lattice(const Functional& phi);
/// Solves R(z_1(1+M), ..., z_d(1+M)) = M.
NCSeries free_cumulants(const Functional& phi);
Functional moments_from_free_cumulants(const NCSeries& r);

Functional boolean_convolve(const Functional& phi, const Functional& psi);
Functional boolean_power(const Functional& phi, const Rational& t);
Functional free_convolve(const Functional& phi, const Functional& psi);
Functional free_power(const Functional& phi, const Rational& t);

/// Product of functionals on disjoint variable blocks: the factors' variables
/// are numbered consecutively in the result.
Functional boolean_product(const std::vector<Functional>& factors);
Functional free_product(const std::vector<Functional>& factors);

struct IndependenceReport {
    /// Every Boolean cumulant whose word meets two groups vanishes.
    bool mixed_cumulants_vanish = true;
    /// phi of a word equals the product of phi over its maximal single-group runs.
    bool factorizes = true;
    std::optional<MultiIndex> cumulant_witness;
    std::optional<MultiIndex> factorization_witness;

    bool independent() const { return mixed_cumulants_vanish && factorizes; }
};

/// Tests Boolean independence of the variable groups (a partition of {1..d},
/// 1-based letters) up to degree N by both criteria.
IndependenceReport check_boolean_independence(const Functional& phi, const std::vector<std::vector<int>>& groups);

/// The conditionally free C-transform of the pair (mu, nu), both univariate:
/// C(z(1 + M_nu)) (1 + M_mu) = M_mu (1 + M_nu).
NCSeries cfree_c_transform(const Functional& mu, const Functional& nu);
/// Recovers mu from its C-transform and nu.
Functional cfree_first_component(const NCSeries& c, const Functional& nu);
/// (mu1, nu1) and (mu2, nu2) combined: C-transforms add, nu's convolve freely.
std::pair<Functional, Functional> cfree_convolve(const std::pair<Functional, Functional>& a,
                                                 const std::pair<Functional, Functional>& b);

}  // namespace ncprob
