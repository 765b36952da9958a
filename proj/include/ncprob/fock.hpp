#pragma once

#include <vector>

#include "ncprob/combinat.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/matrix.hpp"
#include "ncprob/polynomial.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// Level matrices of a Fock-space operator model truncated at depth L.
///
/// The basis of level k is e_u, |u| = k, ordered lexicographically with u(1)
/// most significant; a_i^+ e_u = e_(i,u). C[k-1] holds the diagonal of C^(k)
/// (k = 1..L); T[i-1][k] is T_i^(k) (k = 0..L).
struct FockData {
    int d = 1;
    int depth = 0;
    std::vector<std::vector<Rational>> C;
    std::vector<std::vector<Matrix>> T;

    /// Zero T, unit C: the free semicircular system.
    static FockData semicircle(int d, int depth);
    static FockData zero(int d, int depth);

    /// Throws ShapeError unless every array has its exact size d^k.
    void validate() const;

    const Rational& c(const MultiIndex& word) const;
    std::size_t level_size(int k) const;

    /// Every T_i^(k) symmetric.
    bool is_symmetric() const;
    /// T^T K = K T at each level, with K_u = prod_s C_(u(s..k)).
    bool satisfies_commutation() const;
    /// All C entries nonnegative.
    bool is_nonnegative() const;

    friend bool operator==(const FockData&, const FockData&) = default;
};

/// Univariate three-term recursion data: x P_n = P_(n+1) + beta_n P_n + gamma_n P_(n-1).
/// beta = (beta_0, beta_1, ...), gamma = (gamma_1, gamma_2, ...).
struct JacobiData {
    std::vector<Rational> beta;
    std::vector<Rational> gamma;

    friend bool operator==(const JacobiData&, const JacobiData&) = default;
};

/// <Omega, X_(u(1)) ... X_(u(n)) Omega> by applying the operators to vectors.
/// DepthError when |u| > 2L.
Rational fock_moment(const FockData& data, const MultiIndex& u);
/// All moments up to degree n as a functional.
Functional fock_functional(const FockData& data, int n);

/// The same value as a sum over Motzkin paths of products of step matrices.
Rational motzkin_moment(const FockData& data, const MultiIndex& u);

/// 1 + M(z) from the matrix continued fraction, levels at or above `cutoff`
/// replaced by the identity. The default cutoff is ceil(n/2).
NCSeries continued_fraction_moments(const FockData& data, int n);
NCSeries continued_fraction_moments(const FockData& data, int n, int cutoff);

/// Monic orthogonal polynomials P_u for |u| <= n from the recursion.
std::vector<std::pair<MultiIndex, NCPolynomial>> mops_polynomials(const FockData& data, int n);
/// <P_u, P_v> = 0 for u != v, |u|, |v| <= n, under the Fock moments.
bool mops_orthogonality_check(const FockData& data, int n);

/// T_i^(0) and C^(1) scaled by t.
FockData boolean_power_fock(const FockData& data, const Rational& t);

/// eta[x_u] read from the level matrices.
Rational boolean_cumulant_from_fock(const FockData& data, const MultiIndex& u);
NCSeries boolean_cumulants_from_fock(const FockData& data, int n);

/// Univariate Fock data: C^(k) = gamma_k, T^(k) = beta_k.
FockData fock_from_jacobi(const JacobiData& jacobi, int depth);
/// Level data of the free (resp. Boolean) product of univariate states, with
/// the unconstrained entries set to zero.
FockData free_product_fock(const std::vector<JacobiData>& factors, int depth);
FockData boolean_product_fock(const std::vector<JacobiData>& factors, int depth);

/// m_0..m_n from the tridiagonal Jacobi matrix.
std::vector<Rational> jacobi_moments(const JacobiData& jacobi, int n);
/// Classical Stieltjes fraction 1/(1 - beta_0 z - gamma_1 z^2/(1 - beta_1 z - ...)) to degree n.
NCSeries stieltjes_fraction(const JacobiData& jacobi, int n);
/// Recursion coefficients of a univariate functional by orthogonalizing
/// 1, x, x^2, ...; stops early if a norm vanishes.
JacobiData jacobi_from_moments(const Functional& mu);

/// Decomposition of symmetric matrices X_i about a unit vector Omega:
/// X_i = lambda_i + a^+(xi_i) + a^-(xi_i) + T_i.
struct BooleanFockDecomposition {
    std::size_t omega = 0;
    std::vector<Rational> lambda;
    std::vector<std::vector<Rational>> xi;
    std::vector<Matrix> T;

    /// T_i Omega = 0 and <Omega, T_i v> = 0 for every i.
    bool t_annihilates_omega() const;
    /// lambda + a^+(xi) + a^-(xi) + T rebuilds X exactly.
    bool reconstructs(const std::vector<Matrix>& x) const;
    /// eta[x_u] = lambda_i for |u| = 1, <xi_i, T_w xi_j> for u = (i, w, j).
    Rational boolean_cumulant(const MultiIndex& u) const;
    NCSeries boolean_cumulants(int n) const;
};

BooleanFockDecomposition general_boolean_fock_decompose(const std::vector<Matrix>& x, std::size_t omega);

/// Moments <Omega, X_u Omega> of a matrix model.
Functional matrix_model_functional(const std::vector<Matrix>& x, std::size_t omega, int n);

/// Moments m_0..m_n of a^+ + b a^0 + a^- + c a~ applied to the indicator of
/// [0, t) in the extended Boolean Fock space, on the invariant span of Omega
/// and the level copies of the indicator, truncated at level ceil(n/2).
std::vector<Rational> extended_boolean_fock_moments(const Rational& b, const Rational& c, const Rational& t, int n);

}  // namespace ncprob
