#pragma once

#include <vector>

#include "ncprob/cumulants.hpp"
#include "ncprob/fock.hpp"
#include "ncprob/matrix.hpp"

namespace ncprob {

/// Free/Boolean Meixner parameters: T[k-1] holds B^k_ij, C holds C_ij (the
/// diagonal of the d^2 x d^2 matrix, indexed by pairs).
struct MeixnerParams {
    int d = 1;
    std::vector<Matrix> T;
    Matrix C;

    static MeixnerParams univariate(const Rational& b, const Rational& c);

    void validate() const;
    const Rational& B(int k, int i, int j) const { return T[static_cast<std::size_t>(k - 1)](static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }
    bool is_symmetric() const;
    /// (T_i (x) I) C = C (T_i (x) I).
    bool satisfies_commutation() const;
    /// I + C >= 0 entrywise.
    bool is_positive() const;

    friend bool operator==(const MeixnerParams&, const MeixnerParams&) = default;
};

/// C^(1) = I, C^(k)_u = 1 + C_(u(1),u(2)), T_i^(0) = 0, T_i^(k) = T_i (x) I.
FockData meixner_to_fock(const MeixnerParams& p, int depth);
/// Moments up to degree n of the Meixner state.
Functional meixner_functional(const MeixnerParams& p, int n);

/// Throws PreconditionError unless phi[x_i] = 0 and phi[x_i x_j] = delta_ij.
void require_standardized(const Functional& phi);

struct PdeResidual {
    int i = 1;
    int j = 1;
    /// Truncated at degree N - 2, the range where it is fully determined.
    NCSeries residual;
};

/// D_i D_j R - delta_ij - sum_k B^k_ij D_k R - C_ij D_i R D_j R for every (i, j).
std::vector<PdeResidual> free_pde_residual(const Functional& phi, const MeixnerParams& p);
/// The same with eta in place of R and 1 + C_ij in place of C_ij.
std::vector<PdeResidual> boolean_pde_residual(const Functional& phi, const MeixnerParams& p);
/// Smallest degree at which any residual is nonzero, -1 if all vanish.
int lowest_residual_degree(const std::vector<PdeResidual>& residuals);

struct ShefferReport {
    /// R(U) = M(V).
    bool r_u_equals_m_v = false;
    /// V = (1 + R(U))^{-1} U.
    bool v_recovered = false;
    /// (1 - x.U + R(U))^{-1} = (1 - x.V)^{-1} (1 - eta(V)).
    bool generating_functions_agree = false;

    bool passed() const { return r_u_equals_m_v && v_recovered && generating_functions_agree; }
};

/// U = (1 + M(V)) V for the given V (default V = z) and both sides compared.
ShefferReport sheffer_coincidence_check(const Functional& phi);
ShefferReport sheffer_coincidence_check(const Functional& phi, const SeriesTuple& v);

/// Coefficients of (1 - x.U + R(U))^{-1} with U = (DR)^{<-1>} (free) and of
/// (1 - x.V)^{-1}(1 - eta(V)) with V = (D eta)^{<-1>} (Boolean), |u| <= n.
std::vector<NCPolynomial> free_meixner_polynomials(const Functional& phi, int n);
std::vector<NCPolynomial> boolean_meixner_polynomials(const Functional& phi, int n);
/// Pairwise orthogonality of such a family under phi.
bool pairwise_orthogonal(const Functional& phi, const std::vector<NCPolynomial>& family);

/// C -> C + t (every entry).
MeixnerParams bt_transform_params(const MeixnerParams& p, const Rational& t);
/// (phi^{boxplus (1+t)})^{uplus 1/(1+t)}; DomainError at t = -1.
Functional bt_transform_series(const Functional& phi, const Rational& t);

/// C -> C + 1.
MeixnerParams bp_bijection_params(const MeixnerParams& p);
/// psi with R_psi = eta_phi.
Functional bp_bijection_series(const Functional& phi);

/// phi_(c,b): Jacobi parameters beta = (0, b, b, ...), gamma = (1, 1 + c, 1 + c, ...).
Functional univariate_meixner(const Rational& b, const Rational& c, int n);
/// (1/(1+beta^2)) delta_beta + (beta^2/(1+beta^2)) delta_(-1/beta); DomainError at beta = 0.
Functional bernoulli_functional(const Rational& beta, int n);

/// X, Y with eta_X = alpha z^2/(1 - a z), eta_Y = (1 - alpha) z^2/(1 - a z),
/// so X + Y (Boolean independent) has M = z^2/(1 - a z - z^2).
std::pair<Functional, Functional> laha_lukacs_pair(const Rational& alpha, const Rational& a, int n);

struct LahaLukacsReport {
    Rational alpha;
    Rational beta;
    /// phi[S^k V^2] = alpha beta phi[S^(k+2)] for k = 0..n.
    bool variance_identity = false;
    /// kappa_m(X) = alpha kappa_m(S), kappa_m(Y) = beta kappa_m(S).
    bool cumulants_proportional = false;
    /// eta[S, ..., S, V, V] = alpha beta kappa_m(S).
    bool mixed_cumulants = false;
    /// M_S(z)(1 - a z - z^2) = z^2 with a = phi[S^3].
    bool moment_relation = false;

    bool passed() const { return variance_identity && cumulants_proportional && mixed_cumulants && moment_relation; }
};

/// X and Y are joined by the Boolean product; S = X + Y, V = beta X - alpha Y.
LahaLukacsReport laha_lukacs_check(const Functional& x, const Functional& y, int n);

}  // namespace ncprob
