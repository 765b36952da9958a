#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncprob/cumulants.hpp"
#include "ncprob/polynomial.hpp"

namespace ncprob {

/// Boolean Appell polynomial A_u from the Boolean cumulant series eta:
/// A_u = x_u - sum_{i<n} x_(u(1..i)) eta[x_(u(i+1..n))].
NCPolynomial boolean_appell(const NCSeries& eta, const MultiIndex& u);
NCPolynomial boolean_appell(const Functional& phi, const MultiIndex& u);

/// H(x, z) = (1 - sum_i x_i z_i)^{-1} (1 - eta(z)) = sum_u A_u(x) z_u.
PolySeries appell_generating_function(const Functional& phi);

/// x_u = sum_k A_(u(1..k)) phi[x_(u(k+1..n))]; keys are the prefixes u(1..k).
std::map<MultiIndex, Rational> monomial_in_appell(const Functional& phi, const MultiIndex& u);

/// x_i A_u = A_(i,u) + eta[x_i x_u], as an exact polynomial identity.
bool appell_recursion_check(const Functional& phi, int i, const MultiIndex& u);

struct ClauseResult {
    std::string name;
    bool passed = true;
    /// First failing degree and a description, empty on success.
    std::string counterexample;
};

/// The six one-variable Appell clauses, for degrees 0..n of a univariate functional.
std::vector<ClauseResult> univariate_appell_suite(const Functional& mu, int n);

/// Difference quotient (Df)(x) = (f(x) - f(0)) / x in one variable.
NCPolynomial difference_quotient(const NCPolynomial& f);

/// A_u = x_(u(1..k)) A_(n-k)(x_(u(n))) for a state in which every variable is
/// Boolean independent of the others (PreconditionError otherwise).
bool boolean_binomial_check(const Functional& phi, const MultiIndex& u);

/// A(X_1 + Y_1, ..., X_n + Y_n) expanded by multilinearity and compared with
/// the four-term right-hand side, where X_k = x_(a(k)), Y_k = x_(b(k)) and the
/// letters of a and b form Boolean independent groups.
bool boolean_binomial_sum_check(const Functional& phi, const MultiIndex& a, const MultiIndex& b);

/// Symbolic Kailath-Segall expansion. Symbols X(f_S) are indexed by nonempty
/// subsets S of {1..n} (bit i-1 for f_i); psi[f_S] appears as a formal factor.
namespace kailath_segall {

using Subset = std::uint32_t;
using SymbolWord = std::vector<Subset>;

struct Term {
    SymbolWord symbols;
    /// Subset whose psi-moment multiplies the term, 0 for none.
    Subset psi = 0;
    friend auto operator<=>(const Term&, const Term&) = default;
};

using Expansion = std::map<Term, long long>;

/// W(f_(S_1), ..., f_(S_k)) by the defining recursion.
Expansion wick(const std::vector<Subset>& arguments);

/// A(X(f_1), ..., X(f_n)) = sum over interval partitions of W(products over blocks).
Expansion appell_via_wick(int n);

/// The same polynomial from the explicit Appell formula, using
/// eta[X(f_i) ... X(f_j)] = psi[f_i ... f_j] for j > i and eta[X(f_i)] = 0.
Expansion appell_via_cumulants(int n);

/// True iff some surviving term uses a symbol X(f_S) with |S| >= 2.
bool has_product_symbols(const Expansion& e);

std::string to_string(const Expansion& e);

}  // namespace kailath_segall

}  // namespace ncprob
