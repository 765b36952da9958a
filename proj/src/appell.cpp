#include "ncprob/appell.hpp"

#include <set>

#include "ncprob/error.hpp"

namespace ncprob {

NCPolynomial boolean_appell(const NCSeries& eta, const MultiIndex& u) {
    if (static_cast<int>(u.size()) > eta.degree_cap()) {
        throw DepthError("Appell polynomial of degree " + std::to_string(u.size()) + " needs cumulants beyond degree " +
                         std::to_string(eta.degree_cap()));
    }
    NCPolynomial a = NCPolynomial::monomial(u);
    for (std::size_t i = 0; i < u.size(); ++i) a.add_term(u.prefix(i), -eta[u.suffix(i)]);
    return a;
}

NCPolynomial boolean_appell(const Functional& phi, const MultiIndex& u) {
    return boolean_appell(boolean_cumulants(phi), u);
}

PolySeries appell_generating_function(const Functional& phi) {
    const int d = phi.alphabet();
    const int cap = phi.degree_cap();
    const PolySeries one = PolySeries::from_series(NCSeries::one(d, cap), d);
    const PolySeries xz = PolySeries::linear_form(identity_tuple(d, cap), d);
    const NCSeries one_minus_eta = NCSeries::one(d, cap) - boolean_cumulants(phi);
    return mul_inverse(one - xz) * PolySeries::from_series(one_minus_eta, d);
}

std::map<MultiIndex, Rational> monomial_in_appell(const Functional& phi, const MultiIndex& u) {
    std::map<MultiIndex, Rational> out;
    for (std::size_t k = 0; k <= u.size(); ++k) {
        const Rational& m = phi.moment(u.suffix(k));
        if (!m.is_zero()) out.emplace(u.prefix(k), m);
    }
    return out;
}

bool appell_recursion_check(const Functional& phi, int i, const MultiIndex& u) {
    const NCSeries eta = boolean_cumulants(phi);
    const MultiIndex iu = u.prepended(i);
    const NCPolynomial lhs = NCPolynomial::variable(phi.alphabet(), i) * boolean_appell(eta, u);
    const NCPolynomial rhs = boolean_appell(eta, iu) + NCPolynomial::constant(phi.alphabet(), eta[iu]);
    return lhs == rhs;
}

NCPolynomial difference_quotient(const NCPolynomial& f) {
    if (f.alphabet() != 1) throw ShapeError("difference quotient is univariate");
    return left_derivative(1, f);
}

namespace {

NCPolynomial x_power(int k) { return NCPolynomial::monomial(MultiIndex::repeated(1, 1, static_cast<std::size_t>(k))); }

void fail(ClauseResult& clause, int degree, const std::string& what) {
    if (!clause.passed) return;
    clause.passed = false;
    clause.counterexample = "n=" + std::to_string(degree) + ": " + what;
}

}  // namespace

std::vector<ClauseResult> univariate_appell_suite(const Functional& mu, int n) {
    if (mu.alphabet() != 1) throw ShapeError("univariate_appell_suite needs a univariate functional");
    if (n < 0 || n > mu.degree_cap()) throw DepthError("suite degree exceeds the known moments");

    // A_k from the defining properties alone: D A_k = A_(k-1) and mu[A_k] = 0.
    std::vector<NCPolynomial> a{NCPolynomial::constant(1, 1)};
    for (int k = 1; k <= n; ++k) {
        NCPolynomial next = NCPolynomial::variable(1, 1) * a.back();
        next.add_term(MultiIndex(1), -mu.evaluate(next));
        a.push_back(std::move(next));
    }
    const NCSeries eta = boolean_cumulants(mu);
    const NCSeries kappa = boolean_cumulants_lattice(mu);
    const PolySeries generating = appell_generating_function(mu);

    std::vector<ClauseResult> clauses;
    for (const char* name : {"centering", "differential recursion", "recursion", "explicit formula",
                             "generating function", "powers of x"}) {
        clauses.push_back({name, true, ""});
    }
    for (int k = 0; k <= n; ++k) {
        const Rational centre = mu.evaluate(a[static_cast<std::size_t>(k)]);
        if (centre != (k == 0 ? 1 : 0)) fail(clauses[0], k, "mu[A_n] = " + to_string(centre));

        if (k >= 1 && difference_quotient(a[static_cast<std::size_t>(k)]) != a[static_cast<std::size_t>(k - 1)]) {
            fail(clauses[1], k, "D A_n = " + difference_quotient(a[static_cast<std::size_t>(k)]).to_string());
        }

        if (k < n) {
            const NCPolynomial lhs = NCPolynomial::variable(1, 1) * a[static_cast<std::size_t>(k)];
            NCPolynomial rhs = a[static_cast<std::size_t>(k + 1)];
            rhs.add_term(MultiIndex(1), eta.coeff(static_cast<std::size_t>(k + 1)));
            if (lhs != rhs) fail(clauses[2], k, "x A_n - A_(n+1) = " + (lhs - a[static_cast<std::size_t>(k + 1)]).to_string());
        }

        NCPolynomial explicit_form = x_power(k);
        for (int j = 1; j <= k; ++j) explicit_form -= kappa.coeff(static_cast<std::size_t>(j)) * x_power(k - j);
        if (explicit_form != a[static_cast<std::size_t>(k)]) fail(clauses[3], k, "x^n - sum kappa_j x^(n-j) = " + explicit_form.to_string());

        if (generating.coeff(static_cast<std::size_t>(k)) != a[static_cast<std::size_t>(k)]) {
            fail(clauses[4], k, "[z^n] H = " + generating.coeff(static_cast<std::size_t>(k)).to_string());
        }

        NCPolynomial expansion(1);
        for (int j = 0; j <= k; ++j) expansion += mu.moment(j) * a[static_cast<std::size_t>(k - j)];
        if (expansion != x_power(k)) fail(clauses[5], k, "sum m_j A_(n-j) = " + expansion.to_string());
    }
    return clauses;
}

bool boolean_binomial_check(const Functional& phi, const MultiIndex& u) {
    std::vector<std::vector<int>> singletons;
    for (int i = 1; i <= phi.alphabet(); ++i) singletons.push_back({i});
    if (!check_boolean_independence(phi, singletons).independent()) {
        throw PreconditionError("boolean_binomial_check needs Boolean independent variables");
    }
    if (u.empty()) return boolean_appell(phi, u) == NCPolynomial::constant(phi.alphabet(), 1);
    std::size_t k = u.size() - 1;
    while (k > 0 && u[k - 1] == u.back()) --k;
    const int last = u.back();
    const Functional marginal = phi.marginal(last);
    const NCPolynomial tail = boolean_appell(marginal, MultiIndex::repeated(1, 1, u.size() - k)).relabeled(phi.alphabet(), {last});
    return boolean_appell(phi, u) == NCPolynomial::monomial(u.prefix(k)) * tail;
}

bool boolean_binomial_sum_check(const Functional& phi, const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size() || a.empty()) throw ShapeError("binomial sum check needs two nonempty words of equal length");
    const int d = phi.alphabet();
    std::set<int> letters_a(a.letters().begin(), a.letters().end());
    std::vector<int> group_a(letters_a.begin(), letters_a.end());
    std::vector<int> group_b;
    for (int i = 1; i <= d; ++i) {
        if (!letters_a.contains(i)) group_b.push_back(i);
    }
    for (int letter : b.letters()) {
        if (letters_a.contains(letter)) throw PreconditionError("the X and Y words share a variable");
    }
    if (!check_boolean_independence(phi, {group_a, group_b}).independent()) {
        throw PreconditionError("the X and Y variables are not Boolean independent");
    }

    const NCSeries eta = boolean_cumulants(phi);
    const std::size_t n = a.size();
    NCPolynomial lhs(d);
    for (unsigned choice = 0; choice < (1u << n); ++choice) {
        std::vector<int> letters;
        for (std::size_t pos = 0; pos < n; ++pos) letters.push_back((choice >> pos) & 1u ? b[pos] : a[pos]);
        lhs += boolean_appell(eta, MultiIndex(d, std::move(letters)));
    }

    NCPolynomial rhs = boolean_appell(eta, a) + boolean_appell(eta, b);
    NCPolynomial sums = NCPolynomial::constant(d, 1);  // (X_1 + Y_1) ... (X_(k-1) + Y_(k-1))
    for (std::size_t k = 1; k < n; ++k) {
        const NCPolynomial xk = NCPolynomial::variable(d, a[k - 1]);
        const NCPolynomial yk = NCPolynomial::variable(d, b[k - 1]);
        rhs += sums * yk * boolean_appell(eta, a.suffix(k));
        rhs += sums * xk * boolean_appell(eta, b.suffix(k));
        sums = sums * (xk + yk);
    }
    return lhs == rhs;
}

}  // namespace ncprob
