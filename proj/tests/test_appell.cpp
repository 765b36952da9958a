#include <doctest.h>

#include "ncprob/appell.hpp"
#include "ncprob/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

MultiIndex pow1(int k) { return MultiIndex::repeated(1, 1, static_cast<std::size_t>(k)); }
NCPolynomial xpow(int k, const Rational& c = 1) { return NCPolynomial::monomial(pow1(k), c); }

}  // namespace

TEST_CASE("Appell polynomials of basic laws") {
    CHECK(boolean_appell(Functional::delta0(2, 4), MultiIndex(2, {1, 2, 2})) == NCPolynomial::monomial(MultiIndex(2, {1, 2, 2})));
    const Functional sc = semicircle(6);
    CHECK(boolean_appell(sc, pow1(2)) == xpow(2) - xpow(0));
    CHECK(boolean_appell(sc, pow1(3)) == xpow(3) - xpow(1));
    CHECK(boolean_appell(sc, pow1(4)) == xpow(4) - xpow(2) - xpow(0));
    const Functional bern = symmetric_bernoulli(6);
    for (int n = 2; n <= 6; ++n) CHECK(boolean_appell(bern, pow1(n)) == xpow(n) - xpow(n - 2));
}

TEST_CASE("generating function") {
    const PolySeries h0 = appell_generating_function(Functional::delta0(2, 4));
    for (const MultiIndex& u : words_up_to(2, 4)) CHECK(h0[u] == NCPolynomial::monomial(u));
    const PolySeries hb = appell_generating_function(symmetric_bernoulli(5));
    const NCSeries z = NCSeries::variable(1, 5, 1);
    const NCSeries one = NCSeries::one(1, 5);
    const PolySeries expected = mul_inverse(PolySeries::from_series(one, 1) - PolySeries::linear_form({z}, 1)) *
                                PolySeries::from_series(one - z * z, 1);
    CHECK(hb == expected);
    Rng rng(31);
    const Functional phi = random_functional(rng, 2, 5);
    const PolySeries h = appell_generating_function(phi);
    std::uniform_int_distribution<std::size_t> pick(0, h.term_count() - 1);
    const WordIndexer idx(2, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const MultiIndex u = idx.word(pick(rng));
        CHECK(h[u] == boolean_appell(phi, u));
    }
}

TEST_CASE("expansions and recursions") {
    Rng rng(32);
    const Functional mu = random_functional(rng, 1, 4);
    const auto expansion = monomial_in_appell(mu, pow1(2));
    NCPolynomial rebuilt(1);
    for (const auto& [v, c] : expansion) rebuilt += c * boolean_appell(mu, v);
    CHECK(rebuilt == xpow(2));
    CHECK(expansion.at(pow1(1)) == mu.moment(1));
    CHECK(expansion.at(pow1(0)) == mu.moment(2));

    const Functional phi = random_functional(rng, 2, 5);
    for (const MultiIndex& u : words_up_to(2, 4)) {
        for (int i = 1; i <= 2; ++i) CHECK(appell_recursion_check(phi, i, u));
        NCPolynomial sum(2);
        for (const auto& [v, c] : monomial_in_appell(phi, u)) sum += c * boolean_appell(phi, v);
        CHECK(sum == NCPolynomial::monomial(u));
        if (!u.empty()) CHECK(phi.evaluate(boolean_appell(phi, u)).is_zero());
        const NCPolynomial a = boolean_appell(phi, u);
        for (int i = 1; i <= 2; ++i) {
            const NCPolynomial expected = !u.empty() && u.front() == i ? boolean_appell(phi, u.suffix(1)) : NCPolynomial(2);
            CHECK(left_derivative(i, a) == expected);
        }
    }
}

TEST_CASE("univariate suite") {
    for (const ClauseResult& r : univariate_appell_suite(Functional::delta0(1, 6), 6)) CHECK_MESSAGE(r.passed, r.name);
    for (const ClauseResult& r : univariate_appell_suite(semicircle(6), 4)) CHECK_MESSAGE(r.passed, r.name);
    CHECK(univariate_appell_suite(semicircle(6), 4).size() == 6);
    for (int n = 1; n <= 5; ++n) CHECK(difference_quotient(xpow(n)) == xpow(n - 1));
}

TEST_CASE("Boolean binomial property") {
    Rng rng(33);
    const Functional phi = boolean_product({random_functional(rng, 1, 5), random_functional(rng, 1, 5)});
    CHECK(boolean_binomial_check(phi, MultiIndex(2, {1, 2, 2})));
    CHECK(boolean_binomial_check(phi, MultiIndex(2, {2, 1})));
    CHECK(boolean_binomial_check(phi, MultiIndex(2, {1, 1, 1})));
    const NCPolynomial a21 = boolean_appell(phi, MultiIndex(2, {2, 1}));
    const NCPolynomial x2 = NCPolynomial::variable(2, 2);
    const NCPolynomial a1 = NCPolynomial::variable(2, 1) - NCPolynomial::constant(2, phi.moment(MultiIndex(2, {1})));
    CHECK(a21 == x2 * a1);
    CHECK_THROWS_AS(boolean_binomial_check(free_product({semicircle(4), semicircle(4)}), MultiIndex(2, {1, 2})),
                    PreconditionError);

    const Functional four = boolean_product({random_functional(rng, 2, 4), random_functional(rng, 2, 4)});
    CHECK(boolean_binomial_sum_check(four, MultiIndex(4, {1, 2}), MultiIndex(4, {3, 4})));
    CHECK(boolean_binomial_sum_check(four, MultiIndex(4, {1, 1, 2}), MultiIndex(4, {3, 4, 4})));
}

TEST_CASE("Kailath-Segall expansion") {
    using namespace kailath_segall;
    const Expansion a1 = appell_via_wick(1);
    REQUIRE(a1.size() == 1);
    CHECK(a1.begin()->first.symbols == SymbolWord{1});
    const Expansion a2 = appell_via_wick(2);
    Expansion expected;
    expected[Term{{1, 2}, 0}] = 1;
    expected[Term{{}, 3}] = -1;
    CHECK(a2 == expected);
    for (int n = 1; n <= 5; ++n) {
        const Expansion a = appell_via_wick(n);
        CHECK_FALSE(has_product_symbols(a));
        CHECK(a == appell_via_cumulants(n));
    }
}
