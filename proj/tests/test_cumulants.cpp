#include <doctest.h>

#include "ncprob/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

MultiIndex pow1(int k) { return MultiIndex::repeated(1, 1, static_cast<std::size_t>(k)); }
MultiIndex w(int d, std::initializer_list<int> letters) { return MultiIndex(d, letters); }

}  // namespace

TEST_CASE("Boolean cumulants of basic laws") {
    const NCSeries eta = boolean_cumulants_lattice(symmetric_bernoulli(6));
    for (int k = 1; k <= 6; ++k) CHECK(eta[pow1(k)] == (k == 2 ? 1 : 0));
    const NCSeries sc = boolean_cumulants(semicircle(6));
    const Rational expected[] = {0, 0, 1, 0, 1, 0, 2};
    for (int k = 1; k <= 6; ++k) CHECK(sc[pow1(k)] == expected[k]);

    NCSeries m(1, 6);
    m.set(pow1(0), 1);
    m.set(pow1(2), 1);
    const NCSeries e = boolean_cumulants(Functional(m));
    CHECK(e[pow1(2)] == 1);
    CHECK(e[pow1(4)] == -1);
    CHECK(e[pow1(6)] == 1);
    CHECK(moments_from_boolean_cumulants(NCSeries(2, 4)) == Functional::delta0(2, 4));
}

TEST_CASE("free cumulants of basic laws") {
    const NCSeries r = free_cumulants_lattice(symmetric_bernoulli(6));
    CHECK(r[pow1(2)] == 1);
    CHECK(r[pow1(4)] == -1);
    const NCSeries sc = free_cumulants(semicircle(8));
    for (int k = 1; k <= 8; ++k) CHECK(sc[pow1(k)] == (k == 2 ? 1 : 0));
    Rng rng(21);
    const Functional phi = random_functional(rng, 2, 4);
    for (int i = 1; i <= 2; ++i) {
        CHECK(free_cumulants(phi)[w(2, {i})] == phi.moment(w(2, {i})));
        CHECK(boolean_cumulants(phi)[w(2, {i})] == phi.moment(w(2, {i})));
    }
}

TEST_CASE("lattice, generating-function and enumeration agree") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const Functional phi = random_functional(rng, 2, trial < 5 ? 6 : 5);
        const NCSeries eta = boolean_cumulants(phi);
        const NCSeries r = free_cumulants(phi);
        CHECK(boolean_cumulants_lattice(phi) == eta);
        CHECK(free_cumulants_lattice(phi) == r);
        if (trial < 3) {
            CHECK(cumulants_by_enumeration(phi, PartitionFamily::Interval) == eta);
            CHECK(cumulants_by_enumeration(phi, PartitionFamily::NonCrossing) == r);
        }
        CHECK(moments_from_boolean_cumulants(eta) == phi);
        CHECK(moments_from_free_cumulants(r) == phi);
    }
}

TEST_CASE("convolutions and powers") {
    const Functional b2 = boolean_power(semicircle(4), 2);
    CHECK(b2.moment(2) == 2);
    CHECK(b2.moment(4) == 6);
    Rng rng(23);
    const Functional phi = random_functional(rng, 2, 5);
    CHECK(boolean_convolve(phi, Functional::delta0(2, 5)) == phi);
    CHECK(free_convolve(phi, Functional::delta0(2, 5)) == phi);
    const Functional arcsine = free_power(symmetric_bernoulli(6), 2);
    CHECK(arcsine.moment(2) == 2);
    CHECK(arcsine.moment(4) == 6);
    CHECK(arcsine.moment(6) == 20);
    CHECK(boolean_power(boolean_power(phi, Rational(1, 3)), 3) == phi);
    CHECK(free_convolve(phi, phi) == free_power(phi, 2));
    CHECK(boolean_convolve(phi, phi) == boolean_power(phi, 2));
}

TEST_CASE("products") {
    const Functional bb = boolean_product({symmetric_bernoulli(4), symmetric_bernoulli(4)});
    CHECK(bb.moment(w(2, {1, 2, 1, 2})) == 0);
    CHECK(bb.moment(w(2, {1, 1, 2, 2})) == 1);
    CHECK(boolean_product({Functional::delta0(1, 4), Functional::delta0(1, 4)}) == Functional::delta0(2, 4));
    const Functional ss = free_product({semicircle(4), semicircle(4)});
    CHECK(ss.moment(w(2, {1, 2, 1, 2})) == 0);
    CHECK(ss.moment(w(2, {1, 1, 2, 2})) == 1);
    CHECK(ss.moment(w(2, {1, 2, 2, 1})) == 1);
}

TEST_CASE("Boolean independence") {
    Rng rng(24);
    const Functional a = random_functional(rng, 1, 5);
    const Functional b = random_functional(rng, 1, 5);
    CHECK(check_boolean_independence(boolean_product({a, b}), {{1}, {2}}).independent());
    const IndependenceReport fr = check_boolean_independence(free_product({semicircle(4), semicircle(4)}), {{1}, {2}});
    CHECK_FALSE(fr.independent());
    REQUIRE(fr.cumulant_witness.has_value());
    CHECK(fr.cumulant_witness->size() == 4);
    CHECK_THROWS_AS(check_boolean_independence(boolean_product({a, b}), {{1}}), ShapeError);
}

TEST_CASE("conditionally free C-transform") {
    Rng rng(25);
    const Functional mu = random_functional(rng, 1, 6);
    const Functional nu = random_functional(rng, 1, 6);
    CHECK(cfree_c_transform(mu, Functional::delta0(1, 6)) == boolean_cumulants(mu));
    CHECK(cfree_c_transform(mu, mu) == free_cumulants(mu));
    CHECK(cfree_first_component(cfree_c_transform(mu, nu), nu) == mu);
    const Functional sc = semicircle(6);
    const Functional recovered = cfree_first_component(2 * free_cumulants(sc), sc);
    CHECK(recovered == boolean_power(sc, 2));
    const Functional mu2 = random_functional(rng, 1, 6);
    const Functional nu2 = random_functional(rng, 1, 6);
    const auto [m, n] = cfree_convolve({mu, nu}, {mu2, nu2});
    CHECK(n == free_convolve(nu, nu2));
    CHECK(cfree_c_transform(m, n) == cfree_c_transform(mu, nu) + cfree_c_transform(mu2, nu2));
}

TEST_CASE("functional preconditions") {
    CHECK_THROWS_AS(Functional(NCSeries(1, 3)), PreconditionError);
    CHECK_THROWS_AS(semicircle(3).moment(4), DepthError);
}
