#include <doctest.h>

#include "ncprob/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

NCSeries z(int d, int n, int i) { return NCSeries::variable(d, n, i); }
MultiIndex w(int d, std::initializer_list<int> letters) { return MultiIndex(d, letters); }

}  // namespace

TEST_CASE("products are noncommutative") {
    const NCSeries a = z(2, 3, 1) * z(2, 3, 2);
    CHECK(a[w(2, {1, 2})] == 1);
    CHECK(a[w(2, {2, 1})] == 0);
    const NCSeries one = NCSeries::one(2, 3);
    const NCSeries t = (one + z(2, 3, 1)) * (one - z(2, 3, 1));
    CHECK(t == one - z(2, 3, 1) * z(2, 3, 1));
}

TEST_CASE("geometric series") {
    NCSeries g(1, 4);
    for (std::size_t k = 0; k < g.term_count(); ++k) g.coeff(k) = 1;
    const NCSeries sq = g * g;
    for (int k = 0; k <= 4; ++k) CHECK(sq[MultiIndex::repeated(1, 1, static_cast<std::size_t>(k))] == k + 1);
    CHECK(mul_inverse(NCSeries::one(1, 4) - z(1, 4, 1)) == g);
    CHECK(mul_inverse(NCSeries::constant(2, 3, 2)) == NCSeries::constant(2, 3, Rational(1, 2)));
    const NCSeries all = mul_inverse(NCSeries::one(2, 4) - z(2, 4, 1) - z(2, 4, 2));
    for (std::size_t k = 0; k < all.term_count(); ++k) CHECK(all.coeff(k) == 1);
    CHECK_THROWS_AS(mul_inverse(z(1, 3, 1)), NotInvertibleError);
}

TEST_CASE("left derivative") {
    const NCSeries f = NCSeries::monomial(4, w(2, {1, 2, 1}));
    CHECK(left_derivative(1, f) == NCSeries::monomial(4, w(2, {2, 1})));
    CHECK(left_derivative(2, f).is_zero());
    CHECK(left_derivative(1, NCSeries::one(2, 3)).is_zero());
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const NCSeries a = random_series(rng, 2, 5, 0);
        const NCSeries b = random_series(rng, 2, 5, 0);
        const NCSeries lhs = left_derivative(1, a * b).truncated(4);
        const NCSeries rhs = left_derivative(1, a) * b + a.constant_term() * left_derivative(1, b);
        CHECK(lhs == rhs.truncated(4));
    }
}

TEST_CASE("substitution") {
    const NCSeries zz = z(1, 4, 1) * z(1, 4, 1);
    const NCSeries s = substitute(zz, {z(1, 4, 1) + zz});
    CHECK(s == zz + 2 * (zz * z(1, 4, 1)) + zz * zz);
    Rng rng(12);
    const NCSeries f = random_series(rng, 2, 5, 0);
    CHECK(substitute(f, identity_tuple(2, 5)) == f);
    const NCSeries arg = z(2, 5, 1) * (NCSeries::one(2, 5) + random_series(rng, 2, 5, 1));
    CHECK(substitute(z(2, 5, 1), {arg, z(2, 5, 2)}) == arg);
    CHECK_THROWS_AS(substitute(f, {NCSeries::one(2, 5), z(2, 5, 2)}), SubstitutionError);
}

TEST_CASE("compositional inverse") {
    const SeriesTuple id = identity_tuple(2, 5);
    CHECK(comp_inverse(id) == id);
    const NCSeries x = z(1, 5, 1);
    const SeriesTuple h = comp_inverse({x + x * x});
    const Rational expected[] = {0, 1, -1, 2, -5, 14};
    for (int k = 0; k <= 5; ++k) CHECK(h[0][MultiIndex::repeated(1, 1, static_cast<std::size_t>(k))] == expected[k]);
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        SeriesTuple g;
        for (int i = 1; i <= 2; ++i) g.push_back(z(2, 5, i) + random_series(rng, 2, 5, 2));
        const SeriesTuple inv = comp_inverse(g);
        CHECK(compose(g, inv) == id);
        CHECK(comp_inverse(inv) == g);
    }
    CHECK_THROWS_AS(comp_inverse({2 * x}), UnsupportedLinearPartError);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(NCSeries(1, 3) + NCSeries(2, 3), ShapeError);
    CHECK_THROWS_AS(NCSeries(1, 3) * NCSeries(1, 4), ShapeError);
}
