#include "ncprob/error.hpp"
#include "ncprob/fock.hpp"

namespace ncprob {

std::vector<Rational> jacobi_moments(const JacobiData& jacobi, int n) {
    if (n < 0) throw DomainError("number of moments must be nonnegative");
    const int levels = n / 2;
    if (static_cast<int>(jacobi.gamma.size()) < levels || static_cast<int>(jacobi.beta.size()) < (n + 1) / 2) {
        throw DepthError("Jacobi data too short for " + std::to_string(n) + " moments");
    }
    auto beta = [&](int k) { return k < static_cast<int>(jacobi.beta.size()) ? jacobi.beta[static_cast<std::size_t>(k)] : Rational(0); };
    // Coordinates of x^m P_0 in the basis P_0..P_levels; x P_k = P_(k+1) + beta_k P_k + gamma_k P_(k-1).
    std::vector<Rational> v(static_cast<std::size_t>(levels) + 1);
    v[0] = 1;
    std::vector<Rational> moments{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<Rational> next(v.size());
        for (int k = 0; k <= levels; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            if (v[ku].is_zero()) continue;
            if (k + 1 <= levels) next[ku + 1] += v[ku];
            next[ku] += beta(k) * v[ku];
            if (k >= 1) next[ku - 1] += jacobi.gamma[ku - 1] * v[ku];
        }
        v = std::move(next);
        moments.push_back(v[0]);
    }
    return moments;
}

NCSeries stieltjes_fraction(const JacobiData& jacobi, int n) {
    const int levels = (n + 1) / 2;
    if (static_cast<int>(jacobi.beta.size()) < levels || static_cast<int>(jacobi.gamma.size()) < levels) {
        throw DepthError("Jacobi data too short for a fraction of degree " + std::to_string(n));
    }
    const NCSeries z = NCSeries::variable(1, n, 1);
    const NCSeries one = NCSeries::one(1, n);
    NCSeries tail = one;
    for (int k = levels - 1; k >= 0; --k) {
        const auto ku = static_cast<std::size_t>(k);
        tail = mul_inverse(one - jacobi.beta[ku] * z - jacobi.gamma[ku] * (z * z * tail));
    }
    return tail;
}

JacobiData jacobi_from_moments(const Functional& mu) {
    if (mu.alphabet() != 1) throw ShapeError("Jacobi parameters need a univariate functional");
    const int n = mu.degree_cap();
    const NCPolynomial x = NCPolynomial::variable(1, 1);
    JacobiData out;
    NCPolynomial previous(1);
    NCPolynomial current = NCPolynomial::constant(1, 1);
    Rational norm = 1;
    for (int k = 0; 2 * k + 1 <= n; ++k) {
        const Rational beta = mu.evaluate(x * current * current) / norm;
        out.beta.push_back(beta);
        if (2 * k + 2 > n) break;
        NCPolynomial next = (x - NCPolynomial::constant(1, beta)) * current;
        if (k >= 1) next -= out.gamma.back() * previous;
        const Rational next_norm = mu.evaluate(next * next);
        out.gamma.push_back(next_norm / norm);
        if (next_norm.is_zero()) break;
        previous = std::move(current);
        current = std::move(next);
        norm = next_norm;
    }
    return out;
}

}  // namespace ncprob
