#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "ncprob/combinat.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/fock.hpp"
#include "ncprob/meixner.hpp"
#include "ncprob/series.hpp"

namespace testing {

using namespace ncprob;
using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        const int p = num(rng);
        if (p != 0 || allow_zero) return Rational(p, den(rng));
    }
}

inline Rational positive_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(1, 4);
    std::uniform_int_distribution<int> den(1, 2);
    return Rational(num(rng), den(rng));
}

inline NCSeries random_series(Rng& rng, int d, int n, int min_degree) {
    NCSeries f(d, n);
    for (std::size_t k = f.offset(min_degree); k < f.term_count(); ++k) f.coeff(k) = small_rational(rng);
    return f;
}

inline Functional random_functional(Rng& rng, int d, int n) {
    NCSeries m = random_series(rng, d, n, 1);
    m.set(MultiIndex(d), 1);
    return Functional(m);
}

/// Zero means and identity covariance, other moments random.
inline Functional random_standardized(Rng& rng, int d, int n) {
    NCSeries m = random_series(rng, d, n, 3);
    m.set(MultiIndex(d), 1);
    for (int i = 1; i <= d; ++i) m.set(MultiIndex(d, {i, i}), 1);
    return Functional(m);
}

inline Functional semicircle(int n) {
    std::vector<Rational> m;
    Rational catalan = 1;
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 1) {
            m.push_back(0);
        } else {
            const int j = k / 2;
            catalan = catalan * 2 * (2 * j - 1) / (j + 1);
            m.push_back(catalan);
        }
    }
    return Functional::from_moments(m);
}

inline Functional symmetric_bernoulli(int n, const Rational& variance = 1) {
    std::vector<Rational> m;
    Rational even = 1;
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 0) even *= variance;
        m.push_back(k % 2 == 0 ? even : Rational(0));
    }
    return Functional::from_moments(m);
}

/// Random Fock data satisfying the commutation relation: T = K^{-1} S with S
/// symmetric and K the induced level weights.
inline FockData random_fock(Rng& rng, int d, int depth) {
    FockData data = FockData::zero(d, depth);
    for (auto& level : data.C) {
        for (auto& c : level) c = positive_rational(rng);
    }
    for (int k = 0; k <= depth; ++k) {
        const std::size_t size = data.level_size(k);
        const std::vector<MultiIndex> words = words_of_length(d, k);
        std::vector<Rational> weight(size, Rational(1));
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t s = 0; s < words[r].size(); ++s) weight[r] *= data.c(words[r].suffix(s));
        }
        for (int i = 0; i < d; ++i) {
            Matrix t(size, size);
            for (std::size_t a = 0; a < size; ++a) {
                for (std::size_t b = a; b < size; ++b) {
                    const Rational s = small_rational(rng);
                    t(a, b) = s / weight[a];
                    t(b, a) = s / weight[b];
                }
            }
            data.T[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = t;
        }
    }
    return data;
}

/// Fully symmetric B^k_ij and C_ab = c_b, which satisfy the commutation relation.
inline MeixnerParams random_meixner(Rng& rng, int d) {
    MeixnerParams p;
    p.d = d;
    const auto n = static_cast<std::size_t>(d);
    std::map<std::vector<std::size_t>, Rational> b;
    p.T.assign(n, Matrix(n, n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::size_t> key{k, i, j};
                std::sort(key.begin(), key.end());
                auto it = b.find(key);
                if (it == b.end()) it = b.emplace(key, small_rational(rng)).first;
                p.T[k](i, j) = it->second;
            }
        }
    }
    p.C = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const Rational c = positive_rational(rng) - 1;
        for (std::size_t row = 0; row < n; ++row) p.C(row, col) = c;
    }
    return p;
}

/// Cumulants by literal enumeration: phi[x_u] = sum over pi in the family of
/// prod over blocks of kappa[x_(u|block)], solved for the one-block term.
inline NCSeries cumulants_by_enumeration(const Functional& phi, PartitionFamily family) {
    const int d = phi.alphabet();
    const int n = phi.degree_cap();
    NCSeries kappa(d, n);
    for (int len = 1; len <= n; ++len) {
        const std::vector<SetPartition> parts = enumerate_partitions(len, family);
        for (const MultiIndex& u : words_of_length(d, len)) {
            Rational value = phi.moment(u);
            for (const SetPartition& pi : parts) {
                if (pi.block_count() == 1) continue;
                Rational term = 1;
                for (const auto& block : pi.blocks()) {
                    std::vector<int> letters;
                    for (int e : block) letters.push_back(u[static_cast<std::size_t>(e - 1)]);
                    term *= kappa[MultiIndex(d, letters)];
                    if (term.is_zero()) break;
                }
                value -= term;
            }
            kappa.set(u, value);
        }
    }
    return kappa;
}

}  // namespace testing
