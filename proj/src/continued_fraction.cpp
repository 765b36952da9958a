#include <algorithm>

#include "ncprob/error.hpp"
#include "ncprob/fock.hpp"

namespace ncprob {
namespace {

using SeriesMatrix = std::vector<std::vector<NCSeries>>;

SeriesMatrix identity_block(std::size_t size, int d, int n) {
    SeriesMatrix m(size, std::vector<NCSeries>(size, NCSeries(d, n)));
    for (std::size_t r = 0; r < size; ++r) m[r][r] = NCSeries::one(d, n);
    return m;
}

}  // namespace

NCSeries continued_fraction_moments(const FockData& data, int n) {
    return continued_fraction_moments(data, n, (n + 1) / 2);
}

NCSeries continued_fraction_moments(const FockData& data, int n, int cutoff) {
    data.validate();
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (cutoff < (n + 1) / 2 || cutoff > data.depth) {
        throw DepthError("continued fraction to degree " + std::to_string(n) + " needs a cutoff in [" +
                         std::to_string((n + 1) / 2) + ", " + std::to_string(data.depth) + "], got " +
                         std::to_string(cutoff));
    }
    const int d = data.d;
    std::vector<NCSeries> z;
    for (int i = 1; i <= d; ++i) z.push_back(NCSeries::variable(d, n, i));

    SeriesMatrix below = identity_block(data.level_size(cutoff), d, n);  // G at level k + 1
    for (int k = cutoff - 1; k >= 0; --k) {
        // Level k contributes only through words with 2k letters spent on reaching it.
        const int budget = std::max(n - 2 * k, 0);
        const std::size_t size = data.level_size(k);
        SeriesMatrix step(size, std::vector<NCSeries>(size, NCSeries(d, n)));
        for (std::size_t w = 0; w < size; ++w) {
            for (std::size_t v = 0; v < size; ++v) {
                NCSeries& s = step[w][v];
                for (int i = 1; i <= d; ++i) {
                    const Rational& t = data.T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)](w, v);
                    if (!t.is_zero()) s += t * z[static_cast<std::size_t>(i - 1)];
                }
                if (budget < 2) continue;
                // Excursion z_j [C^(k+1) G_(k+1)]_((j,w),(l,v)) z_l through level k + 1.
                for (int j = 1; j <= d; ++j) {
                    const std::size_t jw = static_cast<std::size_t>(j - 1) * size + w;
                    const Rational& c = data.C[static_cast<std::size_t>(k)][jw];
                    if (c.is_zero()) continue;
                    for (int l = 1; l <= d; ++l) {
                        const std::size_t lv = static_cast<std::size_t>(l - 1) * size + v;
                        const NCSeries& inner = below[jw][lv];
                        if (inner.is_zero()) continue;
                        const NCSeries left = multiply_up_to(z[static_cast<std::size_t>(j - 1)], inner, budget - 1);
                        s += c * multiply_up_to(left, z[static_cast<std::size_t>(l - 1)], budget);
                    }
                }
            }
        }
        // G = (I - S)^{-1} by G <- I + S G; S has no constant term.
        SeriesMatrix g = identity_block(size, d, n);
        for (int pass = 0; pass < budget; ++pass) {
            SeriesMatrix next = identity_block(size, d, n);
            for (std::size_t w = 0; w < size; ++w) {
                for (std::size_t v = 0; v < size; ++v) {
                    for (std::size_t x = 0; x < size; ++x) {
                        if (step[w][x].is_zero() || g[x][v].is_zero()) continue;
                        next[w][v] += multiply_up_to(step[w][x], g[x][v], budget);
                    }
                }
            }
            g = std::move(next);
        }
        below = std::move(g);
    }
    return below[0][0];
}

}  // namespace ncprob
