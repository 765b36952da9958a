#include "ncprob/fock.hpp"

#include <algorithm>
#include <functional>

#include "ncprob/error.hpp"

namespace ncprob {
namespace {

std::size_t power(int base, int exponent) {
    std::size_t out = 1;
    for (int k = 0; k < exponent; ++k) out *= static_cast<std::size_t>(base);
    return out;
}

// Position of e_u within its level.
std::size_t level_rank(const MultiIndex& u) {
    std::size_t r = 0;
    for (int letter : u.letters()) r = r * static_cast<std::size_t>(u.alphabet()) + static_cast<std::size_t>(letter - 1);
    return r;
}

MultiIndex level_word(int d, int k, std::size_t rank) {
    std::vector<int> letters(static_cast<std::size_t>(k));
    for (int s = k - 1; s >= 0; --s) {
        letters[static_cast<std::size_t>(s)] = static_cast<int>(rank % static_cast<std::size_t>(d)) + 1;
        rank /= static_cast<std::size_t>(d);
    }
    return MultiIndex(d, std::move(letters));
}

using Levels = std::vector<std::vector<Rational>>;

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// X_i = a_i^+ + T_i + a_i^- C applied to a vector spread over levels. Levels
// above `max_level` are dropped; annihilation acts only from `lowest_annihilating` up.
Levels apply_operator(const FockData& data, int i, const Levels& in, int max_level, int lowest_annihilating) {
    const int d = data.d;
    const int top = std::min<int>(max_level, data.depth);
    Levels out(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) out[static_cast<std::size_t>(k)].assign(power(d, k), Rational(0));
    for (int k = 0; k < static_cast<int>(in.size()); ++k) {
        const auto& v = in[static_cast<std::size_t>(k)];
        if (v.empty() || all_zero(v)) continue;
        const std::size_t size = power(d, k);
        if (k + 1 <= top) {
            auto& up = out[static_cast<std::size_t>(k + 1)];
            const std::size_t base = static_cast<std::size_t>(i - 1) * size;
            for (std::size_t r = 0; r < size; ++r) up[base + r] += v[r];
        }
        if (k <= top) {
            const auto flat = data.T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)].apply(v);
            auto& same = out[static_cast<std::size_t>(k)];
            for (std::size_t r = 0; r < size; ++r) same[r] += flat[r];
        }
        if (k >= 1 && k >= lowest_annihilating && k - 1 <= top) {
            const std::size_t below = power(d, k - 1);
            const std::size_t base = static_cast<std::size_t>(i - 1) * below;
            const auto& c = data.C[static_cast<std::size_t>(k - 1)];
            auto& down = out[static_cast<std::size_t>(k - 1)];
            for (std::size_t r = 0; r < below; ++r) {
                if (!v[base + r].is_zero()) down[r] += c[base + r] * v[base + r];
            }
        }
    }
    return out;
}

void require_depth(const FockData& data, std::size_t length) {
    if (static_cast<int>(length) > 2 * data.depth) {
        throw DepthError("word of length " + std::to_string(length) + " needs Fock depth " +
                         std::to_string((length + 1) / 2) + ", data has " + std::to_string(data.depth));
    }
}

}  // namespace

FockData FockData::zero(int d, int depth) {
    if (d < 1 || depth < 0) throw ShapeError("Fock data needs d >= 1 and depth >= 0");
    FockData data;
    data.d = d;
    data.depth = depth;
    for (int k = 1; k <= depth; ++k) data.C.emplace_back(power(d, k), Rational(0));
    data.T.resize(static_cast<std::size_t>(d));
    for (auto& t : data.T) {
        for (int k = 0; k <= depth; ++k) t.emplace_back(power(d, k), power(d, k));
    }
    return data;
}

FockData FockData::semicircle(int d, int depth) {
    FockData data = zero(d, depth);
    for (auto& level : data.C) std::fill(level.begin(), level.end(), Rational(1));
    return data;
}

void FockData::validate() const {
    if (d < 1 || depth < 0) throw ShapeError("Fock data needs d >= 1 and depth >= 0");
    if (static_cast<int>(C.size()) != depth) throw ShapeError("expected " + std::to_string(depth) + " C levels");
    for (int k = 1; k <= depth; ++k) {
        if (C[static_cast<std::size_t>(k - 1)].size() != power(d, k)) {
            throw ShapeError("C level " + std::to_string(k) + " must have " + std::to_string(power(d, k)) + " entries");
        }
    }
    if (static_cast<int>(T.size()) != d) throw ShapeError("expected one T family per variable");
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(T[static_cast<std::size_t>(i)].size()) != depth + 1) {
            throw ShapeError("T_" + std::to_string(i + 1) + " must have levels 0.." + std::to_string(depth));
        }
        for (int k = 0; k <= depth; ++k) {
            const Matrix& m = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (m.rows() != power(d, k) || m.cols() != power(d, k)) {
                throw ShapeError("T_" + std::to_string(i + 1) + " level " + std::to_string(k) + " must be " +
                                 std::to_string(power(d, k)) + " x " + std::to_string(power(d, k)));
            }
        }
    }
}

std::size_t FockData::level_size(int k) const { return power(d, k); }

const Rational& FockData::c(const MultiIndex& word) const {
    if (word.empty() || static_cast<int>(word.size()) > depth) throw DepthError("C entry outside the stored levels");
    return C[word.size() - 1][level_rank(word)];
}

bool FockData::is_symmetric() const {
    for (const auto& family : T) {
        for (const auto& m : family) {
            if (!m.is_symmetric()) return false;
        }
    }
    return true;
}

bool FockData::satisfies_commutation() const {
    for (int k = 1; k <= depth; ++k) {
        // K_u = prod_s C_(u(s..k)): the weight of e_u in the induced inner product.
        std::vector<Rational> kweight(power(d, k));
        for (std::size_t r = 0; r < kweight.size(); ++r) {
            const MultiIndex u = level_word(d, k, r);
            Rational w = 1;
            for (std::size_t s = 0; s < u.size(); ++s) w *= c(u.suffix(s));
            kweight[r] = w;
        }
        for (const auto& family : T) {
            const Matrix& t = family[static_cast<std::size_t>(k)];
            for (std::size_t a = 0; a < t.rows(); ++a) {
                for (std::size_t b = 0; b < t.cols(); ++b) {
                    if (t(b, a) * kweight[b] != kweight[a] * t(a, b)) return false;
                }
            }
        }
    }
    return true;
}

bool FockData::is_nonnegative() const {
    for (const auto& level : C) {
        for (const auto& x : level) {
            if (x < 0) return false;
        }
    }
    return true;
}

Rational fock_moment(const FockData& data, const MultiIndex& u) {
    data.validate();
    if (u.alphabet() != data.d) throw ShapeError("word alphabet does not match Fock data");
    require_depth(data, u.size());
    Levels state{{Rational(1)}};
    const std::size_t n = u.size();
    for (std::size_t step = 0; step < n; ++step) {
        const int remaining = static_cast<int>(n - step - 1);
        state = apply_operator(data, u[n - 1 - step], state, remaining, 1);
    }
    return state[0][0];
}

Functional fock_functional(const FockData& data, int n) {
    data.validate();
    require_depth(data, static_cast<std::size_t>(n));
    NCSeries m(data.d, n);
    const WordIndexer indexer(data.d, n);
    for (std::size_t flat = 0; flat < indexer.size(); ++flat) m.coeff(flat) = fock_moment(data, indexer.word(flat));
    return Functional(std::move(m));
}

Rational motzkin_moment(const FockData& data, const MultiIndex& u) {
    data.validate();
    if (u.alphabet() != data.d) throw ShapeError("word alphabet does not match Fock data");
    require_depth(data, u.size());
    const int d = data.d;
    const int n = static_cast<int>(u.size());

    // Step matrices: rise from level s, horizontal at level s, fall from level s.
    auto rise = [&](int i, int s) {
        Matrix m(power(d, s + 1), power(d, s));
        for (std::size_t r = 0; r < power(d, s); ++r) m(static_cast<std::size_t>(i - 1) * power(d, s) + r, r) = 1;
        return m;
    };
    auto fall = [&](int i, int s) {
        Matrix m(power(d, s - 1), power(d, s));
        const std::size_t below = power(d, s - 1);
        for (std::size_t r = 0; r < below; ++r) {
            const std::size_t source = static_cast<std::size_t>(i - 1) * below + r;
            m(r, source) = data.C[static_cast<std::size_t>(s - 1)][source];
        }
        return m;
    };

    // levels[p] is the level after the letters u(p+1..n) have acted; levels[n] = 0.
    std::vector<int> levels(static_cast<std::size_t>(n) + 1, 0);
    Rational total;
    std::function<void(int)> walk = [&](int p) {
        if (p == 0) {
            if (levels[0] != 0) return;
            Matrix product = Matrix::identity(1);
            for (int q = 1; q <= n; ++q) {
                const int from = levels[static_cast<std::size_t>(q)];
                const int to = levels[static_cast<std::size_t>(q - 1)];
                const int letter = u[static_cast<std::size_t>(q - 1)];
                if (to == from + 1) {
                    product = product * rise(letter, from);
                } else if (to == from) {
                    product = product * data.T[static_cast<std::size_t>(letter - 1)][static_cast<std::size_t>(from)];
                } else {
                    product = product * fall(letter, from);
                }
            }
            total += product(0, 0);
            return;
        }
        const int from = levels[static_cast<std::size_t>(p)];
        for (int delta : {1, 0, -1}) {
            const int to = from + delta;
            if (to < 0 || to > p - 1) continue;  // must be able to return to 0
            levels[static_cast<std::size_t>(p - 1)] = to;
            walk(p - 1);
        }
    };
    walk(n);
    return total;
}

std::vector<std::pair<MultiIndex, NCPolynomial>> mops_polynomials(const FockData& data, int n) {
    data.validate();
    if (n > data.depth + 1) throw DepthError("MOPS of degree " + std::to_string(n) + " needs deeper Fock data");
    const int d = data.d;
    std::vector<std::vector<NCPolynomial>> levels{{NCPolynomial::constant(d, 1)}};
    for (int k = 0; k < n; ++k) {
        std::vector<NCPolynomial> next(power(d, k + 1), NCPolynomial(d));
        const auto& current = levels.back();
        for (int i = 1; i <= d; ++i) {
            const Matrix& t = data.T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
            for (std::size_t r = 0; r < current.size(); ++r) {
                NCPolynomial p = NCPolynomial::variable(d, i) * current[r];
                for (std::size_t w = 0; w < current.size(); ++w) {
                    if (!t(w, r).is_zero()) p -= t(w, r) * current[w];
                }
                if (k >= 1 && r / power(d, k - 1) == static_cast<std::size_t>(i - 1)) {
                    const Rational& c = data.C[static_cast<std::size_t>(k - 1)][r];
                    if (!c.is_zero()) p -= c * levels[static_cast<std::size_t>(k - 1)][r % power(d, k - 1)];
                }
                next[static_cast<std::size_t>(i - 1) * current.size() + r] = std::move(p);
            }
        }
        levels.push_back(std::move(next));
    }
    std::vector<std::pair<MultiIndex, NCPolynomial>> out;
    for (int k = 0; k <= n; ++k) {
        for (std::size_t r = 0; r < levels[static_cast<std::size_t>(k)].size(); ++r) {
            out.emplace_back(level_word(d, k, r), levels[static_cast<std::size_t>(k)][r]);
        }
    }
    return out;
}

bool mops_orthogonality_check(const FockData& data, int n) {
    if (n > data.depth) throw DepthError("orthogonality up to degree " + std::to_string(n) + " needs depth >= n");
    const auto family = mops_polynomials(data, n);
    const Functional phi = fock_functional(data, 2 * n);
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = 0; b < family.size(); ++b) {
            if (a != b && !phi.inner(family[a].second, family[b].second).is_zero()) return false;
        }
    }
    return true;
}

FockData boolean_power_fock(const FockData& data, const Rational& t) {
    data.validate();
    FockData out = data;
    for (auto& family : out.T) family[0] *= t;
    if (out.depth >= 1) {
        for (auto& x : out.C[0]) x *= t;
    }
    return out;
}

Rational boolean_cumulant_from_fock(const FockData& data, const MultiIndex& u) {
    data.validate();
    if (u.alphabet() != data.d) throw ShapeError("word alphabet does not match Fock data");
    require_depth(data, u.size());
    if (u.empty()) return 0;
    if (u.size() == 1) return data.T[static_cast<std::size_t>(u[0] - 1)][0](0, 0);
    const int d = data.d;
    const int i = u.front();
    const int j = u.back();
    Levels state(2);
    state[0].assign(1, Rational(0));
    state[1].assign(power(d, 1), Rational(0));
    state[1][static_cast<std::size_t>(j - 1)] = 1;
    const std::size_t middle = u.size() - 2;
    for (std::size_t step = 0; step < middle; ++step) {
        const int remaining = static_cast<int>(middle - step - 1);
        state = apply_operator(data, u[u.size() - 2 - step], state, 1 + remaining, 2);
    }
    return data.C[0][static_cast<std::size_t>(i - 1)] * state[1][static_cast<std::size_t>(i - 1)];
}

NCSeries boolean_cumulants_from_fock(const FockData& data, int n) {
    require_depth(data, static_cast<std::size_t>(n));
    NCSeries eta(data.d, n);
    const WordIndexer indexer(data.d, n);
    for (std::size_t flat = 1; flat < indexer.size(); ++flat) eta.coeff(flat) = boolean_cumulant_from_fock(data, indexer.word(flat));
    return eta;
}

FockData fock_from_jacobi(const JacobiData& jacobi, int depth) {
    if (static_cast<int>(jacobi.beta.size()) < depth + 1 || static_cast<int>(jacobi.gamma.size()) < depth) {
        throw DepthError("Jacobi data too short for depth " + std::to_string(depth));
    }
    FockData data = FockData::zero(1, depth);
    for (int k = 0; k <= depth; ++k) data.T[0][static_cast<std::size_t>(k)](0, 0) = jacobi.beta[static_cast<std::size_t>(k)];
    for (int k = 1; k <= depth; ++k) data.C[static_cast<std::size_t>(k - 1)][0] = jacobi.gamma[static_cast<std::size_t>(k - 1)];
    return data;
}

namespace {

std::size_t leading_run(const MultiIndex& u, int letter) {
    std::size_t r = 0;
    while (r < u.size() && u[r] == letter) ++r;
    return r;
}

void require_factor_depth(const std::vector<JacobiData>& factors, int depth) {
    if (factors.empty()) throw ShapeError("product of no factors");
    for (const auto& j : factors) {
        if (static_cast<int>(j.beta.size()) < depth + 1 || static_cast<int>(j.gamma.size()) < depth) {
            throw DepthError("Jacobi data too short for depth " + std::to_string(depth));
        }
    }
}

}  // namespace

FockData free_product_fock(const std::vector<JacobiData>& factors, int depth) {
    require_factor_depth(factors, depth);
    const int d = static_cast<int>(factors.size());
    FockData data = FockData::zero(d, depth);
    for (int k = 0; k <= depth; ++k) {
        for (std::size_t r = 0; r < power(d, k); ++r) {
            const MultiIndex u = level_word(d, k, r);
            if (k >= 1) {
                const auto& g = factors[static_cast<std::size_t>(u.front() - 1)].gamma;
                data.C[static_cast<std::size_t>(k - 1)][r] = g[leading_run(u, u.front()) - 1];
            }
            for (int i = 1; i <= d; ++i) {
                data.T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)](r, r) =
                    factors[static_cast<std::size_t>(i - 1)].beta[leading_run(u, i)];
            }
        }
    }
    return data;
}

FockData boolean_product_fock(const std::vector<JacobiData>& factors, int depth) {
    require_factor_depth(factors, depth);
    const int d = static_cast<int>(factors.size());
    FockData data = FockData::zero(d, depth);
    for (int i = 1; i <= d; ++i) {
        const auto& f = factors[static_cast<std::size_t>(i - 1)];
        for (int k = 0; k <= depth; ++k) {
            const std::size_t r = level_rank(MultiIndex::repeated(d, i, static_cast<std::size_t>(k)));
            data.T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)](r, r) = f.beta[static_cast<std::size_t>(k)];
            if (k >= 1) data.C[static_cast<std::size_t>(k - 1)][r] = f.gamma[static_cast<std::size_t>(k - 1)];
        }
    }
    return data;
}

bool BooleanFockDecomposition::t_annihilates_omega() const {
    for (const Matrix& t : T) {
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (!t(r, omega).is_zero() || !t(omega, r).is_zero()) return false;
        }
    }
    return true;
}

bool BooleanFockDecomposition::reconstructs(const std::vector<Matrix>& x) const {
    if (x.size() != T.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Matrix rebuilt = T[i];
        rebuilt(omega, omega) += lambda[i];
        for (std::size_t r = 0; r < rebuilt.rows(); ++r) {
            rebuilt(r, omega) += xi[i][r];  // a^+(xi) Omega = xi
            rebuilt(omega, r) += xi[i][r];  // a^-(xi) v = <xi, v> Omega
        }
        if (rebuilt != x[i]) return false;
    }
    return true;
}

Rational BooleanFockDecomposition::boolean_cumulant(const MultiIndex& u) const {
    if (u.empty()) return 0;
    if (u.size() == 1) return lambda[static_cast<std::size_t>(u[0] - 1)];
    std::vector<Rational> v = xi[static_cast<std::size_t>(u.back() - 1)];
    for (std::size_t p = u.size() - 1; p-- > 1;) v = T[static_cast<std::size_t>(u[p] - 1)].apply(v);
    const auto& left = xi[static_cast<std::size_t>(u.front() - 1)];
    Rational out;
    for (std::size_t r = 0; r < v.size(); ++r) out += left[r] * v[r];
    return out;
}

NCSeries BooleanFockDecomposition::boolean_cumulants(int n) const {
    const int d = static_cast<int>(T.size());
    NCSeries eta(d, n);
    const WordIndexer indexer(d, n);
    for (std::size_t flat = 1; flat < indexer.size(); ++flat) eta.coeff(flat) = boolean_cumulant(indexer.word(flat));
    return eta;
}

namespace {

void check_matrix_model(const std::vector<Matrix>& x, std::size_t omega) {
    if (x.empty()) throw ShapeError("matrix model needs at least one matrix");
    const std::size_t size = x.front().rows();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_square() || x[i].rows() != size) throw ShapeError("matrices must be square of a common size");
        if (!x[i].is_symmetric()) throw ShapeError("matrix X_" + std::to_string(i + 1) + " is not symmetric");
    }
    if (omega >= size) throw ShapeError("distinguished index outside the matrix");
}

}  // namespace

BooleanFockDecomposition general_boolean_fock_decompose(const std::vector<Matrix>& x, std::size_t omega) {
    check_matrix_model(x, omega);
    BooleanFockDecomposition out;
    out.omega = omega;
    for (const Matrix& m : x) {
        const Rational lambda = m(omega, omega);
        std::vector<Rational> xi(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != omega) xi[r] = m(r, omega);
        }
        Matrix t = m;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            t(r, omega) = 0;
            t(omega, r) = 0;
        }
        out.lambda.push_back(lambda);
        out.xi.push_back(std::move(xi));
        out.T.push_back(std::move(t));
    }
    return out;
}

Functional matrix_model_functional(const std::vector<Matrix>& x, std::size_t omega, int n) {
    check_matrix_model(x, omega);
    const int d = static_cast<int>(x.size());
    NCSeries m(d, n);
    const WordIndexer indexer(d, n);
    // vectors[flat] = X_u Omega, built by prepending letters.
    std::vector<std::vector<Rational>> vectors(indexer.size());
    vectors[0].assign(x.front().rows(), Rational(0));
    vectors[0][omega] = 1;
    m.coeff(0) = 1;
    for (int k = 1; k <= n; ++k) {
        for (std::size_t r = 0; r < indexer.count(k); ++r) {
            const std::size_t flat = indexer.offset(k) + r;
            const std::size_t letter = r / indexer.count(k - 1);
            const std::size_t tail = indexer.offset(k - 1) + r % indexer.count(k - 1);
            vectors[flat] = x[letter].apply(vectors[tail]);
            m.coeff(flat) = vectors[flat][omega];
        }
    }
    return Functional(std::move(m));
}

std::vector<Rational> extended_boolean_fock_moments(const Rational& b, const Rational& c, const Rational& t, int n) {
    if (n < 0) throw DomainError("number of moments must be nonnegative");
    const int levels = std::max(1, (n + 1) / 2);
    // Coordinates (alpha, beta_1, ..., beta_levels) of alpha Omega + sum beta_k f_k, f = indicator of [0, t).
    std::vector<Rational> v(static_cast<std::size_t>(levels) + 1);
    v[0] = 1;
    std::vector<Rational> moments{Rational(1)};
    for (int step = 1; step <= n; ++step) {
        std::vector<Rational> next(v.size());
        next[0] = t * v[1];  // a^-(f) g_1 = psi[f g_1] Omega
        for (int k = 1; k <= levels; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            next[ku] = v[ku - 1] + b * v[ku];
            if (k + 1 <= levels) next[ku] += c * v[ku + 1];
        }
        v = std::move(next);
        moments.push_back(v[0]);
    }
    return moments;
}

}  // namespace ncprob
