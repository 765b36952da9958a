#include "ncprob/cumulants.hpp"

#include <set>

#include "ncprob/error.hpp"

namespace ncprob {

Functional::Functional(NCSeries moments) : moments_(std::move(moments)) {
    if (moments_.constant_term() != 1) {
        throw PreconditionError("functional must be unital: phi[1] = " + to_string(moments_.constant_term()));
    }
}

Functional Functional::delta0(int alphabet, int degree_cap) { return Functional(NCSeries::one(alphabet, degree_cap)); }

Functional Functional::from_moments(const std::vector<Rational>& m) {
    NCSeries s(1, static_cast<int>(m.size()));
    s.coeff(0) = 1;
    for (std::size_t n = 0; n < m.size(); ++n) s.coeff(n + 1) = m[n];
    return Functional(std::move(s));
}

const Rational& Functional::moment(const MultiIndex& word) const {
    if (static_cast<int>(word.size()) > degree_cap()) {
        throw DepthError("moment of degree " + std::to_string(word.size()) + " beyond the known " +
                         std::to_string(degree_cap()));
    }
    return moments_[word];
}

const Rational& Functional::moment(int n) const {
    if (alphabet() != 1) throw ShapeError("moment(n) needs a univariate functional");
    if (n < 0 || n > degree_cap()) throw DepthError("moment index " + std::to_string(n) + " out of range");
    return moments_.coeff(static_cast<std::size_t>(n));
}

NCSeries Functional::moment_series() const { return moments_.without_below(1); }

Functional Functional::marginal(int i) const {
    if (i < 1 || i > alphabet()) throw ShapeError("marginal index out of range");
    std::vector<Rational> m;
    for (int n = 1; n <= degree_cap(); ++n) m.push_back(moments_[MultiIndex::repeated(alphabet(), i, static_cast<std::size_t>(n))]);
    return from_moments(m);
}

Rational Functional::evaluate(const NCPolynomial& p) const {
    if (p.alphabet() != alphabet()) throw ShapeError("polynomial alphabet does not match functional");
    Rational out;
    for (const auto& [word, c] : p.terms()) out += c * moment(word);
    return out;
}

Rational Functional::inner(const NCPolynomial& p, const NCPolynomial& q) const { return evaluate(p.adjoint() * q); }

NCSeries boolean_cumulants_lattice(const Functional& phi) {
    const NCSeries& m = phi.moment_table();
    const int d = phi.alphabet();
    const WordIndexer indexer(d, phi.degree_cap());
    NCSeries eta(d, phi.degree_cap());
    // phi[w] = sum over the first interval block w(1..k): eta[w(1..k)] phi[w(k+1..n)].
    for (int n = 1; n <= phi.degree_cap(); ++n) {
        for (std::size_t rank = 0; rank < indexer.count(n); ++rank) {
            Rational value = m.coeff(indexer.offset(n) + rank);
            for (int k = 1; k < n; ++k) {
                const std::size_t split = indexer.count(n - k);
                const Rational& head = eta.coeff(indexer.offset(k) + rank / split);
                if (!head.is_zero()) value -= head * m.coeff(indexer.offset(n - k) + rank % split);
            }
            eta.coeff(indexer.offset(n) + rank) = std::move(value);
        }
    }
    return eta;
}

NCSeries boolean_cumulants(const Functional& phi) {
    return NCSeries::one(phi.alphabet(), phi.degree_cap()) - mul_inverse(phi.moment_table());
}

Functional moments_from_boolean_cumulants(const NCSeries& eta) {
    if (!eta.constant_term().is_zero()) throw PreconditionError("Boolean cumulant series must have zero constant term");
    return Functional(mul_inverse(NCSeries::one(eta.alphabet(), eta.degree_cap()) - eta));
}

NCSeries free_cumulants_lattice(const Functional& phi) {
    const NCSeries& m = phi.moment_table();
    const int d = phi.alphabet();
    NCSeries r(d, phi.degree_cap());
    // phi[w] = sum over the block B containing 1: R[w|B] times phi of each gap of B.
    for (const MultiIndex& w : words_up_to(d, phi.degree_cap())) {
        const std::size_t n = w.size();
        if (n == 0) continue;
        Rational value = m[w];
        const unsigned full = (1u << (n - 1)) - 1;
        for (unsigned mask = 0; mask < full; ++mask) {
            std::vector<int> block_letters{w[0]};
            Rational gaps = 1;
            std::size_t previous = 0;
            for (std::size_t pos = 1; pos <= n && !gaps.is_zero(); ++pos) {
                const bool in_block = pos < n && ((mask >> (pos - 1)) & 1u);
                if (!in_block && pos < n) continue;
                gaps *= m[w.slice(previous + 1, pos)];
                if (pos < n) {
                    block_letters.push_back(w[pos]);
                    previous = pos;
                }
            }
            if (gaps.is_zero()) continue;
            const Rational& head = r[MultiIndex(d, std::move(block_letters))];
            if (!head.is_zero()) value -= head * gaps;
        }
        r.set(w, std::move(value));
    }
    return r;
}

namespace {

SeriesTuple scaled_variables(const NCSeries& one_plus_m) {
    SeriesTuple args;
    for (int i = 1; i <= one_plus_m.alphabet(); ++i) {
        args.push_back(NCSeries::variable(one_plus_m.alphabet(), one_plus_m.degree_cap(), i) * one_plus_m);
    }
    return args;
}

void require_same_shape(const Functional& a, const Functional& b, const char* op) {
    if (a.alphabet() != b.alphabet() || a.degree_cap() != b.degree_cap()) {
        throw ShapeError(std::string(op) + ": functionals differ in d or N");
    }
}

void require_univariate(const Functional& f, const char* op) {
    if (f.alphabet() != 1) throw ShapeError(std::string(op) + ": univariate functional required");
}

}  // namespace

NCSeries free_cumulants(const Functional& phi) {
    return solve_substitution(phi.moment_series(), scaled_variables(phi.moment_table()));
}

Functional moments_from_free_cumulants(const NCSeries& r) {
    if (!r.constant_term().is_zero()) throw PreconditionError("free cumulant series must have zero constant term");
    NCSeries m(r.alphabet(), r.degree_cap());
    // M = R(z(1 + M)); each pass fixes one more degree.
    for (int pass = 0; pass < r.degree_cap(); ++pass) {
        m = substitute(r, scaled_variables(NCSeries::one(r.alphabet(), r.degree_cap()) + m));
    }
    return Functional(NCSeries::one(r.alphabet(), r.degree_cap()) + m);
}

Functional boolean_convolve(const Functional& phi, const Functional& psi) {
    require_same_shape(phi, psi, "boolean_convolve");
    return moments_from_boolean_cumulants(boolean_cumulants(phi) + boolean_cumulants(psi));
}

Functional boolean_power(const Functional& phi, const Rational& t) {
    return moments_from_boolean_cumulants(t * boolean_cumulants(phi));
}

Functional free_convolve(const Functional& phi, const Functional& psi) {
    require_same_shape(phi, psi, "free_convolve");
    return moments_from_free_cumulants(free_cumulants(phi) + free_cumulants(psi));
}

Functional free_power(const Functional& phi, const Rational& t) {
    return moments_from_free_cumulants(t * free_cumulants(phi));
}

namespace {

NCSeries joined_cumulants(const std::vector<Functional>& factors, NCSeries (*cumulants)(const Functional&)) {
    if (factors.empty()) throw ShapeError("product of no functionals");
    const int cap = factors.front().degree_cap();
    int d = 0;
    for (const auto& f : factors) {
        if (f.degree_cap() != cap) throw ShapeError("product factors differ in degree cap");
        d += f.alphabet();
    }
    NCSeries total(d, cap);
    int shift = 0;
    for (const auto& f : factors) {
        std::vector<int> letters;
        for (int i = 1; i <= f.alphabet(); ++i) letters.push_back(shift + i);
        total += embed(cumulants(f), d, letters);
        shift += f.alphabet();
    }
    return total;
}

}  // namespace

Functional boolean_product(const std::vector<Functional>& factors) {
    return moments_from_boolean_cumulants(joined_cumulants(factors, &boolean_cumulants));
}

Functional free_product(const std::vector<Functional>& factors) {
    return moments_from_free_cumulants(joined_cumulants(factors, &free_cumulants));
}

IndependenceReport check_boolean_independence(const Functional& phi, const std::vector<std::vector<int>>& groups) {
    const int d = phi.alphabet();
    std::vector<int> group_of(static_cast<std::size_t>(d) + 1, -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw ShapeError("empty variable group");
        for (int letter : groups[g]) {
            if (letter < 1 || letter > d) throw ShapeError("group letter " + std::to_string(letter) + " out of range");
            if (group_of[static_cast<std::size_t>(letter)] != -1) {
                throw ShapeError("letter " + std::to_string(letter) + " appears in two groups");
            }
            group_of[static_cast<std::size_t>(letter)] = static_cast<int>(g);
        }
    }
    for (int letter = 1; letter <= d; ++letter) {
        if (group_of[static_cast<std::size_t>(letter)] == -1) {
            throw ShapeError("letter " + std::to_string(letter) + " belongs to no group");
        }
    }

    IndependenceReport report;
    const NCSeries eta = boolean_cumulants(phi);
    for (const MultiIndex& w : words_up_to(d, phi.degree_cap())) {
        if (w.size() < 2) continue;
        std::vector<std::pair<std::size_t, std::size_t>> runs;
        std::size_t start = 0;
        for (std::size_t pos = 1; pos <= w.size(); ++pos) {
            if (pos == w.size() || group_of[static_cast<std::size_t>(w[pos])] != group_of[static_cast<std::size_t>(w[start])]) {
                runs.emplace_back(start, pos);
                start = pos;
            }
        }
        if (runs.size() < 2) continue;
        if (report.mixed_cumulants_vanish && !eta[w].is_zero()) {
            report.mixed_cumulants_vanish = false;
            report.cumulant_witness = w;
        }
        if (report.factorizes) {
            Rational product = 1;
            for (const auto& [begin, end] : runs) product *= phi.moment(w.slice(begin, end));
            if (product != phi.moment(w)) {
                report.factorizes = false;
                report.factorization_witness = w;
            }
        }
    }
    return report;
}

NCSeries cfree_c_transform(const Functional& mu, const Functional& nu) {
    require_univariate(mu, "cfree_c_transform");
    require_same_shape(mu, nu, "cfree_c_transform");
    const NCSeries target = mu.moment_series() * nu.moment_table() * mul_inverse(mu.moment_table());
    return solve_substitution(target, scaled_variables(nu.moment_table()));
}

Functional cfree_first_component(const NCSeries& c, const Functional& nu) {
    require_univariate(nu, "cfree_first_component");
    if (c.alphabet() != 1 || c.degree_cap() != nu.degree_cap()) throw ShapeError("C-transform shape differs from nu");
    if (!c.constant_term().is_zero()) throw PreconditionError("C-transform must have zero constant term");
    // K(1 + M_mu) = M_mu(1 + M_nu) with K = C(z(1 + M_nu)), so M_mu = K (1 + M_nu - K)^{-1}.
    const NCSeries k = substitute(c, scaled_variables(nu.moment_table()));
    const NCSeries m = k * mul_inverse(nu.moment_table() - k);
    return Functional(NCSeries::one(1, c.degree_cap()) + m);
}

std::pair<Functional, Functional> cfree_convolve(const std::pair<Functional, Functional>& a,
                                                 const std::pair<Functional, Functional>& b) {
    const NCSeries c = cfree_c_transform(a.first, a.second) + cfree_c_transform(b.first, b.second);
    Functional nu = free_convolve(a.second, b.second);
    Functional mu = cfree_first_component(c, nu);
    return {std::move(mu), std::move(nu)};
}

}  // namespace ncprob
