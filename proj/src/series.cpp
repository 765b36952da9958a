#include "ncprob/series.hpp"

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

std::size_t word_offset(int alphabet, int length) {
    if (alphabet == 1) return static_cast<std::size_t>(length);
    return (power(alphabet, length) - 1) / static_cast<std::size_t>(alphabet - 1);
}

const Rational& zero_rational() {
    static const Rational zero;
    return zero;
}

void check_tuple(const SeriesTuple& args, const char* what) {
    if (args.empty()) throw ShapeError(std::string(what) + ": empty tuple");
    for (const auto& a : args) {
        if (a.alphabet() != args.front().alphabet() || a.degree_cap() != args.front().degree_cap()) {
            throw ShapeError(std::string(what) + ": tuple components disagree on alphabet or degree cap");
        }
    }
}

}  // namespace

NCSeries::NCSeries(int alphabet, int degree_cap) : alphabet_(alphabet), cap_(degree_cap) {
    // WordIndexer validates the sizes.
    coeffs_.resize(WordIndexer(alphabet, degree_cap).size());
}

NCSeries NCSeries::constant(int alphabet, int degree_cap, const Rational& value) {
    NCSeries out(alphabet, degree_cap);
    out.coeffs_.front() = value;
    return out;
}

NCSeries NCSeries::variable(int alphabet, int degree_cap, int i) {
    return monomial(degree_cap, MultiIndex(alphabet, {i}));
}

NCSeries NCSeries::monomial(int degree_cap, const MultiIndex& word, const Rational& value) {
    NCSeries out(word.alphabet(), degree_cap);
    if (static_cast<int>(word.size()) <= degree_cap) out.set(word, value);
    return out;
}

std::size_t NCSeries::offset(int length) const { return word_offset(alphabet_, length); }

MultiIndex NCSeries::word(std::size_t flat) const { return WordIndexer(alphabet_, cap_).word(flat); }

int NCSeries::length_of(std::size_t flat) const {
    int length = 0;
    while (offset(length + 1) <= flat) ++length;
    return length;
}

const Rational& NCSeries::operator[](const MultiIndex& word) const {
    if (word.alphabet() != alphabet_) throw ShapeError("word alphabet does not match series");
    if (static_cast<int>(word.size()) > cap_) return zero_rational();
    return coeffs_[WordIndexer(alphabet_, cap_).index(word)];
}

void NCSeries::set(const MultiIndex& word, Rational value) {
    if (word.alphabet() != alphabet_) throw ShapeError("word alphabet does not match series");
    if (static_cast<int>(word.size()) > cap_) {
        throw ShapeError("word " + word.to_string() + " exceeds degree cap " + std::to_string(cap_));
    }
    coeffs_[WordIndexer(alphabet_, cap_).index(word)] = std::move(value);
}

void NCSeries::add_to(const MultiIndex& word, const Rational& value) {
    if (static_cast<int>(word.size()) > cap_) return;
    coeffs_[WordIndexer(alphabet_, cap_).index(word)] += value;
}

bool NCSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

int NCSeries::lowest_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return length_of(i);
    }
    return -1;
}

NCSeries NCSeries::truncated(int max_degree) const {
    NCSeries out = *this;
    if (max_degree < cap_) {
        const std::size_t from = offset(std::max(max_degree + 1, 0));
        for (std::size_t i = from; i < out.coeffs_.size(); ++i) out.coeffs_[i] = 0;
    }
    return out;
}

NCSeries NCSeries::without_below(int min_degree) const {
    NCSeries out = *this;
    const std::size_t upto = std::min(offset(std::clamp(min_degree, 0, cap_ + 1)), out.coeffs_.size());
    for (std::size_t i = 0; i < upto; ++i) out.coeffs_[i] = 0;
    return out;
}

void NCSeries::check_compatible(const NCSeries& other, const char* op) const {
    if (alphabet_ != other.alphabet_ || cap_ != other.cap_) {
        throw ShapeError(std::string(op) + ": series shapes differ (d=" + std::to_string(alphabet_) +
                         ", N=" + std::to_string(cap_) + " vs d=" + std::to_string(other.alphabet_) +
                         ", N=" + std::to_string(other.cap_) + ")");
    }
}

NCSeries& NCSeries::operator+=(const NCSeries& other) {
    check_compatible(other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!other.coeffs_[i].is_zero()) coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& other) {
    check_compatible(other, "subtract");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!other.coeffs_[i].is_zero()) coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

NCSeries& NCSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) {
        if (!c.is_zero()) c *= scalar;
    }
    return *this;
}

NCSeries multiply_up_to(const NCSeries& a, const NCSeries& b, int max_degree) {
    a.check_compatible(b, "multiply");
    const int d = a.alphabet_;
    max_degree = std::min(max_degree, a.cap_);
    NCSeries out(d, a.cap_);
    if (max_degree < 0) return out;

    // Nonzero entries of b grouped by length, as (rank within length, value).
    std::vector<std::vector<std::pair<std::size_t, const Rational*>>> b_terms(static_cast<std::size_t>(max_degree) + 1);
    for (int lb = 0; lb <= max_degree; ++lb) {
        const std::size_t base = word_offset(d, lb);
        const std::size_t count = power(d, lb);
        for (std::size_t r = 0; r < count; ++r) {
            const auto& c = b.coeffs_[base + r];
            if (!c.is_zero()) b_terms[static_cast<std::size_t>(lb)].emplace_back(r, &c);
        }
    }
    for (int la = 0; la <= max_degree; ++la) {
        const std::size_t a_base = word_offset(d, la);
        const std::size_t a_count = power(d, la);
        for (std::size_t ra = 0; ra < a_count; ++ra) {
            const auto& ca = a.coeffs_[a_base + ra];
            if (ca.is_zero()) continue;
            for (int lb = 0; la + lb <= max_degree; ++lb) {
                const std::size_t target = word_offset(d, la + lb) + ra * power(d, lb);
                for (const auto& [rb, cb] : b_terms[static_cast<std::size_t>(lb)]) {
                    out.coeffs_[target + rb] += ca * *cb;
                }
            }
        }
    }
    return out;
}

NCSeries operator*(const NCSeries& a, const NCSeries& b) { return multiply_up_to(a, b, a.degree_cap()); }

bool operator==(const NCSeries& a, const NCSeries& b) {
    return a.alphabet_ == b.alphabet_ && a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
}

std::string NCSeries::to_string() const {
    std::string out;
    const WordIndexer indexer(alphabet_, cap_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += ncprob::to_string(coeffs_[i]);
        if (i != 0) out += "*z[" + indexer.word(i).to_string() + "]";
    }
    return out.empty() ? "0" : out;
}

NCSeries mul_inverse(const NCSeries& f) {
    const Rational& f0 = f.constant_term();
    if (f0.is_zero()) throw NotInvertibleError("series with zero constant term has no multiplicative inverse");
    const int d = f.alphabet();
    const Rational inv0 = Rational(1) / f0;
    NCSeries g(d, f.degree_cap());
    g.coeff(0) = inv0;
    // F*G = 1 read off at each word w: sum over splittings w = (prefix, suffix).
    for (int n = 1; n <= f.degree_cap(); ++n) {
        const std::size_t base = f.offset(n);
        const std::size_t count = power(d, n);
        for (std::size_t rank = 0; rank < count; ++rank) {
            Rational acc;
            for (int k = 1; k <= n; ++k) {
                const std::size_t split = power(d, n - k);
                const Rational& fp = f.coeff(f.offset(k) + rank / split);
                if (fp.is_zero()) continue;
                const Rational& gs = g.coeff(g.offset(n - k) + rank % split);
                if (!gs.is_zero()) acc += fp * gs;
            }
            if (!acc.is_zero()) g.coeff(base + rank) = -acc * inv0;
        }
    }
    return g;
}

NCSeries left_derivative(int i, const NCSeries& f) {
    const int d = f.alphabet();
    if (i < 1 || i > d) throw ShapeError("derivative index out of range");
    NCSeries out(d, f.degree_cap());
    for (int n = 0; n < f.degree_cap(); ++n) {
        const std::size_t count = power(d, n);
        const std::size_t source = f.offset(n + 1) + static_cast<std::size_t>(i - 1) * count;
        const std::size_t target = f.offset(n);
        for (std::size_t r = 0; r < count; ++r) out.coeff(target + r) = f.coeff(source + r);
    }
    return out;
}

SeriesTuple identity_tuple(int alphabet, int degree_cap) {
    SeriesTuple out;
    for (int i = 1; i <= alphabet; ++i) out.push_back(NCSeries::variable(alphabet, degree_cap, i));
    return out;
}

NCSeries substitute(const NCSeries& f, const SeriesTuple& args) {
    check_tuple(args, "substitute");
    const int d = f.alphabet();
    if (static_cast<int>(args.size()) != d) {
        throw ShapeError("substitute: need " + std::to_string(d) + " arguments, got " + std::to_string(args.size()));
    }
    for (const auto& a : args) {
        if (!a.constant_term().is_zero()) throw SubstitutionError("substitute: argument with nonzero constant term");
    }
    const int target_alphabet = args.front().alphabet();
    const int cap = args.front().degree_cap();
    const int depth = std::min(cap, f.degree_cap());

    // live[w]: some coefficient of f at a word starting with w is nonzero.
    std::vector<char> live(f.offset(depth + 1), 0);
    for (int n = depth; n >= 0; --n) {
        const std::size_t base = f.offset(n);
        for (std::size_t r = 0; r < power(d, n); ++r) {
            bool any = !f.coeff(base + r).is_zero();
            if (!any && n < depth) {
                const std::size_t child = f.offset(n + 1) + r * static_cast<std::size_t>(d);
                for (int i = 0; i < d && !any; ++i) any = live[child + static_cast<std::size_t>(i)] != 0;
            }
            live[base + r] = any ? 1 : 0;
        }
    }

    // f(args) = f[p] + sum_i args_i * (D_i-tail at p)(args), needed only to degree cap - |p|.
    std::function<NCSeries(int, std::size_t)> eval = [&](int length, std::size_t rank) {
        NCSeries out = NCSeries::constant(target_alphabet, cap, f.coeff(f.offset(length) + rank));
        const int budget = cap - length;
        if (length == depth || budget < 1) return out;
        for (int i = 0; i < d; ++i) {
            const std::size_t child_rank = rank * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
            if (!live[f.offset(length + 1) + child_rank]) continue;
            const NCSeries tail = eval(length + 1, child_rank);
            out += multiply_up_to(args[static_cast<std::size_t>(i)], tail, budget);
        }
        return out;
    };
    if (!live[0]) return NCSeries(target_alphabet, cap);
    return eval(0, 0);
}

SeriesTuple compose(const SeriesTuple& outer, const SeriesTuple& inner) {
    SeriesTuple out;
    out.reserve(outer.size());
    for (const auto& f : outer) out.push_back(substitute(f, inner));
    return out;
}

namespace {

void require_identity_linear_part(const SeriesTuple& g, const char* what) {
    check_tuple(g, what);
    const int d = g.front().alphabet();
    if (static_cast<int>(g.size()) != d) throw ShapeError(std::string(what) + ": tuple length must equal d");
    for (int i = 1; i <= d; ++i) {
        const auto& gi = g[static_cast<std::size_t>(i - 1)];
        if (!gi.constant_term().is_zero()) {
            throw UnsupportedLinearPartError(std::string(what) + ": component " + std::to_string(i) +
                                             " has a nonzero constant term");
        }
        if (gi.degree_cap() < 1) continue;
        for (int j = 1; j <= d; ++j) {
            if (gi[MultiIndex(d, {j})] != Rational(i == j ? 1 : 0)) {
                throw UnsupportedLinearPartError(std::string(what) + ": linear part is not the identity (component " +
                                                 std::to_string(i) + ", variable " + std::to_string(j) + ")");
            }
        }
    }
}

}  // namespace

SeriesTuple comp_inverse(const SeriesTuple& g) {
    require_identity_linear_part(g, "comp_inverse");
    const int d = g.front().alphabet();
    const int cap = g.front().degree_cap();
    const SeriesTuple z = identity_tuple(d, cap);
    SeriesTuple nonlinear;
    for (int i = 0; i < d; ++i) nonlinear.push_back(g[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i)]);
    // H = z - (G - z)(H); iteration k fixes the degree k+1 part.
    SeriesTuple h = z;
    for (int k = 1; k < cap; ++k) {
        SeriesTuple next;
        for (int i = 0; i < d; ++i) {
            next.push_back(z[static_cast<std::size_t>(i)] - substitute(nonlinear[static_cast<std::size_t>(i)], h));
        }
        h = std::move(next);
    }
    return h;
}

NCSeries solve_substitution(const NCSeries& target, const SeriesTuple& args) {
    require_identity_linear_part(args, "solve_substitution");
    if (target.alphabet() != args.front().alphabet() || target.degree_cap() != args.front().degree_cap()) {
        throw ShapeError("solve_substitution: target shape differs from arguments");
    }
    NCSeries c(target.alphabet(), target.degree_cap());
    c.coeff(0) = target.constant_term();
    // The degree-n part of C(args) is C_n plus terms built from lower-degree parts of C.
    for (int n = 1; n <= target.degree_cap(); ++n) {
        const NCSeries partial = substitute(c, args);
        for (std::size_t i = c.offset(n); i < c.offset(n + 1); ++i) c.coeff(i) = target.coeff(i) - partial.coeff(i);
    }
    return c;
}

NCSeries embed(const NCSeries& f, int alphabet, const std::vector<int>& letter_map) {
    if (static_cast<int>(letter_map.size()) != f.alphabet()) throw ShapeError("embed: letter map has wrong length");
    NCSeries out(alphabet, f.degree_cap());
    const WordIndexer source(f.alphabet(), f.degree_cap());
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        const MultiIndex w = source.word(i);
        std::vector<int> letters;
        letters.reserve(w.size());
        for (int letter : w.letters()) letters.push_back(letter_map[static_cast<std::size_t>(letter - 1)]);
        out.set(MultiIndex(alphabet, std::move(letters)), f.coeff(i));
    }
    return out;
}

}  // namespace ncprob
