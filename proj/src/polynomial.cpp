#include "ncprob/polynomial.hpp"

#include <algorithm>

#include "ncprob/error.hpp"

namespace ncprob {

NCPolynomial NCPolynomial::constant(int alphabet, const Rational& value) {
    NCPolynomial p(alphabet);
    p.add_term(MultiIndex(alphabet), value);
    return p;
}

NCPolynomial NCPolynomial::variable(int alphabet, int i) { return monomial(MultiIndex(alphabet, {i})); }

NCPolynomial NCPolynomial::monomial(const MultiIndex& word, const Rational& value) {
    NCPolynomial p(word.alphabet());
    p.add_term(word, value);
    return p;
}

Rational NCPolynomial::coeff(const MultiIndex& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPolynomial::add_term(const MultiIndex& word, const Rational& value) {
    if (word.alphabet() != alphabet_) throw ShapeError("monomial alphabet does not match polynomial");
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(word, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int NCPolynomial::degree() const {
    int deg = -1;
    for (const auto& [word, c] : terms_) deg = std::max(deg, static_cast<int>(word.size()));
    return deg;
}

bool NCPolynomial::is_monic() const {
    const int deg = degree();
    if (deg < 0) return false;
    int top = 0;
    bool unit = false;
    for (const auto& [word, c] : terms_) {
        if (static_cast<int>(word.size()) == deg) {
            ++top;
            unit = c == 1;
        }
    }
    return top == 1 && unit;
}

NCPolynomial NCPolynomial::adjoint() const {
    NCPolynomial out(alphabet_);
    for (const auto& [word, c] : terms_) out.terms_.emplace(word.reversed(), c);
    return out;
}

NCPolynomial NCPolynomial::relabeled(int alphabet, const std::vector<int>& letter_map) const {
    if (static_cast<int>(letter_map.size()) != alphabet_) throw ShapeError("relabel: letter map has wrong length");
    NCPolynomial out(alphabet);
    for (const auto& [word, c] : terms_) {
        std::vector<int> letters;
        for (int letter : word.letters()) letters.push_back(letter_map[static_cast<std::size_t>(letter - 1)]);
        out.add_term(MultiIndex(alphabet, std::move(letters)), c);
    }
    return out;
}

void NCPolynomial::check_compatible(const NCPolynomial& other) const {
    if (alphabet_ != other.alphabet_) throw ShapeError("polynomials over different alphabets");
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
    check_compatible(other);
    for (const auto& [word, c] : other.terms_) add_term(word, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
    check_compatible(other);
    for (const auto& [word, c] : other.terms_) add_term(word, -c);
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [word, c] : terms_) c *= scalar;
    return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    a.check_compatible(b);
    NCPolynomial out(a.alphabet_);
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) out.add_term(u + v, cu * cv);
    }
    return out;
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [word, c] = *it;
        Rational magnitude = c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude < 0) magnitude = -magnitude;
        if (word.empty()) {
            out += ncprob::to_string(magnitude);
        } else {
            if (magnitude != 1) out += ncprob::to_string(magnitude) + "*";
            out += "x[" + word.to_string() + "]";
        }
    }
    return out;
}

NCPolynomial left_derivative(int i, const NCPolynomial& p) {
    NCPolynomial out(p.alphabet());
    for (const auto& [word, c] : p.terms()) {
        if (!word.empty() && word.front() == i) out.add_term(word.suffix(1), c);
    }
    return out;
}

PolySeries::PolySeries(int z_alphabet, int degree_cap, int x_alphabet)
    : z_alphabet_(z_alphabet), cap_(degree_cap), x_alphabet_(x_alphabet) {
    coeffs_.assign(WordIndexer(z_alphabet, degree_cap).size(), NCPolynomial(x_alphabet));
}

PolySeries PolySeries::from_series(const NCSeries& f, int x_alphabet) {
    PolySeries out(f.alphabet(), f.degree_cap(), x_alphabet);
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        if (!f.coeff(i).is_zero()) out.coeffs_[i] = NCPolynomial::constant(x_alphabet, f.coeff(i));
    }
    return out;
}

PolySeries PolySeries::linear_form(const SeriesTuple& f, int x_alphabet) {
    if (f.empty() || static_cast<int>(f.size()) != x_alphabet) throw ShapeError("linear_form: need one series per x variable");
    PolySeries out(f.front().alphabet(), f.front().degree_cap(), x_alphabet);
    for (int i = 1; i <= x_alphabet; ++i) {
        const NCSeries& fi = f[static_cast<std::size_t>(i - 1)];
        if (fi.alphabet() != out.z_alphabet_ || fi.degree_cap() != out.cap_) throw ShapeError("linear_form: tuple shapes differ");
        for (std::size_t k = 0; k < fi.term_count(); ++k) {
            if (!fi.coeff(k).is_zero()) out.coeffs_[k].add_term(MultiIndex(x_alphabet, {i}), fi.coeff(k));
        }
    }
    return out;
}

const NCPolynomial& PolySeries::operator[](const MultiIndex& z_word) const {
    if (static_cast<int>(z_word.size()) > cap_ || z_word.alphabet() != z_alphabet_) {
        throw ShapeError("z-word " + z_word.to_string() + " outside the series");
    }
    return coeffs_[WordIndexer(z_alphabet_, cap_).index(z_word)];
}

void PolySeries::check_compatible(const PolySeries& other) const {
    if (z_alphabet_ != other.z_alphabet_ || cap_ != other.cap_ || x_alphabet_ != other.x_alphabet_) {
        throw ShapeError("polynomial-coefficient series shapes differ");
    }
}

PolySeries& PolySeries::operator+=(const PolySeries& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    a.check_compatible(b);
    const WordIndexer indexer(a.z_alphabet_, a.cap_);
    PolySeries out(a.z_alphabet_, a.cap_, a.x_alphabet_);
    for (int la = 0; la <= a.cap_; ++la) {
        for (std::size_t ra = 0; ra < indexer.count(la); ++ra) {
            const auto& pa = a.coeffs_[indexer.offset(la) + ra];
            if (pa.is_zero()) continue;
            for (int lb = 0; la + lb <= a.cap_; ++lb) {
                const std::size_t base = indexer.offset(la + lb) + ra * indexer.count(lb);
                for (std::size_t rb = 0; rb < indexer.count(lb); ++rb) {
                    const auto& pb = b.coeffs_[indexer.offset(lb) + rb];
                    if (!pb.is_zero()) out.coeffs_[base + rb] += pa * pb;
                }
            }
        }
    }
    return out;
}

PolySeries mul_inverse(const PolySeries& f) {
    const NCPolynomial& f0 = f.coeff(0);
    if (f0.degree() != 0) throw NotInvertibleError("constant coefficient is not a nonzero scalar");
    const Rational inv0 = Rational(1) / f0.terms().begin()->second;
    const WordIndexer indexer(f.z_alphabet(), f.degree_cap());
    PolySeries g(f.z_alphabet(), f.degree_cap(), f.x_alphabet());
    g.coeff(0) = NCPolynomial::constant(f.x_alphabet(), inv0);
    for (int n = 1; n <= f.degree_cap(); ++n) {
        for (std::size_t rank = 0; rank < indexer.count(n); ++rank) {
            NCPolynomial acc(f.x_alphabet());
            for (int k = 1; k <= n; ++k) {
                const std::size_t split = indexer.count(n - k);
                const auto& fp = f.coeff(indexer.offset(k) + rank / split);
                if (fp.is_zero()) continue;
                const auto& gs = g.coeff(indexer.offset(n - k) + rank % split);
                if (!gs.is_zero()) acc += fp * gs;
            }
            g.coeff(indexer.offset(n) + rank) = -(acc * inv0);
        }
    }
    return g;
}

}  // namespace ncprob
