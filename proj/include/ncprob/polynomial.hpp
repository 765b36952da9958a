#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncprob/combinat.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// Polynomial in d noncommuting variables x_1..x_d; only nonzero terms are kept.
class NCPolynomial {
public:
    using Terms = std::map<MultiIndex, Rational>;

    explicit NCPolynomial(int alphabet) : alphabet_(alphabet) {}

    static NCPolynomial constant(int alphabet, const Rational& value);
    static NCPolynomial variable(int alphabet, int i);
    static NCPolynomial monomial(const MultiIndex& word, const Rational& value = 1);

    int alphabet() const noexcept { return alphabet_; }
    const Terms& terms() const noexcept { return terms_; }
    Rational coeff(const MultiIndex& word) const;
    void add_term(const MultiIndex& word, const Rational& value);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    /// Exactly one monomial of top degree, with coefficient 1.
    bool is_monic() const;

    /// Involution (c x_u)* = c x_(u reversed) for real coefficients.
    NCPolynomial adjoint() const;
    /// x_i renamed to x_(letter_map[i-1]) over the given alphabet.
    NCPolynomial relabeled(int alphabet, const std::vector<int>& letter_map) const;

    NCPolynomial& operator+=(const NCPolynomial& other);
    NCPolynomial& operator-=(const NCPolynomial& other);
    NCPolynomial& operator*=(const Rational& scalar);

    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator-(NCPolynomial a) { return a *= Rational(-1); }
    friend NCPolynomial operator*(const Rational& c, NCPolynomial a) { return a *= c; }
    friend NCPolynomial operator*(NCPolynomial a, const Rational& c) { return a *= c; }
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

    friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

    /// e.g. "x[1,2] - 1/2*x[1] + 3".
    std::string to_string() const;

private:
    void check_compatible(const NCPolynomial& other) const;

    int alphabet_;
    Terms terms_;
};

/// Left difference quotient D_i x_u = [u(1) = i] x_(u(2..n)).
NCPolynomial left_derivative(int i, const NCPolynomial& p);

/// Power series in z_1..z_d whose coefficients are polynomials in x_1..x_e;
/// the x's commute with the z's, so sum_u P_u(x) z_u multiplies as
/// (P z_u)(Q z_v) = (P Q) z_(u v).
class PolySeries {
public:
    PolySeries(int z_alphabet, int degree_cap, int x_alphabet);

    /// Scalar series embedded with constant polynomial coefficients.
    static PolySeries from_series(const NCSeries& f, int x_alphabet);
    /// sum_i x_i f_i for a tuple (f_1..f_e).
    static PolySeries linear_form(const SeriesTuple& f, int x_alphabet);

    int z_alphabet() const noexcept { return z_alphabet_; }
    int degree_cap() const noexcept { return cap_; }
    int x_alphabet() const noexcept { return x_alphabet_; }

    const NCPolynomial& coeff(std::size_t flat) const { return coeffs_[flat]; }
    NCPolynomial& coeff(std::size_t flat) { return coeffs_[flat]; }
    const NCPolynomial& operator[](const MultiIndex& z_word) const;
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    PolySeries& operator+=(const PolySeries& other);
    PolySeries& operator-=(const PolySeries& other);
    friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
    friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
    friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
    friend bool operator==(const PolySeries&, const PolySeries&) = default;

private:
    void check_compatible(const PolySeries& other) const;

    int z_alphabet_;
    int cap_;
    int x_alphabet_;
    std::vector<NCPolynomial> coeffs_;
};

/// Multiplicative inverse; the constant coefficient must be a nonzero scalar.
PolySeries mul_inverse(const PolySeries& f);

}  // namespace ncprob
