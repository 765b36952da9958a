#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncprob/combinat.hpp"
#include "ncprob/rational.hpp"

namespace ncprob {

/// Degree-truncated formal power series in d noncommuting variables z_1..z_d
/// with exact rational coefficients.
///
/// Coefficients are stored densely for every word of length <= degree_cap, in
/// WordIndexer order. Arithmetic between series with different alphabets or
/// caps throws ShapeError.
class NCSeries {
public:
    NCSeries(int alphabet, int degree_cap);

    static NCSeries constant(int alphabet, int degree_cap, const Rational& value);
    static NCSeries one(int alphabet, int degree_cap) { return constant(alphabet, degree_cap, 1); }
    /// The generator z_i (1-based).
    static NCSeries variable(int alphabet, int degree_cap, int i);
    static NCSeries monomial(int degree_cap, const MultiIndex& word, const Rational& value = 1);

    int alphabet() const noexcept { return alphabet_; }
    int degree_cap() const noexcept { return cap_; }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    /// Coefficient of z_word; words beyond the cap read as zero.
    const Rational& operator[](const MultiIndex& word) const;
    void set(const MultiIndex& word, Rational value);
    void add_to(const MultiIndex& word, const Rational& value);

    const Rational& coeff(std::size_t flat) const { return coeffs_[flat]; }
    Rational& coeff(std::size_t flat) { return coeffs_[flat]; }
    const Rational& constant_term() const { return coeffs_.front(); }

    /// Flat index range [offset(n), offset(n+1)) holds the words of length n.
    std::size_t offset(int length) const;
    MultiIndex word(std::size_t flat) const;
    int length_of(std::size_t flat) const;

    bool is_zero() const;
    /// Smallest degree carrying a nonzero coefficient, or -1 for the zero series.
    int lowest_degree() const;
    /// Copy with every coefficient of degree > max_degree cleared.
    NCSeries truncated(int max_degree) const;
    /// Copy with coefficients of degree < min_degree cleared.
    NCSeries without_below(int min_degree) const;

    NCSeries& operator+=(const NCSeries& other);
    NCSeries& operator-=(const NCSeries& other);
    NCSeries& operator*=(const Rational& scalar);

    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
    friend NCSeries operator-(NCSeries a) { return a *= Rational(-1); }
    friend NCSeries operator*(const Rational& c, NCSeries a) { return a *= c; }
    friend NCSeries operator*(NCSeries a, const Rational& c) { return a *= c; }
    /// Truncated noncommutative Cauchy product.
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b);

    friend bool operator==(const NCSeries& a, const NCSeries& b);

    /// Human-readable listing of the nonzero terms, e.g. "1 + 2*z[1,2]".
    std::string to_string() const;

private:
    friend NCSeries multiply_up_to(const NCSeries& a, const NCSeries& b, int max_degree);
    void check_compatible(const NCSeries& other, const char* op) const;

    int alphabet_;
    int cap_;
    std::vector<Rational> coeffs_;
};

/// Product truncated at `max_degree` (<= cap); higher coefficients are zero.
NCSeries multiply_up_to(const NCSeries& a, const NCSeries& b, int max_degree);

/// Inverse with respect to multiplication. Throws NotInvertibleError when the
/// constant term vanishes.
NCSeries mul_inverse(const NCSeries& f);

/// Left noncommutative partial derivative D_i (1-based i): D_i z_u = [u(1)=i] z_(u(2..n)).
NCSeries left_derivative(int i, const NCSeries& f);

/// A d-tuple of series sharing alphabet and degree cap.
using SeriesTuple = std::vector<NCSeries>;

/// (z_1, ..., z_d).
SeriesTuple identity_tuple(int alphabet, int degree_cap);

/// f(args_1, ..., args_d): z_i replaced by args[i-1]. The arguments may live
/// over a different alphabet than f but must share one cap and have zero
/// constant term (SubstitutionError otherwise). The result lives over the
/// arguments' alphabet.
NCSeries substitute(const NCSeries& f, const SeriesTuple& args);

/// Componentwise substitution outer(inner).
SeriesTuple compose(const SeriesTuple& outer, const SeriesTuple& inner);

/// Inverse under composition of a tuple of the form G_i = z_i + O(z^2).
/// Throws UnsupportedLinearPartError for any other linear or constant part.
SeriesTuple comp_inverse(const SeriesTuple& g);

/// Solves C(args) = target for C, where args_i = z_i + O(z^2), degree by degree.
NCSeries solve_substitution(const NCSeries& target, const SeriesTuple& args);

/// Re-expresses f over `alphabet` letters with z_i renamed to z_(letter_map[i-1]).
NCSeries embed(const NCSeries& f, int alphabet, const std::vector<int>& letter_map);

}  // namespace ncprob
