#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ncprob {

/// Exact arbitrary-precision rational; expression templates are off so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p" or "p/q". With `require_canonical` the text must already be in
/// lowest terms with a positive denominator (and no leading '+' or zeros).
Rational parse_rational(std::string_view text, bool require_canonical = false);

/// "p" for integers, "p/q" otherwise; always lowest terms.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return value.is_zero(); }

/// Integer power with a possibly negative exponent (throws DomainError for 0^negative).
Rational pow(const Rational& base, long exponent);

}  // namespace ncprob
