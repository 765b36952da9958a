#include "ncprob/rational.hpp"

#include "ncprob/error.hpp"

namespace ncprob {
namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Optional sign followed by digits.
Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!is_digits(digits)) {
        throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
    }
    return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

}  // namespace

Rational parse_rational(std::string_view text, bool require_canonical) {
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    const Integer num = parse_integer(num_text, text);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        const std::string_view den_text = text.substr(slash + 1);
        if (!is_digits(den_text)) {
            throw ParseError("not a rational number: \"" + std::string(text) + "\"");
        }
        den = Integer(std::string(den_text));
        if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational value(num, den);
    if (require_canonical && to_string(value) != text) {
        throw ParseError("rational not in canonical form: \"" + std::string(text) +
                         "\" (expected \"" + to_string(value) + "\")");
    }
    return value;
}

std::string to_string(const Rational& value) {
    const Integer den = denominator(value);
    if (den == 1) return numerator(value).str();
    return numerator(value).str() + "/" + den.str();
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (is_zero(base)) throw DomainError("zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result = 1;
    Rational factor = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1U) result *= factor;
        e >>= 1U;
        if (e != 0) factor *= factor;
    }
    return result;
}

}  // namespace ncprob
