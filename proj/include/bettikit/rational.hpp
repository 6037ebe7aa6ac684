#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace bettikit {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b" into lowest terms. Throws ParseError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

Integer lcm(const Integer& a, const Integer& b);

// Laurent polynomial in t with integer coefficients, sparse, no zero terms.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::pair<const int, Integer>> terms);

    void add_term(int exponent, const Integer& coefficient);
    Integer coefficient(int exponent) const;
    const std::map<int, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial&) const = default;

    // Multiplicity of t = 1 as a root (the largest k with (1-t)^k dividing).
    // The zero polynomial reports -1.
    int order_at_one() const;
    // Quotient by (1 - t); requires the coefficient sum to vanish.
    IntPolynomial divide_by_one_minus_t() const;

    std::string to_string() const;

private:
    std::map<int, Integer> terms_;
};

// (1 - t)^k
IntPolynomial one_minus_t_power(int k);

}  // namespace bettikit
