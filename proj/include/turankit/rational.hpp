#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace turankit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Same as binomial() for values known to fit in 64 bits (n <= 66 is always safe).
std::int64_t binomial64(std::int64_t n, std::int64_t k);

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
    return Rational(num, den);
}

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or a finite decimal such as "0.01" exactly.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace turankit
