#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws UsageError when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "num/den", "num" or a signed variant of either.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

// Nearest integer; exact halves go toward minus infinity.
Integer round_half_down(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Integer power(const Integer& base, std::uint64_t exponent);
Rational power(const Rational& base, std::uint64_t exponent);
// Negative exponents invert; base must then be nonzero.
Rational power(const Rational& base, std::int64_t exponent);

Integer factorial(std::uint64_t n);
Integer pow2(std::uint64_t exponent);

// Bit length of |value| (0 for zero).
std::uint64_t bit_length(const Integer& value);

std::strong_ordering compare(const Rational& a, const Rational& b);
std::strong_ordering compare(const Integer& a, const Integer& b);

// Integer that fits in 64 bits, or UsageError.
std::uint64_t to_u64(const Integer& value);
std::int64_t to_i64(const Integer& value);

}  // namespace dioph
