#pragma once

#include <cstdint>
#include <optional>

#include "dioph/rational.hpp"

namespace dioph {

// Closed rational interval [lo, hi]. Every routine here rounds outward, so
// the true value is always enclosed.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& v) { return {v, v}; }

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// Product of intervals with nonnegative endpoints.
Interval multiply(const Interval& a, const Interval& b);
Interval scale(const Interval& a, const Rational& positive_factor);
// 1/x for an interval with a strictly positive lower end.
Interval reciprocal(const Interval& a);
// x^k for integer k; requires lo > 0 when k < 0, lo >= 0 otherwise.
Interval integer_power(const Interval& a, std::int64_t k);
// x^(1/k) for x >= 0, enclosed to within 2^-bits.
Interval nth_root(const Interval& a, std::uint64_t k, unsigned bits);
Interval nth_root(const Rational& a, std::uint64_t k, unsigned bits);
// x^(num/den) for x > 0.
Interval rational_power(const Interval& a, const Rational& exponent, unsigned bits);

// Enclosure of atanh(z) for 0 <= z <= 1/3 with absolute error <= 2^-bits.
Interval atanh_bounds(const Rational& z, unsigned bits);
// Enclosure of ln(q) for q >= 1, absolute error about 2^-bits * (1 + log2 q).
Interval ln_bounds(const Integer& q, unsigned bits);

// Exact k-th root of a nonnegative rational, when it is rational.
std::optional<Rational> exact_root(const Rational& a, std::uint64_t k);

}  // namespace dioph
