#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "dioph/rational.hpp"
#include "dioph/sparse_vector.hpp"

namespace dioph {

// Either the sup norm or the l^p norm for an integer p >= 1.
struct Norm {
  bool sup = true;
  std::uint64_t p = 1;

  static Norm supremum() { return {true, 1}; }
  static Norm lp(std::uint64_t p);

  // Exponent applied to distances before they are stored: p, or 1 for sup.
  std::uint64_t exponent() const { return sup ? 1 : p; }
  std::string label() const;  // "inf" or the decimal p
  friend bool operator==(const Norm&, const Norm&) = default;
};

Norm parse_norm(const std::string& text);

// A distance stored without roots: dist^p for finite p, dist itself for sup.
struct DistValue {
  Norm norm;
  Rational value;

  // DistValue for a plain distance t >= 0.
  static DistValue from_distance(const Norm& norm, const Rational& t);
  // dist <=> t, exactly.
  std::strong_ordering compare_to(const Rational& t) const;
  bool at_most(const Rational& t) const { return compare_to(t) <= 0; }
  // The distance itself when it is rational.
  bool has_rational_root() const;
  Rational root() const;  // throws when not rational
};

std::strong_ordering compare(const DistValue& a, const DistValue& b);

// ||x - r|| over the union of supports.
DistValue distance(const Norm& norm, const SparseVector& x, const SparseVector& r);
DistValue norm_of(const Norm& norm, const SparseVector& x);

}  // namespace dioph
