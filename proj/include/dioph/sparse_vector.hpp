#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

// A maximal block of consecutive coordinates [start, start + length) that
// all hold the same nonzero value.
struct Run {
  Integer start;
  Integer length;
  Rational value;

  Integer end() const { return start + length; }  // one past the last index
  friend bool operator==(const Run&, const Run&) = default;
};

/// Finitely supported rational sequence indexed from 1.
///
/// Stored as sorted, disjoint runs with no zero values and no two adjacent
/// runs holding the same value, so equal vectors have identical storage.
/// The run form keeps vectors such as (1/2)(e_1 + ... + e_M) cheap when M is a
/// thousand-digit integer.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector from_entries(const std::map<Integer, Rational>& entries);
  static SparseVector unit(const Integer& index);
  // value on every index in [start, start + length).
  static SparseVector block(const Integer& start, const Integer& length, const Rational& value);
  static SparseVector from_runs(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  bool is_zero() const { return runs_.empty(); }
  Rational at(const Integer& index) const;

  // Number of nonzero coordinates.
  Integer support_size() const;
  // Largest nonzero index, 0 for the zero vector.
  Integer max_index() const;
  // Smallest index >= 1 holding zero.
  Integer first_free_index() const;
  // Entry map; only sensible when support_size() is small.
  std::map<Integer, Rational> entries() const;
  bool is_integral() const;

  SparseVector operator+(const SparseVector& other) const;
  SparseVector operator-(const SparseVector& other) const;
  SparseVector operator-() const;
  SparseVector operator*(const Rational& factor) const;
  SparseVector operator/(const Rational& divisor) const;

  // Applies f coordinatewise to (a_i, b_i) over the union of supports, with
  // f(0, 0) required to be 0.
  static SparseVector combine(const SparseVector& a, const SparseVector& b,
                              const std::function<Rational(const Rational&, const Rational&)>& f);
  SparseVector map(const std::function<Rational(const Rational&)>& f) const;

  // Visits maximal segments of the union of breakpoints of a and b where both
  // vectors are constant: f(start, length, a_value, b_value). Segments where
  // both are zero are skipped.
  static void for_each_segment(
      const SparseVector& a, const SparseVector& b,
      const std::function<void(const Integer&, const Integer&, const Rational&, const Rational&)>& f);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  explicit SparseVector(std::vector<Run> runs) : runs_(std::move(runs)) {}
  static std::vector<Run> normalize(std::vector<Run> runs);

  std::vector<Run> runs_;
};

// Lexicographic order of the dense sequences (x_1, x_2, ...).
std::strong_ordering lex_compare(const SparseVector& a, const SparseVector& b);

/// Standard height: least q >= 1 with q * r integral (lcm of denominators).
Integer height_std(const SparseVector& r);

}  // namespace dioph
