#include "dioph/distance.hpp"

#include "dioph/errors.hpp"
#include "dioph/interval.hpp"

namespace dioph {

Norm Norm::lp(std::uint64_t p) {
  if (p == 0) throw UsageError("norm exponent must be at least 1");
  return {false, p};
}

std::string Norm::label() const { return sup ? "inf" : std::to_string(p); }

Norm parse_norm(const std::string& text) {
  if (text == "inf") return Norm::supremum();
  Rational p = parse_rational(text);
  if (p.get_den() != 1) throw UsageError("only integer norm exponents are supported, got " + text);
  if (p < 1) throw UsageError("norm exponent must be at least 1, got " + text);
  return Norm::lp(to_u64(p.get_num()));
}

DistValue DistValue::from_distance(const Norm& norm, const Rational& t) {
  if (t < 0) throw UsageError("negative distance");
  return {norm, power(t, norm.exponent())};
}

std::strong_ordering DistValue::compare_to(const Rational& t) const {
  if (t < 0) return std::strong_ordering::greater;
  return compare(value, power(t, norm.exponent()));
}

bool DistValue::has_rational_root() const { return exact_root(value, norm.exponent()).has_value(); }

Rational DistValue::root() const {
  auto r = exact_root(value, norm.exponent());
  if (!r) throw UsageError("distance is irrational: " + to_string(value) + " is not a perfect power");
  return *r;
}

std::strong_ordering compare(const DistValue& a, const DistValue& b) {
  if (!(a.norm == b.norm)) throw UsageError("comparing distances taken in different norms");
  return compare(a.value, b.value);
}

DistValue distance(const Norm& norm, const SparseVector& x, const SparseVector& r) {
  Rational total = 0;
  SparseVector::for_each_segment(x, r, [&](const Integer&, const Integer& len, const Rational& a, const Rational& b) {
    Rational diff = abs(a - b);
    if (norm.sup) {
      if (diff > total) total = diff;
    } else {
      total += power(diff, norm.p) * len;
    }
  });
  return {norm, total};
}

DistValue norm_of(const Norm& norm, const SparseVector& x) { return distance(norm, x, SparseVector()); }

}  // namespace dioph
