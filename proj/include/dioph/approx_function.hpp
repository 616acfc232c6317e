#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "dioph/distance.hpp"
#include "dioph/errors.hpp"
#include "dioph/interval.hpp"
#include "dioph/q_sequence.hpp"
#include "dioph/rational.hpp"

namespace dioph {

class ApproxFunction;

// q -> c * q^(-a) * (ln q)^(-b)
struct PowerLog {
  Rational c;
  Rational a;
  Rational b;
};

// q -> 1 / (q * Q(q)) where Q(q) is the least sequence term >= q.
struct PsiQ {
  std::shared_ptr<const QSequence> seq;
};

// Pointwise minimum.
struct MinOf {
  std::shared_ptr<const ApproxFunction> first;
  std::shared_ptr<const ApproxFunction> second;
};

/// A positive function of the integer height, given symbolically so that
/// comparisons with rational thresholds can be decided exactly.
class ApproxFunction {
 public:
  using Variant = std::variant<PowerLog, PsiQ, MinOf>;

  // q^(-s)
  static ApproxFunction power(const Rational& s);
  static ApproxFunction power_log(const Rational& c, const Rational& a, const Rational& b);
  static ApproxFunction psi_q(QSequence seq);
  static ApproxFunction min_of(const ApproxFunction& f, const ApproxFunction& g);

  const Variant& variant() const { return v_; }
  const PowerLog* as_power_log() const { return std::get_if<PowerLog>(&v_); }

  // Round-trips through parse_approx_function for the built-in presets.
  std::string spec() const;
  // Smallest q where the function is defined: 2 when a log factor is present.
  Integer domain_start() const;

 private:
  explicit ApproxFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Grammar: "pow:<s>", "powlog:<c>,<a>,<b>", "psiQ:dexp:<i>", "min(<f>,<g>)".
ApproxFunction parse_approx_function(const std::string& spec, SizeCap cap = {});

// Least k >= 1 such that f(q)^k is rational for every q, if there is one.
std::optional<std::uint64_t> rational_power_degree(const ApproxFunction& f);
// f(q)^k exactly; k must be a multiple of rational_power_degree(f).
Rational power_value(const ApproxFunction& f, const Integer& q, std::uint64_t k);
// f(q) when it is rational.
std::optional<Rational> exact_value(const ApproxFunction& f, const Integer& q);

// Enclosure of f(q); the relative error shrinks as bits grows.
Interval evaluate(const ApproxFunction& f, const Integer& q, unsigned bits);
// Enclosure of f(q)^k.
Interval power_enclosure(const ApproxFunction& f, const Integer& q, std::uint64_t k, unsigned bits);

// An ordering that is exact unless certified is false, in which case the two
// sides agree to a relative 2^-256 and the order is reported as equal.
struct ThresholdResult {
  std::strong_ordering order = std::strong_ordering::equal;
  bool certified = true;
};

inline constexpr unsigned kEqualityToleranceBits = 256;

// Orders d against scale * f(q).
ThresholdResult compare_threshold(const DistValue& d, const Rational& scale, const ApproxFunction& f,
                                  const Integer& q);
// Orders f(q) against f(q') for two functions at possibly different heights,
// both raised to the power k (ratios of such values are compared in approx).
ThresholdResult compare_values(const ApproxFunction& f, const Integer& q, const Rational& f_factor,
                               const ApproxFunction& g, const Integer& r, const Rational& g_factor,
                               std::uint64_t k);

bool is_eventually_nonincreasing(const ApproxFunction& f);
bool tends_to_zero(const ApproxFunction& f);
// Some q0 such that f is nonincreasing on [q0, infinity).
Integer monotone_start(const ApproxFunction& f);
// Least N >= domain_start(f) with f(q) <= t for every q >= N.
Integer least_index_at_most(const ApproxFunction& f, const Rational& t);

}  // namespace dioph
