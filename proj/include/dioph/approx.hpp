#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/approx_function.hpp"
#include "dioph/space.hpp"

namespace dioph {

/// A rational approximant together with the inequality it was checked
/// against.
struct WitnessReport {
  SparseVector r;
  Integer height;       // height_std(r)
  Integer denominator;  // the q at which r was found; height divides it
  DistValue dist;       // ||x - r||
  std::string bound;    // human-readable statement of the certified inequality
};

// Minimizes (dist, height, lexicographic r) over all r with height <= max_height.
WitnessReport best_approx(const SpaceDescriptor& space, const SparseVector& x, const Integer& max_height);

// Among q <= Q with ||x - p/q||^d q^d Q <= 1 (sup norm on R^d), the one whose
// rounding is closest to x, smaller q on ties. Finding none would contradict
// Dirichlet's theorem and raises InvariantViolation.
WitnessReport dirichlet_witness_finite(const SparseVector& x, std::uint64_t d, const Integer& max_height);

// Rounding of q*x in a cobounded space, certified against (codiameter + eps)/q
// and, for every built-in kind, against the sharper 1/(2q) per coordinate.
WitnessReport dirichlet_rounding(const SpaceDescriptor& space, const SparseVector& x, const Integer& q,
                                 const Rational& eps);

// Value of a ratio dist/f(h). When the ratio raised to `exponent` is rational,
// that power is kept exactly; `exact` holds the ratio itself when rational.
struct RatioValue {
  std::uint64_t exponent = 1;
  std::optional<Rational> power;
  std::optional<Rational> exact;
  Interval enclosure;
};

// ratio >= bound, decided exactly when possible and conservatively otherwise.
bool ratio_at_least(const RatioValue& ratio, const Rational& bound);

struct CertificateReport {
  RatioValue min_ratio;
  WitnessReport witness;
  Integer height_lo;
  Integer height_hi;
};

// Closest r with reduced height exactly h, if one exists in the space.
std::optional<ScaledNearest> nearest_of_exact_height(const SpaceDescriptor& space, const SparseVector& x,
                                                     const Integer& h);

// min over r with height_std(r) in [lo, hi] of dist(x, r)/f(height_std(r)).
// Requires hi < height_std(x) so that x itself is not in the window.
CertificateReport min_ratio(const SpaceDescriptor& space, const SparseVector& x, const ApproxFunction& f,
                            const Integer& lo, const Integer& hi);

std::vector<CertificateReport> banded_min_ratio(const SpaceDescriptor& space, const SparseVector& x,
                                                const ApproxFunction& phi,
                                                const std::vector<std::pair<Integer, Integer>>& bands);

}  // namespace dioph
