#include <cmath>

#include "dioph/constructions.hpp"
#include "dioph/sampling.hpp"

namespace dioph {

namespace {

Integer checked_factorial(const Integer& n, const SizeCap& cap) {
  if (n > 100'000'000) throw SizeCapExceeded("N = " + to_string(n) + " is too large for N!");
  const std::uint64_t k = to_u64(n);
  // log2(k!) from the log-gamma function, checked before the product is formed.
  double estimate = std::lgamma(static_cast<double>(k) + 1.0) / std::log(2.0);
  if (estimate > static_cast<double>(cap.bits)) {
    throw SizeCapExceeded(to_string(n) + "! has about " + std::to_string(static_cast<std::uint64_t>(estimate)) +
                          " bits, above the " + std::to_string(cap.bits) + "-bit cap");
  }
  return factorial(k);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("schedule check failed: " + what);
}

Rational noncobounded_tail(const NoncoboundedSchedule& s) {
  // Level n > K has norm below 2^n rho_n; the first omitted term is rho_K/16
  // and each later one is at most 2^-(K+5) times the previous.
  const std::uint64_t k = s.depth();
  Integer r = pow2(k + 5);
  return s.level(k).rho / 16 * Rational(r) / Rational(r - 1);
}

}  // namespace

const NoncoboundedLevel& NoncoboundedSchedule::level(std::uint64_t n) const {
  if (n < 1 || n > levels.size()) throw UsageError("level " + std::to_string(n) + " outside 1.." +
                                                   std::to_string(levels.size()));
  return levels[n - 1];
}

NoncoboundedSchedule schedule_noncobounded(const SpaceDescriptor& space, const ApproxFunction& psi,
                                           std::uint64_t depth, SizeCap cap) {
  if (space.kind != SpaceKind::LpSequence) throw UsageError("non-cobounded schedules need an l^p space");
  if (depth < 1 || depth > 32) throw UsageError("depth must be in 1..32");
  if (!tends_to_zero(psi) || !is_eventually_nonincreasing(psi)) {
    throw UsageError("psi = " + psi.spec() + " must be eventually nonincreasing and tend to zero");
  }
  const std::uint64_t p = space.norm.p;
  NoncoboundedSchedule s{space, psi, {}, Rational(0)};
  Rational rho = 1;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    Rational rho_next = rho / Rational(pow2(n + 5));
    Rational target = rho_next / 8;
    Integer big_n = least_index_at_most(psi, target);
    Integer fact = checked_factorial(big_n, cap);
    Integer m = pow2(n) * fact;
    if (bit_length(m) * p + 1 > cap.bits) {
      throw SizeCapExceeded("level " + std::to_string(n) + " needs more than " + std::to_string(cap.bits) + " bits");
    }
    SparseVector w = far_point(space, Rational(m), rho / 4);
    SparseVector v = w * (rho / Rational(m));

    // Self-checks.
    ThresholdResult at_n =
        compare_threshold(DistValue::from_distance(Norm::supremum(), target), Rational(1), psi, big_n);
    require(at_n.certified && at_n.order >= 0, "psi(N_" + std::to_string(n) + ") <= rho_{n+1}/8");
    if (big_n > psi.domain_start() && big_n - 1 >= monotone_start(psi)) {
      ThresholdResult before =
          compare_threshold(DistValue::from_distance(Norm::supremum(), target), Rational(1), psi, big_n - 1);
      require(before.order < 0, "N_" + std::to_string(n) + " is the least valid index");
    }
    require(norm_of(space.norm, w).value == power(Rational(m), p), "||w_n|| = M_n");
    ScaledNearest near = nearest_point_scaled(space, w, 1);
    require(near.p.is_zero() && near.dist.value == power(Rational(m), p), "dist(w_n, lattice) = M_n");
    require(norm_of(space.norm, v).value == power(rho, p), "||v_n|| = rho_n");

    s.levels.push_back({n, rho, big_n, fact, m, std::move(w), std::move(v)});
    rho = rho_next;
  }
  s.rho_next = rho;
  return s;
}

SampledPoint noncobounded_point(const NoncoboundedSchedule& s, const std::vector<Integer>& choices) {
  if (choices.size() != s.depth()) throw UsageError("need one choice per level");
  SparseVector point;
  for (std::uint64_t n = 1; n <= s.depth(); ++n) {
    const Integer& c = choices[n - 1];
    if (c < 0 || c >= pow2(n)) throw UsageError("level " + std::to_string(n) + " choice outside 0..2^n - 1");
    if (c != 0) point = point + s.level(n).step * Rational(c);
  }
  return {point, choices, noncobounded_tail(s)};
}

SampledPoint sample_ba_noncobounded(const NoncoboundedSchedule& s, std::uint64_t seed) {
  LevelSampler sampler(seed);
  std::vector<Integer> choices;
  for (std::uint64_t n = 1; n <= s.depth(); ++n) {
    choices.emplace_back(static_cast<unsigned long>(sampler.uniform_below(std::uint64_t{1} << n)));
  }
  return noncobounded_point(s, choices);
}

ClaimReport claim_count_noncobounded(const NoncoboundedSchedule& s, std::uint64_t n, const SparseVector& x) {
  const NoncoboundedLevel& lv = s.level(n);
  const Rational radius = lv.rho / 4;
  ClaimReport report{n, Integer(0), Integer(1), {}};
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    SparseVector y = x + lv.step * Rational(static_cast<unsigned long>(i));
    if (nearest_point_scaled(s.space, y, lv.threshold_factorial).dist.at_most(radius)) {
      report.hits.emplace_back(static_cast<unsigned long>(i));
      report.count += 1;
    }
  }
  if (report.count > report.bound) {
    throw InvariantViolation("level " + std::to_string(n) + ": " + to_string(report.count) +
                             " shifts lie within rho_n/4 of the scaled lattice");
  }
  return report;
}

TransversalityReport transversality_trials(const NoncoboundedSchedule& s, const SparseVector& shift,
                                           std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw UsageError("need at least one trial");
  const std::uint64_t k = s.depth();
  TransversalityReport out{trials, std::vector<std::uint64_t>(k, 0), {}, {}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    LevelSampler sampler(mix_seed(seed, t));
    SparseVector partial;
    for (std::uint64_t n = 1; n <= k; ++n) {
      const NoncoboundedLevel& lv = s.level(n);
      std::uint64_t c = sampler.uniform_below(std::uint64_t{1} << n);
      if (c != 0) partial = partial + lv.step * Rational(static_cast<unsigned long>(c));
      if (nearest_point_scaled(s.space, partial - shift, lv.threshold_factorial).dist.at_most(lv.rho / 4)) {
        ++out.hits[n - 1];
      }
    }
  }
  for (std::uint64_t n = 1; n <= k; ++n) {
    out.frequencies.push_back(make_rational(static_cast<unsigned long>(out.hits[n - 1]),
                                            static_cast<unsigned long>(trials)));
    out.bounds.push_back(make_rational(1, pow2(n)));
  }
  return out;
}

}  // namespace dioph
