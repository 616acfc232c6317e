#include "dioph/constructions.hpp"
#include "dioph/sampling.hpp"

namespace dioph {

namespace {

bool near_small_grid(const SpaceDescriptor& space, const SparseVector& y, const Integer& max_q,
                     const Rational& radius) {
  for (Integer q = 1; q <= max_q; ++q) {
    if (nearest_point_scaled(space, y, q).dist.at_most(radius)) return true;
  }
  return false;
}

void check_level(const CoboundedSchedule& s, std::uint64_t n) {
  if (n < 1 || n > s.depth) throw UsageError("level " + std::to_string(n) + " outside 1.." + std::to_string(s.depth));
}

}  // namespace

SparseVector CoboundedSchedule::step(const Integer& i, std::uint64_t n) const {
  return SparseVector::block(i, 1, epsilon_lambda / (4 * Rational(power(lambda, n))));
}

Integer CoboundedSchedule::choice_count(std::uint64_t n) const { return power(lambda, 2 * n); }

Integer CoboundedSchedule::max_q(std::uint64_t n) const { return power(lambda, n); }

Rational CoboundedSchedule::radius(std::uint64_t n) const {
  return epsilon_lambda / (16 * Rational(power(lambda, n)));
}

CoboundedSchedule schedule_cobounded(const SpaceDescriptor& space, std::uint64_t depth) {
  if (space.kind != SpaceKind::C0 && space.kind != SpaceKind::LInfty) {
    throw UsageError("cobounded schedules need c0 or linf, got " + space.kind_label());
  }
  if (depth < 1 || depth > 7) throw UsageError("depth must be in 1..7");
  CoboundedSchedule s;
  s.space = space;
  s.depth = depth;
  s.epsilon_lambda = space_info(space).epsilon_lambda;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    if (norm_of(space.norm, s.step(1, n)).value != s.epsilon_lambda / (4 * Rational(s.max_q(n)))) {
      throw InvariantViolation("level vector norm mismatch");
    }
  }
  return s;
}

SampledPoint cobounded_point(const CoboundedSchedule& s, const std::vector<Integer>& choices) {
  if (choices.size() != s.depth) throw UsageError("need one choice per level");
  SparseVector point;
  for (std::uint64_t n = 1; n <= s.depth; ++n) {
    const Integer& c = choices[n - 1];
    if (c < 1 || c > s.choice_count(n)) {
      throw UsageError("level " + std::to_string(n) + " choice outside 1.." + to_string(s.choice_count(n)));
    }
    point = point + s.step(c, n);
  }
  // sum_{n > K} eps / (4 lambda^n)
  Rational tail = s.epsilon_lambda / (4 * Rational(s.max_q(s.depth)) * Rational(s.lambda - 1));
  return {point, choices, tail};
}

SampledPoint sample_ba_cobounded(const CoboundedSchedule& s, std::uint64_t seed) {
  LevelSampler sampler(seed);
  std::vector<Integer> choices;
  for (std::uint64_t n = 1; n <= s.depth; ++n) {
    std::uint64_t c = sampler.uniform_below(to_u64(s.choice_count(n)));
    choices.emplace_back(static_cast<unsigned long>(c + 1));
  }
  return cobounded_point(s, choices);
}

ClaimReport claim_count_cobounded(const CoboundedSchedule& s, std::uint64_t n, const SparseVector& x) {
  check_level(s, n);
  const Integer range = s.choice_count(n);
  const Integer max_q = s.max_q(n);
  const Rational radius = s.radius(n);
  ClaimReport report{n, Integer(0), max_q, {}};

  // Indices inside supp(x) are checked one by one.
  Integer inside = 0;
  for (const Run& run : x.runs()) {
    if (run.start > range) break;
    Integer last = std::min(Integer(run.end() - 1), range);
    inside += last - run.start + 1;
    if (inside > 100000) throw SizeCapExceeded("center has too many coordinates in the level range");
    for (Integer i = run.start; i <= last; ++i) {
      if (near_small_grid(s.space, x + s.step(i, n), max_q, radius)) {
        report.hits.push_back(i);
        report.count += 1;
      }
    }
  }
  // All indices outside supp(x) give the same multiset of coordinates, so
  // one representative decides them all.
  Integer outside = range - inside;
  Integer free_index = x.first_free_index();
  if (outside > 0 && near_small_grid(s.space, x + s.step(free_index, n), max_q, radius)) {
    report.count += outside;
  }
  if (report.count > report.bound) {
    throw InvariantViolation("level " + std::to_string(n) + ": " + to_string(report.count) +
                             " shifts meet the grids, above lambda^n = " + to_string(report.bound));
  }
  return report;
}

TransversalityReport transversality_trials(const CoboundedSchedule& s, const SparseVector& shift,
                                           std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw UsageError("need at least one trial");
  const std::uint64_t k = s.depth;
  TransversalityReport out{trials, std::vector<std::uint64_t>(k, 0), {}, {}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    LevelSampler sampler(mix_seed(seed, t));
    SparseVector partial;
    for (std::uint64_t n = 1; n <= k; ++n) {
      std::uint64_t c = sampler.uniform_below(to_u64(s.choice_count(n)));
      partial = partial + s.step(Integer(static_cast<unsigned long>(c + 1)), n);
      if (near_small_grid(s.space, partial - shift, s.max_q(n), s.radius(n))) ++out.hits[n - 1];
    }
  }
  for (std::uint64_t n = 1; n <= k; ++n) {
    out.frequencies.push_back(make_rational(static_cast<unsigned long>(out.hits[n - 1]),
                                            static_cast<unsigned long>(trials)));
    out.bounds.push_back(make_rational(1, s.max_q(n)));
  }
  return out;
}

}  // namespace dioph
