#pragma once

#include <cstdint>
#include <vector>

#include "dioph/approx.hpp"
#include "dioph/approx_function.hpp"
#include "dioph/errors.hpp"
#include "dioph/space.hpp"

namespace dioph {

/// A point built from finitely many levels of a random or explicit choice.
struct SampledPoint {
  SparseVector point;
  std::vector<Integer> choices;  // one per level
  Rational tail_bound;           // bound on the norm of the omitted levels
};

// Outcome of counting the shifts of a level that land near the grid.
struct ClaimReport {
  std::uint64_t n = 0;
  Integer count;
  Integer bound;              // the count may not exceed this
  std::vector<Integer> hits;  // individually checked indices that hit
};

struct TransversalityReport {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> hits;    // per level, levels 1..K
  std::vector<Rational> frequencies;  // hits / trials
  std::vector<Rational> bounds;       // probability bound per level
};

// ---- Non-cobounded spaces (l^p) ----

struct NoncoboundedLevel {
  std::uint64_t n = 0;
  Rational rho;               // rho_1 = 1, rho_{n+1} = rho_n / 2^(n+5)
  Integer threshold;          // N_n: psi(q) <= rho_{n+1}/8 for q >= N_n
  Integer threshold_factorial;
  Integer scale;              // M_n = 2^n N_n!
  SparseVector far;           // w_n, at distance M_n from the lattice
  SparseVector step;          // v_n = (rho_n / M_n) w_n
};

struct NoncoboundedSchedule {
  SpaceDescriptor space;
  ApproxFunction psi;
  std::vector<NoncoboundedLevel> levels;  // levels[n-1] is level n
  Rational rho_next;                      // rho_{K+1}

  std::uint64_t depth() const { return levels.size(); }
  const NoncoboundedLevel& level(std::uint64_t n) const;
};

NoncoboundedSchedule schedule_noncobounded(const SpaceDescriptor& space, const ApproxFunction& psi,
                                           std::uint64_t depth, SizeCap cap = {});
// choices[n-1] in {0, ..., 2^n - 1}.
SampledPoint noncobounded_point(const NoncoboundedSchedule& s, const std::vector<Integer>& choices);
SampledPoint sample_ba_noncobounded(const NoncoboundedSchedule& s, std::uint64_t seed);
// #{i < 2^n : dist(x + i v_n, Lambda/N_n!) <= rho_n/4}; more than one hit
// raises InvariantViolation.
ClaimReport claim_count_noncobounded(const NoncoboundedSchedule& s, std::uint64_t n, const SparseVector& x);
TransversalityReport transversality_trials(const NoncoboundedSchedule& s, const SparseVector& shift,
                                           std::uint64_t trials, std::uint64_t seed);

// ---- Cobounded spaces (c_0, l^infinity) ----

struct CoboundedSchedule {
  SpaceDescriptor space;
  std::uint64_t depth = 0;
  Integer lambda = 16;
  Rational epsilon_lambda = 1;

  // v(i, n) = eps e_i / (4 lambda^n), i in 1..lambda^(2n)
  SparseVector step(const Integer& i, std::uint64_t n) const;
  Integer choice_count(std::uint64_t n) const;  // lambda^(2n)
  Integer max_q(std::uint64_t n) const;         // lambda^n
  Rational radius(std::uint64_t n) const;       // eps / (16 lambda^n)
};

CoboundedSchedule schedule_cobounded(const SpaceDescriptor& space, std::uint64_t depth);
// choices[n-1] in {1, ..., lambda^(2n)}.
SampledPoint cobounded_point(const CoboundedSchedule& s, const std::vector<Integer>& choices);
SampledPoint sample_ba_cobounded(const CoboundedSchedule& s, std::uint64_t seed);
// #{i : some q <= lambda^n has dist(x + v(i,n), Lambda/q) <= radius(n)};
// more than lambda^n hits raises InvariantViolation.
ClaimReport claim_count_cobounded(const CoboundedSchedule& s, std::uint64_t n, const SparseVector& x);
TransversalityReport transversality_trials(const CoboundedSchedule& s, const SparseVector& shift,
                                           std::uint64_t trials, std::uint64_t seed);

// ---- Well-approximable points ----

struct WASchedule {
  Rational c_lambda = 1;
  Rational epsilon_lambda = 1;
  std::vector<Integer> q;  // q_0 = 1, q_1, ..., q_K
};

WASchedule wa_schedule(const SpaceDescriptor& space, const ApproxFunction& psi, std::uint64_t depth);

struct WAConstruction {
  WASchedule schedule;
  SampledPoint point;
  std::vector<WitnessReport> witnesses;  // N = 1..K-1
};

// point = sum_{n=1}^K e_{choices[n-1]} / q_n, with the partial sums checked as
// approximants of quality psi(q_N)/max(N, 1).
WAConstruction construct_wa(const SpaceDescriptor& space, const ApproxFunction& psi, std::uint64_t depth,
                            const std::vector<Integer>& choices);

}  // namespace dioph
