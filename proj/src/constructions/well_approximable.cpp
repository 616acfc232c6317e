#include "dioph/constructions.hpp"

namespace dioph {

namespace {

// 2C/(k q_n) <= psi(q_n)/m, decided exactly.
bool step_ok(const WASchedule& s, const ApproxFunction& psi, const Integer& qn, std::uint64_t m, const Integer& k) {
  Rational lhs = 2 * s.c_lambda * Rational(static_cast<unsigned long>(m)) / Rational(k * qn);
  ThresholdResult r = compare_threshold(DistValue::from_distance(Norm::supremum(), lhs), Rational(1), psi, qn);
  return r.certified && r.order <= 0;
}

}  // namespace

WASchedule wa_schedule(const SpaceDescriptor& space, const ApproxFunction& psi, std::uint64_t depth) {
  SpaceInfo info = space_info(space);
  if (info.strongly_discrete) throw UsageError("well-approximable construction needs a space that is not strongly discrete");
  if (depth < 1 || depth > 64) throw UsageError("depth must be in 1..64");
  if (psi.domain_start() != 1) throw UsageError("psi must be defined at q = 1; log factors are not supported here");
  if (!is_eventually_nonincreasing(psi) || monotone_start(psi) != 1 || !tends_to_zero(psi)) {
    throw UsageError("psi = " + psi.spec() + " must be nonincreasing and tend to zero");
  }
  WASchedule s;
  s.epsilon_lambda = info.epsilon_lambda;
  s.q.emplace_back(1);
  // 2C/(k q_n) <= eps/(3 q_n)  <=>  k >= 6C/eps
  Integer k_min = std::max(Integer(2), ceil_of(6 * s.c_lambda / s.epsilon_lambda));
  for (std::uint64_t n = 0; n < depth; ++n) {
    const Integer qn = s.q.back();
    const std::uint64_t m = std::max<std::uint64_t>(n, 1);
    Integer hi = k_min;
    Integer step = 1;
    while (!step_ok(s, psi, qn, m, hi)) {
      hi += step;
      step *= 2;
      if (bit_length(hi) > 4096) throw SizeCapExceeded("q_" + std::to_string(n + 1) + " is too large");
    }
    Integer lo = std::max(k_min, Integer(hi - step / 2));
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (step_ok(s, psi, qn, m, mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    Integer next = hi * qn;
    if (next % qn != 0 || next <= qn || 2 * s.c_lambda * 3 * Rational(qn) > s.epsilon_lambda * Rational(next) ||
        !step_ok(s, psi, qn, m, hi)) {
      throw InvariantViolation("schedule step " + std::to_string(n + 1) + " failed its re-check");
    }
    s.q.push_back(next);
  }
  return s;
}

WAConstruction construct_wa(const SpaceDescriptor& space, const ApproxFunction& psi, std::uint64_t depth,
                            const std::vector<Integer>& choices) {
  if (depth < 2) throw UsageError("depth must be at least 2");
  if (choices.size() != depth) throw UsageError("need one basis index per level");
  for (const Integer& c : choices) {
    if (c < 1) throw UsageError("basis indices start at 1");
  }
  WAConstruction out;
  out.schedule = wa_schedule(space, psi, depth);
  const auto& q = out.schedule.q;

  std::vector<SparseVector> partial;
  SparseVector sum;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    sum = sum + SparseVector::unit(choices[n - 1]) / Rational(q[n]);
    partial.push_back(sum);
  }
  check_point(space, sum);
  // Omitted levels: sum_{n > K} C/q_n <= C/(5 q_K) since q_{n+1} >= 6 q_n.
  out.point = {sum, choices, out.schedule.c_lambda / (5 * Rational(q[depth]))};

  for (std::uint64_t big_n = 1; big_n < depth; ++big_n) {
    const SparseVector& r = partial[big_n - 1];
    Integer h = height_std(r);
    DistValue d = distance(space, sum, r);
    const std::uint64_t m = std::max<std::uint64_t>(big_n, 1);
    ThresholdResult cmp = compare_threshold(d, make_rational(1, static_cast<unsigned long>(m)), psi, q[big_n]);
    if (h > q[big_n] || !cmp.certified || cmp.order > 0) {
      throw InvariantViolation("witness N = " + std::to_string(big_n) + " fails dist <= psi(q_N)/N");
    }
    out.witnesses.push_back({r, h, q[big_n], d,
                             "H(r) <= " + to_string(q[big_n]) + " and dist(x, r) <= psi(" + to_string(q[big_n]) +
                                 ")/" + std::to_string(m)});
  }
  return out;
}

}  // namespace dioph
