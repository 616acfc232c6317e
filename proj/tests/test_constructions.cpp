#include <doctest.h>

#include <random>

#include "dioph/approx.hpp"
#include "dioph/constructions.hpp"
#include "dioph/errors.hpp"
#include "dioph/sampling.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

const auto kL1 = SpaceDescriptor::lp_sequence(1);
const auto kC0 = SpaceDescriptor::c0();

Rational frac_dist(const Rational& y) {
  Rational f = y - Rational(oracle::floor_r(y));
  return std::min(f, Rational(1 - f));
}

// Direct count for the first cobounded level: for every i in 1..256 and every
// q <= 16, the sup distance from x + e_i/64 to Lambda/q, coordinate by coordinate.
std::uint64_t cobounded_level_one_count(const std::map<Integer, Rational>& x) {
  std::uint64_t count = 0;
  for (long i = 1; i <= 256; ++i) {
    std::map<Integer, Rational> y = x;
    y[Integer(i)] += Rational(1, 64);
    bool hit = false;
    for (long q = 1; q <= 16 && !hit; ++q) {
      Rational worst = 0;
      for (const auto& [j, v] : y) worst = std::max(worst, Rational(frac_dist(v * q) / q));
      if (worst <= Rational(1, 256)) hit = true;
    }
    if (hit) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("noncobounded schedule constants") {
  auto s = schedule_noncobounded(kL1, parse_approx_function("pow:3"), 2);
  REQUIRE(s.depth() == 2);
  CHECK(s.level(1).rho == 1);
  CHECK(s.level(2).rho == Rational(1, 64));
  CHECK(s.rho_next == Rational(1, 8192));
  CHECK(s.level(1).threshold == 8);
  CHECK(s.level(1).threshold_factorial == 40320);
  CHECK(s.level(1).scale == 80640);
  CHECK(norm_of(kL1.norm, s.level(1).far).value == 80640);
  CHECK(norm_of(kL1.norm, s.level(1).step).value == 1);
  CHECK(norm_of(kL1.norm, s.level(2).step).value == Rational(1, 64));
  // N_2: q^3 >= 8 * 8192
  CHECK(s.level(2).threshold == 41);

  auto s1 = schedule_noncobounded(kL1, parse_approx_function("pow:1"), 1);
  CHECK(s1.level(1).threshold == 512);
  CHECK(s1.level(1).scale == 2 * factorial(512));

  CHECK_THROWS_AS(schedule_noncobounded(kC0, parse_approx_function("pow:1"), 1), UsageError);
  CHECK_THROWS_AS(schedule_noncobounded(kL1, parse_approx_function("pow:0"), 1), UsageError);
  CHECK_THROWS_AS(schedule_noncobounded(kL1, parse_approx_function("pow:1"), 3, SizeCap{4096}), SizeCapExceeded);
}

TEST_CASE("noncobounded points") {
  auto s = schedule_noncobounded(kL1, parse_approx_function("pow:3"), 1);
  SampledPoint zero = noncobounded_point(s, {Integer(0)});
  CHECK(zero.point.is_zero());
  CHECK(zero.tail_bound <= s.level(1).rho / 8);
  SampledPoint one = noncobounded_point(s, {Integer(1)});
  CHECK(one.point == s.level(1).step);
  CHECK(norm_of(kL1.norm, one.point).value == 1);
  CHECK_THROWS_AS(noncobounded_point(s, {Integer(2)}), UsageError);

  auto s3 = schedule_noncobounded(kL1, parse_approx_function("pow:3"), 3);
  SampledPoint a = sample_ba_noncobounded(s3, 42);
  SampledPoint b = sample_ba_noncobounded(s3, 42);
  CHECK(a.point == b.point);
  CHECK(a.choices == b.choices);
  // tail: sum_{n > K} 2^n rho_n, exactly, against a long partial sum
  Rational rho = s3.rho_next;
  Rational partial = 0;
  for (std::uint64_t n = 4; n < 40; ++n) {
    partial += Rational(pow2(n)) * rho;
    rho /= Rational(pow2(n + 5));
  }
  CHECK(partial <= a.tail_bound);
  CHECK(a.tail_bound <= s3.level(3).rho / 8);
}

TEST_CASE("noncobounded claim counts") {
  auto s = schedule_noncobounded(kL1, parse_approx_function("pow:3"), 3);
  for (std::uint64_t n = 1; n <= 3; ++n) {
    ClaimReport at_zero = claim_count_noncobounded(s, n, SparseVector());
    CHECK(at_zero.count == 1);
    CHECK(at_zero.hits == std::vector<Integer>{Integer(0)});
  }
  // A point of Lambda/N_2! is hit at i = 0.
  SparseVector grid = SparseVector::from_entries({{Integer(3), Rational(5) / Rational(s.level(2).threshold_factorial)}});
  CHECK(claim_count_noncobounded(s, 2, grid).count == 1);

  for (std::uint64_t n = 1; n <= 3; ++n) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      SparseVector center = sample_ba_noncobounded(s, mix_seed(1000 + n, t)).point;
      ClaimReport c = claim_count_noncobounded(s, n, center);
      CHECK(c.count <= 1);
      CHECK(c.bound == 1);
    }
  }
}

TEST_CASE("noncobounded transversality") {
  auto s = schedule_noncobounded(kL1, parse_approx_function("pow:3"), 2);
  TransversalityReport one = transversality_trials(s, SparseVector(), 1, 9);
  for (const Rational& f : one.frequencies) CHECK((f == 0 || f == 1));
  TransversalityReport a = transversality_trials(s, SparseVector(), 200, 3);
  TransversalityReport b = transversality_trials(s, SparseVector(), 200, 3);
  CHECK(a.hits == b.hits);
  CHECK(a.bounds == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
  // each trial hits level n exactly when the first n choices are a hit
  for (std::size_t n = 0; n < 2; ++n) CHECK(a.frequencies[n] == make_rational(a.hits[n], 200));
}

TEST_CASE("cobounded schedule") {
  auto s = schedule_cobounded(kC0, 2);
  CHECK(s.lambda == 16);
  CHECK(s.step(Integer(7), 1) == SparseVector::unit(Integer(7)) * Rational(1, 64));
  CHECK(s.step(Integer(65536), 2) == SparseVector::unit(Integer(65536)) * Rational(1, 1024));
  CHECK(s.choice_count(2) == 65536);
  CHECK(s.max_q(2) == 256);
  CHECK(s.radius(1) == Rational(1, 256));
  CHECK(norm_of(kC0.norm, s.step(Integer(3), 2)).value == Rational(1, 1024));
  CHECK_THROWS_AS(schedule_cobounded(kL1, 1), UsageError);

  auto l = schedule_cobounded(SpaceDescriptor::l_infty(), 2);
  CHECK(l.step(Integer(1), 2) == SparseVector::unit(Integer(1)) * Rational(1, 1024));
}

TEST_CASE("cobounded points") {
  auto s = schedule_cobounded(kC0, 1);
  SampledPoint p = cobounded_point(s, {Integer(5)});
  CHECK(p.point == SparseVector::unit(Integer(5)) * Rational(1, 64));
  CHECK(p.tail_bound == Rational(1, 960));
  CHECK_THROWS_AS(cobounded_point(s, {Integer(0)}), UsageError);
  CHECK_THROWS_AS(cobounded_point(s, {Integer(257)}), UsageError);

  auto s3 = schedule_cobounded(kC0, 3);
  CHECK(sample_ba_cobounded(s3, 7).point == sample_ba_cobounded(s3, 7).point);
  CHECK(sample_ba_cobounded(s3, 7).tail_bound == Rational(1, 4 * 4096 * 15));
}

TEST_CASE("cobounded claim counts") {
  auto s = schedule_cobounded(kC0, 2);
  CHECK(claim_count_cobounded(s, 1, SparseVector()).count == 0);
  CHECK(cobounded_level_one_count({}) == 0);

  // A grid point shifted back by v(1, 1) is hit at i = 1.
  SparseVector grid = SparseVector::from_entries({{Integer(1), Rational(3, 7)}, {Integer(2), Rational(1, 7)}});
  ClaimReport c = claim_count_cobounded(s, 1, grid - s.step(Integer(1), 1));
  CHECK(c.count >= 1);

  std::mt19937_64 gen(19);
  std::uniform_int_distribution<long> idx(1, 300);
  for (int t = 0; t < 20; ++t) {
    std::map<Integer, Rational> m;
    for (int k = 0; k < 3; ++k) m[Integer(idx(gen))] = oracle::random_rational(gen, 64, 0, 1);
    SparseVector x = SparseVector::from_entries(m);
    ClaimReport r1 = claim_count_cobounded(s, 1, x);
    CHECK(r1.count <= 16);
    CHECK(r1.count == cobounded_level_one_count(x.entries()));
  }
  for (std::uint64_t t = 0; t < 20; ++t) {
    SparseVector x = sample_ba_cobounded(s, mix_seed(77, t)).point;
    CHECK(claim_count_cobounded(s, 2, x).count <= 256);
  }
}

TEST_CASE("cobounded transversality") {
  auto s = schedule_cobounded(kC0, 2);
  TransversalityReport r = transversality_trials(s, SparseVector(), 50, 1);
  CHECK(r.bounds == std::vector<Rational>{Rational(1, 16), Rational(1, 256)});
  CHECK(r.hits == transversality_trials(s, SparseVector(), 50, 1).hits);
}

TEST_CASE("cobounded sampled points are badly approximable on a window") {
  auto s = schedule_cobounded(kC0, 3);
  ApproxFunction psi = parse_approx_function("pow:1");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SparseVector x = sample_ba_cobounded(s, seed).point;
    std::optional<Rational> prev;
    for (long hi : {16L, 64L, 256L}) {
      CertificateReport c = min_ratio(kC0, x, psi, Integer(1), Integer(hi));
      REQUIRE(c.min_ratio.exact.has_value());
      CHECK(*c.min_ratio.exact > 0);
      if (prev) CHECK(*c.min_ratio.exact <= *prev);
      prev = *c.min_ratio.exact;
    }
  }
}

TEST_CASE("sampler") {
  LevelSampler a(5);
  LevelSampler b(5);
  for (int t = 0; t < 100; ++t) CHECK(a.uniform_below(7) == b.uniform_below(7));
  LevelSampler c(6);
  std::vector<int> seen(3, 0);
  for (int t = 0; t < 3000; ++t) ++seen[c.uniform_below(3)];
  for (int k : seen) CHECK(k > 800);
  CHECK(c.uniform_below(1) == 0);
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}

TEST_CASE("well-approximable schedules") {
  WASchedule s = wa_schedule(kL1, parse_approx_function("pow:1"), 4);
  CHECK(s.q == std::vector<Integer>{1, 6, 36, 216, 1296});
  for (std::size_t n = 0; n + 1 < s.q.size(); ++n) {
    CHECK(s.q[n + 1] % s.q[n] == 0);
    CHECK(s.q[n + 1] > s.q[n]);
  }
  CHECK(wa_schedule(kL1, parse_approx_function("pow:2"), 1).q[1] == 6);
  WASchedule fast = wa_schedule(kC0, parse_approx_function("pow:2"), 3);
  // 2/q_{n+1} <= min(psi(q_n)/max(n,1), 1/(3 q_n)), least multiple
  for (std::size_t n = 0; n + 1 < fast.q.size(); ++n) {
    Rational qn(fast.q[n]);
    Rational bound = std::min(Rational(1 / (qn * qn) / std::max<long>(static_cast<long>(n), 1)), Rational(1 / (3 * qn)));
    CHECK(2 / Rational(fast.q[n + 1]) <= bound);
    Integer prev = fast.q[n + 1] - fast.q[n];
    if (prev > fast.q[n]) CHECK(2 / Rational(prev) > bound);
  }
  CHECK_THROWS_AS(wa_schedule(SpaceDescriptor::finite_dim(1, Norm::supremum()), parse_approx_function("pow:1"), 2),
                  UsageError);
}

TEST_CASE("well-approximable construction") {
  WAConstruction w = construct_wa(kL1, parse_approx_function("pow:1"), 3, {1, 2, 3});
  SparseVector expect = SparseVector::from_entries(
      {{Integer(1), Rational(1, 6)}, {Integer(2), Rational(1, 36)}, {Integer(3), Rational(1, 216)}});
  CHECK(w.point.point == expect);
  REQUIRE(w.witnesses.size() == 2);
  CHECK(w.witnesses[0].dist.value == Rational(7, 216));
  CHECK(w.witnesses[0].height == 6);
  CHECK(w.witnesses[1].dist.value == Rational(1, 216));
  CHECK(w.witnesses[1].height == 36);

  WAConstruction deep = construct_wa(kL1, parse_approx_function("pow:1"), 8, {1, 2, 3, 4, 5, 6, 7, 8});
  REQUIRE(deep.witnesses.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) {
    std::uint64_t N = k + 1;
    Integer qN = deep.schedule.q[N];
    CHECK(deep.witnesses[k].height <= qN);
    CHECK(deep.witnesses[k].dist.value <= Rational(1) / (Rational(qN) * N));
  }
  CHECK_THROWS_AS(construct_wa(kL1, parse_approx_function("pow:1"), 3, {1, 2}), UsageError);
}
