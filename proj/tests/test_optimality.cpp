#include <doctest.h>

#include <random>

#include "dioph/errors.hpp"
#include "dioph/optimality.hpp"
#include "oracles.hpp"

using namespace dioph;

TEST_CASE("psi_Q is below q^-2") {
  for (std::uint64_t i : {0u, 1u}) {
    ApproxFunction psi = make_psi_Q(QSequence::doubly_exponential(i));
    for (long q = 1; q <= 3000; q += 13) {
      CHECK(*exact_value(psi, Integer(q)) <= Rational(1, q * q));
    }
  }
}

TEST_CASE("psi_Q witnesses") {
  auto seq = QSequence::doubly_exponential(0);
  PsiQWitness w = psiQ_witness(Rational(3, 10), seq, 1);
  CHECK(w.big_q == 16);
  CHECK(w.witness.denominator <= 16);
  CHECK(w.witness.dist.value <= w.bound);
  CHECK(w.bound == Rational(1) / (Rational(w.witness.denominator) * 16));
  CHECK(w.bound <= w.psi_value);
  // brute force: some q <= 16 has |x - p/q| <= 1/(16 q)
  bool exists = false;
  for (long q = 1; q <= 16; ++q) {
    if (oracle::box_nearest({Rational(3, 10)}, Integer(q), 0, 1).dist <= Rational(1, 16 * q)) exists = true;
  }
  CHECK(exists);

  PsiQWitness exact = psiQ_witness(Rational(5, 13), seq, 1);
  CHECK(exact.witness.dist.value == 0);

  std::mt19937_64 gen(4);
  for (int t = 0; t < 30; ++t) {
    Rational x = oracle::random_rational(gen, 100000, 0, 1);
    for (std::uint64_t n : {1u, 2u}) {
      PsiQWitness r = psiQ_witness(x, seq, n);
      CHECK(r.witness.denominator <= r.big_q);
      CHECK(r.witness.dist.value <= r.bound);
      CHECK(r.bound <= r.psi_value);
      CHECK(r.psi_value == *exact_value(make_psi_Q(seq), r.witness.height));
    }
  }
  CHECK_THROWS_AS(psiQ_witness(Rational(3, 2), seq, 1), UsageError);
  CHECK_THROWS_AS(psiQ_witness(Rational(1, 3), seq, 0), UsageError);
}

TEST_CASE("strong optimality counterexample") {
  auto rows = strong_optimality_counterexample(2);
  REQUIRE(rows.size() == 4);
  std::vector<Integer> qs;
  for (const auto& r : rows) {
    qs.push_back(r.q);
    CHECK(r.phi_q3 == 1);
    CHECK(r.phi == std::min(r.psi0, r.psi1));
    CHECK(r.phi * power(Rational(r.q), std::uint64_t{3}) == 1);
  }
  CHECK(qs == std::vector<Integer>{16, 256, 65536, pow2(32)});
  CHECK(rows[0].psi1 == Rational(1, 4096));
  CHECK(rows[1].psi0 == Rational(1, 1 << 24));

  auto big = strong_optimality_counterexample(3);
  CHECK(big.size() == 6);
  for (const auto& r : big) CHECK(r.phi_q3 == 1);
  CHECK_THROWS_AS(strong_optimality_counterexample(0), UsageError);
}

TEST_CASE("improving Dirichlet's function on the unit interval") {
  ApproxFunction psi = parse_approx_function("pow:1");
  ImprovementReport rep = improve_dirichlet_interval(psi, 4);
  REQUIRE(rep.covers.size() == 4);
  std::vector<Integer> heights;
  for (const auto& c : rep.covers) heights.push_back(c.max_height);
  CHECK(heights == std::vector<Integer>{1, 1, 2, 3});

  for (const CoverReport& c : rep.covers) {
    CHECK(c.verified);
    std::vector<std::pair<Rational, Rational>> balls;
    for (const Rational& r : c.points) {
      CHECK(r >= 0);
      CHECK(r <= 1);
      CHECK(Integer(r.get_den()) <= c.max_height);
      balls.emplace_back(r, Rational(1) / (Rational(r.get_den()) * c.n));
    }
    CHECK(oracle::sweep_covers_unit(balls));
    // no smaller height covers
    if (c.max_height > 1) {
      std::vector<std::pair<Rational, Rational>> smaller;
      for (auto& [r, rad] : balls) {
        if (Integer(r.get_den()) < c.max_height) smaller.emplace_back(r, rad);
      }
      CHECK_FALSE(oracle::sweep_covers_unit(smaller));
    }
  }

  Rational prev_ratio = 2;
  for (const ImprovedValue& v : rep.table) {
    CHECK(v.psi == Rational(1) / Rational(v.q));
    CHECK(v.phi * v.m == v.psi);
    Rational ratio = v.phi / v.psi;
    CHECK(ratio <= prev_ratio);
    prev_ratio = ratio;
    if (v.q > rep.covers[0].max_height) CHECK(v.phi < v.psi);
  }

  CHECK(oracle::sweep_covers_unit({{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 2)}}));
  CHECK_FALSE(oracle::sweep_covers_unit({{Rational(0), Rational(1, 3)}, {Rational(1), Rational(1, 3)}}));
  CHECK(balls_cover_unit_interval({Rational(0), Rational(1)}, psi, 2));
  CHECK_FALSE(balls_cover_unit_interval({Rational(0), Rational(1)}, psi, 3));
  CHECK_THROWS_AS(improve_dirichlet_interval(parse_approx_function("pow:2"), 2), UsageError);
}

TEST_CASE("refuting a faster candidate") {
  auto line = SpaceDescriptor::finite_dim(1, Norm::supremum());
  SparseVector x = SparseVector::from_entries({{Integer(1), Rational(13, 21)}});
  ApproxFunction p2 = parse_approx_function("pow:2");
  ApproxFunction p3 = parse_approx_function("pow:3");
  std::vector<std::pair<Integer, Integer>> bands = {{1, 2}, {3, 4}, {5, 8}};
  RefutationReport r = refute_candidate(line, x, Rational(8, 21), p2, p3, bands);
  REQUIRE(r.bands.size() == 3);
  CHECK(r.bands[0].lower_bound == Rational(8, 21));
  CHECK(r.bands[1].lower_bound == Rational(8, 7));
  CHECK(r.bands[2].lower_bound == Rational(40, 21));
  CHECK(r.bounds_nondecreasing);
  for (const auto& b : r.bands) CHECK(ratio_at_least(b.phi_certificate.min_ratio, b.lower_bound));

  CHECK_THROWS_AS(refute_candidate(line, x, Rational(8, 21), p2, p2, bands), UsageError);
  CHECK_THROWS_AS(refute_candidate(line, x, Rational(0), p2, p3, bands), UsageError);
  // eps larger than the certified psi-ratio on some band
  CHECK_THROWS_AS(refute_candidate(line, x, Rational(1), p2, p3, bands), UsageError);
}
