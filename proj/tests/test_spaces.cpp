#include <doctest.h>

#include <random>

#include "dioph/errors.hpp"
#include "dioph/space.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

SparseVector from_dense(const oracle::Dense& v) {
  std::map<Integer, Rational> m;
  for (std::size_t i = 0; i < v.size(); ++i) m[Integer(static_cast<unsigned long>(i + 1))] = v[i];
  return SparseVector::from_entries(m);
}

}  // namespace

TEST_CASE("space constants") {
  SpaceInfo fin_sup = space_info(SpaceDescriptor::finite_dim(3, Norm::supremum()));
  CHECK(fin_sup.codiameter == Rational(1, 2));
  CHECK(fin_sup.cobounded);
  CHECK(fin_sup.strongly_discrete);
  CHECK(fin_sup.epsilon_lambda == 1);

  SpaceInfo fin2 = space_info(SpaceDescriptor::finite_dim(2, Norm::lp(2)));
  CHECK(fin2.codiameter_is_power);
  CHECK(fin2.codiameter == Rational(1, 2));

  SpaceInfo lp1 = space_info(SpaceDescriptor::lp_sequence(1));
  CHECK_FALSE(lp1.codiameter.has_value());
  CHECK_FALSE(lp1.cobounded);
  CHECK_FALSE(lp1.strongly_discrete);

  for (auto s : {SpaceDescriptor::c0(), SpaceDescriptor::l_infty()}) {
    SpaceInfo info = space_info(s);
    CHECK(info.cobounded);
    CHECK(info.codiameter == Rational(1, 2));
    CHECK_FALSE(info.strongly_discrete);
    CHECK(info.epsilon_lambda == 1);
  }
}

TEST_CASE("lp points at growing distance from the lattice") {
  // (1/2, ..., 1/2) with k entries is at l^1 distance k/2.
  auto lp1 = SpaceDescriptor::lp_sequence(1);
  for (long k : {1L, 5L, 40L}) {
    SparseVector x = SparseVector::block(Integer(1), Integer(k), Rational(1, 2));
    CHECK(nearest_point_scaled(lp1, x, Integer(1)).dist.value == make_rational(k, 2));
  }
}

TEST_CASE("nearest point examples") {
  auto linf = SpaceDescriptor::l_infty();
  SparseVector x = from_dense({Rational(2, 5), Rational(-17, 10)});
  ScaledNearest n = nearest_point_scaled(linf, x, Integer(1));
  CHECK(n.p == from_dense({Rational(0), Rational(-2)}));
  CHECK(n.dist.value == Rational(2, 5));

  auto fin = SpaceDescriptor::finite_dim(1, Norm::supremum());
  ScaledNearest half = nearest_point_scaled(fin, from_dense({Rational(1, 2)}), Integer(3));
  CHECK(half.p == from_dense({Rational(1)}));
  CHECK(half.dist.value == Rational(1, 6));

  CHECK_THROWS_AS(check_point(SpaceDescriptor::finite_dim(2, Norm::supremum()), SparseVector::unit(Integer(3))),
                  UsageError);
}

TEST_CASE("nearest point matches the box oracle") {
  std::mt19937_64 gen(101);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<long> qd(1, 12);
  int cases = 0;
  for (Norm norm : {Norm::supremum(), Norm::lp(1), Norm::lp(2)}) {
    for (int t = 0; t < 200; ++t) {
      int d = dim(gen);
      oracle::Dense x;
      for (int i = 0; i < d; ++i) x.push_back(oracle::random_rational(gen, 10, -2, 2));
      Integer q(qd(gen));
      auto space = SpaceDescriptor::finite_dim(static_cast<std::uint64_t>(d), norm);
      ScaledNearest got = nearest_point_scaled(space, from_dense(x), q);
      oracle::Nearest want = oracle::box_nearest(x, q, norm.sup ? 0 : static_cast<unsigned>(norm.p));
      CHECK(got.dist.value == want.dist);
      oracle::Dense want_p;
      for (const Integer& v : want.p) want_p.push_back(Rational(v));
      CHECK(got.p == from_dense(want_p));
      ++cases;
    }
  }
  CHECK(cases >= 500);
}

TEST_CASE("cobounded spaces are within 1/(2q) of Lambda/q") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> qd(1, 100);
  std::uniform_int_distribution<long> idx(1, 1000);
  for (auto space : {SpaceDescriptor::c0(), SpaceDescriptor::l_infty()}) {
    for (int t = 0; t < 200; ++t) {
      std::map<Integer, Rational> m;
      for (int k = 0; k < 6; ++k) m[Integer(idx(gen))] = oracle::random_rational(gen, 1000, -5, 5);
      SparseVector x = SparseVector::from_entries(m);
      Integer q(qd(gen));
      ScaledNearest n = nearest_point_scaled(space, x, q);
      CHECK(n.dist.value <= Rational(1) / (2 * Rational(q)));
      CHECK(n.p.is_integral());
      // sup distance is the max over coordinates of dist(q x_i, Z) / q
      Rational expect = 0;
      for (const auto& [i, v] : x.entries()) {
        Rational y = v * Rational(q);
        Rational frac = y - Rational(oracle::floor_r(y));
        expect = std::max(expect, Rational(std::min(frac, Rational(1 - frac)) / Rational(q)));
      }
      CHECK(n.dist.value == expect);
    }
  }
}

TEST_CASE("separated basis") {
  auto c0 = SpaceDescriptor::c0();
  auto basis = separated_basis(c0, 3);
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(basis[i] == SparseVector::unit(Integer(static_cast<unsigned long>(i + 1))));
    CHECK(norm_of(c0.norm, basis[i]).value == 1);
    for (std::size_t j = 0; j < i; ++j) CHECK(distance(c0, basis[i], basis[j]).value == 1);
  }
  auto l1 = separated_basis(SpaceDescriptor::lp_sequence(1), 2);
  CHECK(distance(SpaceDescriptor::lp_sequence(1), l1[0], l1[1]).value == 2);
  auto l2 = separated_basis(SpaceDescriptor::lp_sequence(2), 2);
  CHECK(distance(SpaceDescriptor::lp_sequence(2), l2[0], l2[1]).value == 2);
  CHECK_THROWS_AS(separated_basis(SpaceDescriptor::finite_dim(2, Norm::supremum()), 3), UsageError);
}

TEST_CASE("far points") {
  auto lp1 = SpaceDescriptor::lp_sequence(1);
  auto lp2 = SpaceDescriptor::lp_sequence(2);
  SparseVector w = far_point(lp1, Rational(2), Rational(1, 10));
  CHECK(w == SparseVector::block(Integer(1), Integer(4), Rational(1, 2)));
  CHECK(nearest_point_scaled(lp1, w, Integer(1)).dist.value == 2);

  CHECK(far_point(lp1, Rational(1, 2), Rational(1)) == SparseVector::unit(Integer(1)) * Rational(1, 2));

  SparseVector w2 = far_point(lp2, Rational(2), Rational(1));
  CHECK(w2.support_size() == 16);
  CHECK(norm_of(lp2.norm, w2).value == 4);
  CHECK(nearest_point_scaled(lp2, w2, Integer(1)).dist.value == 4);

  CHECK_THROWS_AS(far_point(SpaceDescriptor::c0(), Rational(1), Rational(1)), UsageError);

  // Property: entries <= 1/2, norm R, lattice distance R.
  std::mt19937_64 gen(41);
  for (int t = 0; t < 60; ++t) {
    Rational r = oracle::random_rational(gen, 9, 0, 6);
    if (r == 0) continue;
    for (std::uint64_t p : {1u, 2u, 3u}) {
      auto s = SpaceDescriptor::lp_sequence(p);
      SparseVector f = far_point(s, r, Rational(1, 100));
      for (const Run& run : f.runs()) CHECK(run.value <= Rational(1, 2));
      CHECK(norm_of(s.norm, f).compare_to(r) == std::strong_ordering::equal);
      CHECK(nearest_point_scaled(s, f, Integer(1)).dist.compare_to(r) == std::strong_ordering::equal);
    }
  }
}
