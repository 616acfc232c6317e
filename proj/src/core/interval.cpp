#include "dioph/interval.hpp"

#include "dioph/errors.hpp"

namespace dioph {

Interval multiply(const Interval& a, const Interval& b) {
  if (a.lo < 0 || b.lo < 0) throw UsageError("interval product needs nonnegative operands");
  return {a.lo * b.lo, a.hi * b.hi};
}

Interval scale(const Interval& a, const Rational& positive_factor) {
  if (positive_factor <= 0) throw UsageError("interval scale factor must be positive");
  return {a.lo * positive_factor, a.hi * positive_factor};
}

Interval reciprocal(const Interval& a) {
  if (a.lo <= 0) throw UsageError("reciprocal of an interval touching zero");
  Rational lo = 1 / a.hi;
  Rational hi = 1 / a.lo;
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Interval integer_power(const Interval& a, std::int64_t k) {
  if (k == 0) return Interval::point(Rational(1));
  if (k < 0) return reciprocal(integer_power(a, -k));
  if (a.lo < 0) throw UsageError("integer power of an interval with a negative end");
  auto e = static_cast<std::uint64_t>(k);
  return {power(a.lo, e), power(a.hi, e)};
}

std::optional<Rational> exact_root(const Rational& a, std::uint64_t k) {
  if (a < 0) throw UsageError("root of a negative rational");
  if (k == 1) return a;
  Integer num;
  Integer den;
  int num_exact = mpz_root(num.get_mpz_t(), a.get_num_mpz_t(), k);
  int den_exact = mpz_root(den.get_mpz_t(), a.get_den_mpz_t(), k);
  if (num_exact && den_exact) return make_rational(num, den);
  return std::nullopt;
}

Interval nth_root(const Rational& a, std::uint64_t k, unsigned bits) {
  if (k == 0) throw UsageError("zeroth root");
  if (auto r = exact_root(a, k)) return Interval::point(*r);
  Integer scaled_num = a.get_num() << static_cast<mp_bitcnt_t>(bits * k);
  Integer lo_n;
  Integer hi_n;
  mpz_fdiv_q(lo_n.get_mpz_t(), scaled_num.get_mpz_t(), a.get_den_mpz_t());
  mpz_cdiv_q(hi_n.get_mpz_t(), scaled_num.get_mpz_t(), a.get_den_mpz_t());
  Integer lo_r;
  Integer hi_r;
  mpz_root(lo_r.get_mpz_t(), lo_n.get_mpz_t(), k);
  if (mpz_root(hi_r.get_mpz_t(), hi_n.get_mpz_t(), k) == 0) hi_r += 1;
  Integer denom = pow2(bits);
  return {make_rational(lo_r, denom), make_rational(hi_r, denom)};
}

Interval nth_root(const Interval& a, std::uint64_t k, unsigned bits) {
  return {nth_root(a.lo, k, bits).lo, nth_root(a.hi, k, bits).hi};
}

Interval rational_power(const Interval& a, const Rational& exponent, unsigned bits) {
  std::int64_t s = to_i64(exponent.get_num());
  std::uint64_t t = to_u64(exponent.get_den());
  return nth_root(integer_power(a, s), t, bits);
}

Interval atanh_bounds(const Rational& z, unsigned bits) {
  if (z < 0 || z * 3 > 1) throw UsageError("atanh series needs 0 <= z <= 1/3");
  const auto precision = static_cast<mp_bitcnt_t>(bits + 16);
  const Integer& a = z.get_num();
  const Integer& b = z.get_den();
  const Integer a2 = a * a;
  const Integer b2 = b * b;

  // t_lo <= 2^P z^(2j+1) <= t_hi, rounded outward at every step.
  Integer scaled = a << precision;
  Integer t_lo;
  Integer t_hi;
  mpz_fdiv_q(t_lo.get_mpz_t(), scaled.get_mpz_t(), b.get_mpz_t());
  mpz_cdiv_q(t_hi.get_mpz_t(), scaled.get_mpz_t(), b.get_mpz_t());

  Integer sum_lo = 0;
  Integer sum_hi = 0;
  Integer term;
  for (unsigned long k = 1;; k += 2) {
    mpz_fdiv_q_ui(term.get_mpz_t(), t_lo.get_mpz_t(), k);
    sum_lo += term;
    mpz_cdiv_q_ui(term.get_mpz_t(), t_hi.get_mpz_t(), k);
    sum_hi += term;

    Integer next = t_lo * a2;
    mpz_fdiv_q(t_lo.get_mpz_t(), next.get_mpz_t(), b2.get_mpz_t());
    next = t_hi * a2;
    mpz_cdiv_q(t_hi.get_mpz_t(), next.get_mpz_t(), b2.get_mpz_t());
    if (t_hi <= 1) break;
  }
  // Tail: sum_{i>=j} z^(2i+1)/(2i+1) <= z^(2j+1) / (1 - z^2) <= (9/8) z^(2j+1).
  Integer tail = 9 * t_hi;
  mpz_cdiv_q_ui(tail.get_mpz_t(), tail.get_mpz_t(), 8);
  sum_hi += tail;

  Integer denom = pow2(precision);
  return {make_rational(sum_lo, denom), make_rational(sum_hi, denom)};
}

Interval ln_bounds(const Integer& q, unsigned bits) {
  if (q < 1) throw UsageError("logarithm of an integer below 1");
  if (q == 1) return Interval::point(Rational(0));
  const std::uint64_t k = bit_length(q) - 1;
  const unsigned guard = static_cast<unsigned>(bit_length(Integer(static_cast<unsigned long>(k)))) + 2;

  // ln q = k ln 2 + ln(q / 2^k),  ln 2 = 2 atanh(1/3),  ln m = 2 atanh((m-1)/(m+1)).
  Interval ln2 = scale(atanh_bounds(Rational(1, 3), bits + guard), Rational(2));
  Interval out = {ln2.lo * static_cast<unsigned long>(k), ln2.hi * static_cast<unsigned long>(k)};
  Integer base = pow2(k);
  if (q != base) {
    Interval rest = scale(atanh_bounds(make_rational(q - base, q + base), bits + guard), Rational(2));
    out.lo += rest.lo;
    out.hi += rest.hi;
  }
  return out;
}

}  // namespace dioph
