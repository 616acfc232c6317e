#pragma once

// Slow, independent reference implementations used only by the tests. They
// work on dense coordinate arrays and plain loops and share no search logic
// with the library.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dioph/rational.hpp"

namespace oracle {

using dioph::Integer;
using dioph::Rational;
using Dense = std::vector<Rational>;

inline Rational abs_r(const Rational& v) { return v < 0 ? Rational(-v) : v; }

// p-th power of the distance for finite p, the distance for p = 0 (sup).
inline Rational dense_dist(const Dense& x, const Dense& r, unsigned p) {
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational e = abs_r(x[i] - r[i]);
    if (p == 0) {
      total = std::max(total, e);
    } else {
      Rational t = 1;
      for (unsigned k = 0; k < p; ++k) t *= e;
      total += t;
    }
  }
  return total;
}

inline Integer dense_height(const Dense& r) {
  Integer h = 1;
  for (const Rational& v : r) {
    Integer den = v.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), den.get_mpz_t());
    h = h / g * den;
  }
  return h;
}

inline Integer floor_r(const Rational& v) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

// Visits every integer vector in the box floor(y_i) - w .. floor(y_i) + w.
template <typename F>
void for_each_box_point(const Dense& y, int w, F f) {
  const std::size_t d = y.size();
  std::vector<Integer> base(d);
  for (std::size_t i = 0; i < d; ++i) base[i] = floor_r(y[i]);
  std::vector<int> off(d, -w);
  for (;;) {
    std::vector<Integer> p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = base[i] + off[i];
    f(p);
    std::size_t k = 0;
    while (k < d && off[k] == w) off[k++] = -w;
    if (k == d) break;
    ++off[k];
  }
}

struct Nearest {
  std::vector<Integer> p;
  Rational dist;
};

// Minimum of ||x - p/q|| over the box floor(q x_i) +- w, ties broken toward the
// lexicographically smallest p.
inline Nearest box_nearest(const Dense& x, const Integer& q, unsigned p_norm, int w = 2) {
  Dense y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * Rational(q);
  std::optional<Nearest> best;
  for_each_box_point(y, w, [&](const std::vector<Integer>& p) {
    Dense r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]) / Rational(q);
    Rational d = dense_dist(x, r, p_norm);
    if (!best || d < best->dist || (d == best->dist && p < best->p)) best = Nearest{p, d};
  });
  return *best;
}

struct Approximant {
  Dense r;
  Integer height;
  Rational dist;
};

// Minimum of (dist, height, lex r) over q <= Q and the box floor(q x_i) +- 3.
inline Approximant box_best_approx(const Dense& x, unsigned Q, unsigned p_norm) {
  std::optional<Approximant> best;
  for (unsigned q = 1; q <= Q; ++q) {
    Dense y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * q;
    for_each_box_point(y, 3, [&](const std::vector<Integer>& p) {
      Dense r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = Rational(p[i], Integer(q));
        r[i].canonicalize();
      }
      Approximant a{r, dense_height(r), dense_dist(x, r, p_norm)};
      if (!best || a.dist < best->dist || (a.dist == best->dist && a.height < best->height) ||
          (a.dist == best->dist && a.height == best->height && a.r < best->r)) {
        best = a;
      }
    });
  }
  return *best;
}

// min over reduced p/q with q in [lo, hi] of |x - p/q| * q^s (one dimension).
inline Rational min_ratio_1d(const Rational& x, unsigned lo, unsigned hi, unsigned s) {
  std::optional<Rational> best;
  for (unsigned q = lo; q <= hi; ++q) {
    Integer c = floor_r(x * q);
    for (Integer p = c - q - 2; p <= c + q + 2; ++p) {
      Integer g;
      Integer qq(q);
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qq.get_mpz_t());
      if (g != 1) continue;
      Rational v = abs_r(x - Rational(p, qq));
      for (unsigned k = 0; k < s; ++k) v *= q;
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

// Does the union of closed intervals [c - r, c + r] contain [0, 1]? Sorts by
// left endpoint and sweeps.
inline bool sweep_covers_unit(std::vector<std::pair<Rational, Rational>> balls) {
  std::vector<std::pair<Rational, Rational>> iv;
  for (auto& [c, r] : balls) iv.emplace_back(c - r, c + r);
  std::sort(iv.begin(), iv.end());
  Rational reach = 0;
  bool started = false;
  for (auto& [a, b] : iv) {
    if (!started) {
      if (a > 0) return false;
      started = true;
    }
    if (a > reach) return false;
    reach = std::max(reach, b);
  }
  return started && reach >= 1;
}

// Sign of a - c * q^(-s) * (ln q)^(-t) at 512 bits, or 0 when too close to call.
inline int mpfr_threshold_sign(const Rational& a, const Rational& c, double s, double t, unsigned long q) {
  mpfr_t lhs, rhs, tmp, diff;
  mpfr_inits2(512, lhs, rhs, tmp, diff, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(lhs, a.get_mpq_t(), MPFR_RNDN);
  mpfr_set_ui(rhs, q, MPFR_RNDN);
  mpfr_set_d(tmp, -s, MPFR_RNDN);
  mpfr_pow(rhs, rhs, tmp, MPFR_RNDN);
  if (t != 0) {
    mpfr_set_ui(tmp, q, MPFR_RNDN);
    mpfr_log(tmp, tmp, MPFR_RNDN);
    mpfr_t e;
    mpfr_init2(e, 512);
    mpfr_set_d(e, -t, MPFR_RNDN);
    mpfr_pow(tmp, tmp, e, MPFR_RNDN);
    mpfr_clear(e);
    mpfr_mul(rhs, rhs, tmp, MPFR_RNDN);
  }
  mpfr_set_q(tmp, c.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(rhs, rhs, tmp, MPFR_RNDN);
  mpfr_sub(diff, lhs, rhs, MPFR_RNDN);
  // Relative gap below 2^-400 is treated as undecided.
  mpfr_abs(tmp, rhs, MPFR_RNDN);
  mpfr_mul_2si(tmp, tmp, -400, MPFR_RNDN);
  int out = 0;
  if (mpfr_cmpabs(diff, tmp) > 0) out = mpfr_sgn(diff);
  mpfr_clears(lhs, rhs, tmp, diff, static_cast<mpfr_ptr>(nullptr));
  return out;
}

inline Rational random_rational(std::mt19937_64& gen, long max_den, long num_lo, long num_hi_factor = 1) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  long den = den_dist(gen);
  std::uniform_int_distribution<long> num_dist(num_lo * den, num_hi_factor * den);
  Rational r(Integer(num_dist(gen)), Integer(den));
  r.canonicalize();
  return r;
}

}  // namespace oracle
