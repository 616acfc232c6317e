#include "dioph/approx.hpp"

#include <functional>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

constexpr std::uint64_t kMaxScan = 50'000'000;
constexpr std::uint64_t kMaxExpandedCoordinates = 64;
constexpr std::uint64_t kMaxSearchNodes = 2'000'000;

std::uint64_t scan_length(const Integer& n, const char* what) {
  if (n < 1) throw UsageError(std::string(what) + " must be at least 1");
  if (n > kMaxScan) throw SizeCapExceeded(std::string(what) + " " + to_string(n) + " is too large to scan");
  return to_u64(n);
}

// (dist, height, lexicographic r)
bool better(const WitnessReport& a, const WitnessReport& b) {
  auto c = compare(a.dist, b.dist);
  if (c != 0) return c < 0;
  if (a.height != b.height) return a.height < b.height;
  return lex_compare(a.r, b.r) < 0;
}

// Adds a per-coordinate cost to an accumulated cost (sum of p-th powers, or max).
Rational accumulate(const Norm& norm, const Rational& total, const Rational& err) {
  if (norm.sup) return err > total ? err : total;
  return total + power(err, norm.p);
}

}  // namespace

WitnessReport best_approx(const SpaceDescriptor& space, const SparseVector& x, const Integer& max_height) {
  check_point(space, x);
  const std::uint64_t qmax = scan_length(max_height, "max height");
  std::optional<WitnessReport> best;
  for (std::uint64_t qi = 1; qi <= qmax; ++qi) {
    const Integer q(static_cast<unsigned long>(qi));
    ScaledNearest near = nearest_point_scaled(space, x, q);
    if (best && compare(near.dist, best->dist) > 0) continue;

    // Rounding is optimal per coordinate; the only other optimal choices
    // come from exact halves, where both neighbours are equally close.
    std::vector<Run> base;
    std::vector<std::size_t> ties;
    for (const Run& run : x.runs()) {
      Rational y = run.value * Rational(q);
      if (y.get_den() == 2) ties.push_back(base.size());
      base.push_back({run.start, run.length, Rational(round_half_down(y))});
    }
    if (ties.size() > 16) throw SizeCapExceeded("too many tied coordinates at q = " + to_string(q));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ties.size()); ++mask) {
      std::vector<Run> runs = base;
      for (std::size_t t = 0; t < ties.size(); ++t) {
        if (mask >> t & 1) runs[ties[t]].value += 1;
      }
      SparseVector r = SparseVector::from_runs(std::move(runs)) / Rational(q);
      WitnessReport cand{r, height_std(r), q, near.dist, "minimal distance over heights <= " + to_string(max_height)};
      if (!best || better(cand, *best)) best = std::move(cand);
    }
  }
  return *best;
}

WitnessReport dirichlet_witness_finite(const SparseVector& x, std::uint64_t d, const Integer& max_height) {
  if (d == 0) throw UsageError("dimension must be at least 1");
  const SpaceDescriptor space = SpaceDescriptor::finite_dim(d, Norm::supremum());
  check_point(space, x);
  const std::uint64_t qmax = scan_length(max_height, "Q");
  const Rational big_q(max_height);
  // Closest approximant among the q that pass; ties keep the smaller q.
  std::optional<ScaledNearest> best;
  Integer best_q;
  for (std::uint64_t qi = 1; qi <= qmax; ++qi) {
    const Integer q(static_cast<unsigned long>(qi));
    ScaledNearest near = nearest_point_scaled(space, x, q);
    // (q * ||x - p/q||)^d * Q <= 1
    Rational scaled = near.dist.value * Rational(q);
    if (power(scaled, d) * big_q > 1) continue;
    if (!best || near.dist.value < best->dist.value) {
      best = std::move(near);
      best_q = q;
      if (best->dist.value == 0) break;
    }
  }
  if (!best) throw InvariantViolation("no q <= " + to_string(max_height) + " satisfies the Dirichlet bound");
  SparseVector r = best->p / Rational(best_q);
  return {r, height_std(r), best_q, best->dist,
          "||x - p/q||^" + std::to_string(d) + " * q^" + std::to_string(d) + " * " + to_string(max_height) +
              " <= 1"};
}

WitnessReport dirichlet_rounding(const SpaceDescriptor& space, const SparseVector& x, const Integer& q,
                                 const Rational& eps) {
  SpaceInfo info = space_info(space);
  if (!info.cobounded) throw UsageError("rounding bound needs a cobounded space, got " + space.kind_label());
  if (q < 1) throw UsageError("q must be at least 1");
  if (eps <= 0) throw UsageError("eps must be positive");
  ScaledNearest near = nearest_point_scaled(space, x, q);
  const Norm& norm = near.dist.norm;
  // Every coordinate is within 1/(2q), so the p-th power of q*dist is at most
  // the stored codiameter (itself a p-th power for finite p).
  Rational scaled = near.dist.value * power(Rational(q), norm.exponent());
  if (scaled > *info.codiameter) {
    throw InvariantViolation("rounding at q = " + to_string(q) + " is farther than codiam/q");
  }
  if (norm.sup && near.dist.value * 2 * Rational(q) > 1) {
    throw InvariantViolation("rounding at q = " + to_string(q) + " is farther than 1/(2q)");
  }
  SparseVector r = near.p / Rational(q);
  std::string bound = norm.sup ? "dist <= 1/(2q) <= (codiam + eps)/q with eps = " + to_string(eps)
                               : "dist^p <= codiam^p / q^p < ((codiam + eps)/q)^p with eps = " + to_string(eps);
  return {r, height_std(r), q, near.dist, bound};
}

bool ratio_at_least(const RatioValue& ratio, const Rational& bound) {
  if (bound <= 0) return true;
  if (ratio.exact) return *ratio.exact >= bound;
  if (ratio.power) return *ratio.power >= power(bound, ratio.exponent);
  return ratio.enclosure.lo >= bound;
}

std::optional<ScaledNearest> nearest_of_exact_height(const SpaceDescriptor& space, const SparseVector& x,
                                                     const Integer& h) {
  ScaledNearest rounded = nearest_point_scaled(space, x, h);
  Integer g = h;
  for (const Run& run : rounded.p.runs()) g = gcd(g, run.value.get_num());
  if (g == 1) return rounded;

  if (x.support_size() > kMaxExpandedCoordinates) {
    throw SizeCapExceeded("exact-height search needs at most " + std::to_string(kMaxExpandedCoordinates) +
                          " nonzero coordinates");
  }
  const Norm& norm = space.norm;
  std::vector<Integer> index;
  std::vector<Rational> y;
  for (const auto& [i, v] : x.entries()) {
    index.push_back(i);
    y.push_back(v * Rational(h));
  }
  const std::size_t n = y.size();
  std::vector<Integer> rounding(n);
  std::vector<Rational> suffix(n + 1, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    rounding[i] = round_half_down(y[i]);
    suffix[i] = accumulate(norm, suffix[i + 1], abs(y[i] - Rational(rounding[i])));
  }

  // Costs below are in units of h: (h * dist)^p, or h * dist for sup.
  std::optional<Rational> best_cost;
  std::vector<Integer> best_values;
  bool best_extra = false;

  Integer extra_index = x.first_free_index();
  bool extra_available = space.kind != SpaceKind::FiniteDim || extra_index <= static_cast<unsigned long>(space.d);

  std::vector<Integer> values(n);
  std::uint64_t nodes = 0;
  std::function<void(std::size_t, const Integer&, const Rational&)> search = [&](std::size_t i, const Integer& div,
                                                                                  const Rational& partial) {
    if (++nodes > kMaxSearchNodes) throw SizeCapExceeded("exact-height search exceeded its node budget");
    if (div == 1) {
      Rational cost = accumulate(norm, partial, Rational(0));
      cost = norm.sup ? (suffix[i] > cost ? suffix[i] : cost) : cost + suffix[i];
      if (!best_cost || cost < *best_cost) {
        best_cost = cost;
        best_values = values;
        for (std::size_t j = i; j < n; ++j) best_values[j] = rounding[j];
        best_extra = false;
      }
      return;
    }
    if (i == n) return;
    // Integers in order of distance from y[i]; ties go to the lower one.
    Integer down = floor_of(y[i]);
    Integer up = down + 1;
    for (;;) {
      Rational e_down = y[i] - Rational(down);
      Rational e_up = Rational(up) - y[i];
      bool take_down = e_down <= e_up;
      Integer v = take_down ? down : up;
      Rational err = take_down ? e_down : e_up;
      Rational c = accumulate(norm, partial, err);
      Rational lower = norm.sup ? (suffix[i + 1] > c ? suffix[i + 1] : c) : c + suffix[i + 1];
      if (best_cost && lower >= *best_cost) break;
      values[i] = v;
      search(i + 1, gcd(div, v), c);
      if (take_down) {
        --down;
      } else {
        ++up;
      }
    }
  };

  if (extra_available) {
    // Rounding everywhere plus a single +1 on a fresh coordinate.
    best_cost = accumulate(norm, suffix[0], Rational(1));
    best_values = rounding;
    best_extra = true;
  }
  search(0, h, Rational(0));
  if (!best_cost) return std::nullopt;

  std::map<Integer, Rational> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_values[i] != 0) entries.emplace(index[i], Rational(best_values[i]));
  }
  if (best_extra) entries.emplace(extra_index, Rational(1));
  Rational dist = *best_cost / power(Rational(h), norm.exponent());
  return ScaledNearest{SparseVector::from_entries(entries), DistValue{norm, dist}};
}

namespace {

RatioValue ratio_value(const DistValue& d, const ApproxFunction& f, const Integer& h) {
  constexpr unsigned kBits = 128;
  RatioValue out;
  const std::uint64_t p = d.norm.exponent();
  if (auto deg = rational_power_degree(f)) {
    out.exponent = p * *deg;
    out.power = power(d.value, *deg) / power_value(f, h, out.exponent);
    out.exact = exact_root(*out.power, out.exponent);
    out.enclosure = out.exact ? Interval::point(*out.exact) : nth_root(*out.power, out.exponent, kBits);
    return out;
  }
  out.exponent = p;
  Interval fp = power_enclosure(f, h, p, kBits);
  Interval ratio_p{d.value / fp.hi, d.value / fp.lo};
  out.enclosure = nth_root(ratio_p, p, kBits);
  return out;
}

}  // namespace

CertificateReport min_ratio(const SpaceDescriptor& space, const SparseVector& x, const ApproxFunction& f,
                            const Integer& lo, const Integer& hi) {
  check_point(space, x);
  if (lo < 1 || lo > hi) throw UsageError("height window [" + to_string(lo) + ", " + to_string(hi) + "] is empty");
  Integer hx = height_std(x);
  if (hi >= hx) {
    throw UsageError("height window reaches height_std(x) = " + to_string(hx) + ", where the ratio is 0");
  }
  scan_length(hi - lo + 1, "height window length");

  std::optional<Integer> best_h;
  std::optional<ScaledNearest> best;
  Integer start = std::max(lo, f.domain_start());
  for (Integer h = start; h <= hi; ++h) {
    auto cand = nearest_of_exact_height(space, x, h);
    if (!cand) continue;
    if (best) {
      // dist_c / f(h) < dist_b / f(h_b)  <=>  dist_c * f(h_b)^p < dist_b * f(h)^p
      ThresholdResult r = compare_values(f, *best_h, cand->dist.value, f, h, best->dist.value,
                                         cand->dist.norm.exponent());
      if (r.order >= 0) continue;
    }
    best_h = h;
    best = std::move(cand);
  }
  if (!best) throw UsageError("no height in the window admits an approximant");
  SparseVector r = best->p / Rational(*best_h);
  WitnessReport witness{r, *best_h, *best_h, best->dist,
                        "dist(x, r)/f(H(r)) is minimal over H(r) in [" + to_string(lo) + ", " + to_string(hi) + "]"};
  return {ratio_value(best->dist, f, *best_h), witness, lo, hi};
}

std::vector<CertificateReport> banded_min_ratio(const SpaceDescriptor& space, const SparseVector& x,
                                                const ApproxFunction& phi,
                                                const std::vector<std::pair<Integer, Integer>>& bands) {
  if (bands.empty()) throw UsageError("at least one band is required");
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].first > bands[i].second) throw UsageError("band " + std::to_string(i) + " is empty");
    if (i > 0 && bands[i - 1].second >= bands[i].first) {
      throw UsageError("bands must be disjoint and increasing");
    }
  }
  std::vector<CertificateReport> out;
  out.reserve(bands.size());
  for (const auto& [lo, hi] : bands) out.push_back(min_ratio(space, x, phi, lo, hi));
  return out;
}

}  // namespace dioph
