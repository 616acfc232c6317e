#include "dioph/optimality.hpp"

#include <algorithm>

namespace dioph {

ApproxFunction make_psi_Q(QSequence seq) { return ApproxFunction::psi_q(std::move(seq)); }

PsiQWitness psiQ_witness(const Rational& x, const QSequence& seq, std::uint64_t n, std::uint64_t max_scan) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (x < 0 || x > 1) throw UsageError("x must lie in [0, 1]");
  Integer big_q = seq.term(n);
  if (big_q > static_cast<unsigned long>(max_scan)) {
    throw SizeCapExceeded("Q_" + std::to_string(n) + " = " + to_string(big_q) + " is beyond the scan limit");
  }
  SparseVector xv = SparseVector::from_entries({{Integer(1), x}});
  WitnessReport w = dirichlet_witness_finite(xv, 1, big_q);
  ApproxFunction psi = make_psi_Q(seq);

  const Integer& q = w.denominator;
  Rational bound = make_rational(1, q * big_q);
  if (!w.dist.at_most(bound)) throw InvariantViolation("|x - p/q| > 1/(q Q_n)");
  // Q(q) <= Q_n because q <= Q_n; the reduced height can only raise psi_Q.
  Rational psi_q = power_value(psi, q, 1);
  Rational psi_h = power_value(psi, w.height, 1);
  if (bound > psi_q || psi_q > psi_h || !w.dist.at_most(psi_h)) {
    throw InvariantViolation("psi_Q chain fails at q = " + to_string(q));
  }
  w.bound = "|x - r| <= 1/(q Q_" + std::to_string(n) + ") <= psi_Q(q) <= psi_Q(H(r))";
  return {w, n, big_q, bound, psi_h};
}

std::vector<CounterexampleRow> strong_optimality_counterexample(std::uint64_t n_max, SizeCap cap) {
  if (n_max < 1) throw UsageError("n_max must be at least 1");
  QSequence s0 = QSequence::doubly_exponential(0, cap);
  QSequence s1 = QSequence::doubly_exponential(1, cap);
  ApproxFunction f0 = make_psi_Q(s0);
  ApproxFunction f1 = make_psi_Q(s1);
  std::vector<std::pair<Integer, std::string>> qs;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    qs.emplace_back(s0.term(n), "Q0_" + std::to_string(n));
    qs.emplace_back(s1.term(n), "Q1_" + std::to_string(n));
  }
  std::sort(qs.begin(), qs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CounterexampleRow> rows;
  for (const auto& [q, source] : qs) {
    Rational p0 = power_value(f0, q, 1);
    Rational p1 = power_value(f1, q, 1);
    Rational phi = std::min(p0, p1);
    Rational prod = phi * power(Rational(q), std::uint64_t{3});
    if (prod > 1) throw InvariantViolation("phi(q) q^3 > 1 at q = " + to_string(q));
    rows.push_back({q, source, p0, p1, phi, prod});
  }
  return rows;
}

namespace {

// Lower bound for psi(q)/phi(q), both power-log.
Rational growth_lower_bound(const PowerLog& psi, const PowerLog& phi, const Integer& q) {
  ApproxFunction ratio = ApproxFunction::power_log(psi.c / phi.c, psi.a - phi.a, psi.b - phi.b);
  if (auto v = exact_value(ratio, q)) return *v;
  return evaluate(ratio, q, 128).lo;
}

}  // namespace

RefutationReport refute_candidate(const SpaceDescriptor& space, const SparseVector& x, const Rational& eps,
                                  const ApproxFunction& psi, const ApproxFunction& phi,
                                  const std::vector<std::pair<Integer, Integer>>& bands) {
  if (eps <= 0) throw UsageError("eps must be positive");
  if (growth_compare(phi, psi) != GrowthVerdict::RatioToZero) {
    throw UsageError("phi/psi must tend to zero, got " + to_string(growth_compare(phi, psi)));
  }
  std::vector<CertificateReport> psi_certs = banded_min_ratio(space, x, psi, bands);
  std::vector<CertificateReport> phi_certs = banded_min_ratio(space, x, phi, bands);
  const PowerLog& pp = *psi.as_power_log();
  const PowerLog& pf = *phi.as_power_log();

  RefutationReport report{eps, {}, true};
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (!ratio_at_least(psi_certs[i].min_ratio, eps)) {
      throw UsageError("eps = " + to_string(eps) + " exceeds the psi-ratio on band " + std::to_string(i));
    }
    const auto& [lo, hi] = bands[i];
    if (hi - lo > 1000000) throw SizeCapExceeded("band too wide");
    Integer start = std::max({lo, psi.domain_start(), phi.domain_start()});
    std::optional<Rational> min_growth;
    for (Integer q = start; q <= hi; ++q) {
      Rational g = growth_lower_bound(pp, pf, q);
      if (!min_growth || g < *min_growth) min_growth = g;
    }
    if (!min_growth) throw UsageError("band " + std::to_string(i) + " lies below the functions' domain");
    Rational bound = eps * *min_growth;
    // Each ratio dist/phi(h) = (dist/psi(h)) (psi(h)/phi(h)) >= eps * min psi/phi.
    if (!ratio_at_least(phi_certs[i].min_ratio, bound)) {
      throw InvariantViolation("band " + std::to_string(i) + " phi-ratio is below eps * min psi/phi");
    }
    if (!report.bands.empty() && bound < report.bands.back().lower_bound) report.bounds_nondecreasing = false;
    report.bands.push_back({lo, hi, psi_certs[i], phi_certs[i], *min_growth, bound});
  }
  return report;
}

bool balls_cover_unit_interval(const std::vector<Rational>& points, const ApproxFunction& psi, std::uint64_t m) {
  if (points.empty() || points.front() != 0 || points.back() != 1) return false;
  const Rational mr(static_cast<unsigned long>(m));
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const Rational& a = points[k];
    const Rational& b = points[k + 1];
    if (!(a < b)) return false;
    auto ra = exact_value(psi, a.get_den());
    auto rb = exact_value(psi, b.get_den());
    if (!ra || !rb) throw UnsupportedVariant("cover check needs rational values of psi");
    if (a + *ra / mr < b - *rb / mr) return false;
  }
  return true;
}

ImprovementReport improve_dirichlet_interval(const ApproxFunction& psi, std::uint64_t n) {
  const PowerLog* pl = psi.as_power_log();
  if (pl == nullptr || pl->a != 1 || pl->b != 0) throw UsageError("improvement needs psi(q) = c/q");
  if (n < 1 || n > 200) throw UsageError("n must be in 1..200");
  ImprovementReport out;
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<Rational> farey;
    for (std::uint64_t qstar = 1;; ++qstar) {
      if (qstar > 100000) throw SizeCapExceeded("no cover found below height 100000");
      const Integer q(static_cast<unsigned long>(qstar));
      for (std::uint64_t p = 0; p <= qstar; ++p) {
        if (gcd(Integer(static_cast<unsigned long>(p)), q) == 1) farey.push_back(make_rational(static_cast<unsigned long>(p), q));
      }
      std::sort(farey.begin(), farey.end());
      if (balls_cover_unit_interval(farey, psi, m)) {
        out.covers.push_back({m, farey, q, true});
        break;
      }
    }
  }
  const Integer& top = out.covers.back().max_height;
  for (Integer q = 1; q <= top; ++q) {
    std::uint64_t m = 1;
    while (out.covers[m - 1].max_height < q) ++m;
    Rational v = power_value(psi, q, 1);
    out.table.push_back({q, v, v / Rational(static_cast<unsigned long>(m)), m});
  }
  return out;
}

}  // namespace dioph
