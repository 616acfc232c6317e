#include "dioph/growth.hpp"

namespace dioph {

namespace {

const PowerLog& require_power_log(const ApproxFunction& f) {
  const PowerLog* pl = f.as_power_log();
  if (pl == nullptr) throw UnsupportedVariant("growth comparison needs power-log functions, got " + f.spec());
  return *pl;
}

}  // namespace

GrowthVerdict growth_compare(const ApproxFunction& f, const ApproxFunction& g) {
  const PowerLog& pf = require_power_log(f);
  const PowerLog& pg = require_power_log(g);
  // f/g = (c_f/c_g) q^(a_g - a_f) (ln q)^(b_g - b_f)
  int c = cmp(pf.a, pg.a);
  if (c == 0) c = cmp(pf.b, pg.b);
  if (c > 0) return GrowthVerdict::RatioToZero;
  if (c < 0) return GrowthVerdict::RatioToInfinity;
  return GrowthVerdict::RatioBounded;
}

GrowthVerdict mirror(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::RatioToZero:
      return GrowthVerdict::RatioToInfinity;
    case GrowthVerdict::RatioToInfinity:
      return GrowthVerdict::RatioToZero;
    default:
      return v;
  }
}

std::string to_string(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::RatioToZero:
      return "RatioToZero";
    case GrowthVerdict::RatioBounded:
      return "RatioBounded";
    default:
      return "RatioToInfinity";
  }
}

std::string to_string(SeriesVerdict v) {
  return v == SeriesVerdict::SeriesDiverges ? "SeriesDiverges" : "SeriesConverges";
}

SeriesVerdict khinchin_classify(const PowerLog& f, std::uint64_t d) {
  if (d == 0) throw UsageError("dimension must be positive");
  if (f.c <= 0) throw UsageError("coefficient must be positive");
  Rational dim(static_cast<unsigned long>(d));
  if (f.a < dim || (f.a == dim && f.b < 0)) {
    throw UsageError("q^d f(q) is not eventually nonincreasing for a = " + to_string(f.a) + ", b = " +
                     to_string(f.b) + ", d = " + std::to_string(d));
  }
  // sum q^(d - a) (ln q)^(-b)
  Rational gap = f.a - dim;
  if (gap > 1 || (gap == 1 && f.b > 1)) return SeriesVerdict::SeriesConverges;
  return SeriesVerdict::SeriesDiverges;
}

}  // namespace dioph
