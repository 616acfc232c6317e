#include "dioph/approx_function.hpp"

#include <algorithm>
#include <numeric>

namespace dioph {

namespace {

// factor * f(q)^k, or just factor when f is null.
struct Term {
  Rational factor;
  const ApproxFunction* f = nullptr;
  Integer q;
};

std::uint64_t term_degree(const Term& t, bool& ok) {
  if (t.f == nullptr) return 1;
  auto d = rational_power_degree(*t.f);
  if (!d) ok = false;
  return d.value_or(1);
}

Interval term_enclosure(const Term& t, std::uint64_t k, unsigned bits) {
  if (t.factor == 0) return Interval::point(Rational(0));
  if (t.f == nullptr) return Interval::point(t.factor);
  return scale(power_enclosure(*t.f, t.q, k, bits), t.factor);
}

ThresholdResult compare_terms(const Term& a, const Term& b, std::uint64_t k) {
  if (a.factor < 0 || b.factor < 0) throw UsageError("negative factor in a threshold comparison");
  bool exact = true;
  std::uint64_t da = term_degree(a, exact);
  std::uint64_t db = term_degree(b, exact);
  if (exact) {
    // Raise both sides to a power that makes every value rational.
    std::uint64_t v = std::lcm(da, db);
    auto side = [&](const Term& t) {
      Rational out = power(t.factor, v);
      if (t.f != nullptr && out != 0) out *= power_value(*t.f, t.q, k * v);
      return out;
    };
    return {compare(side(a), side(b)), true};
  }
  for (unsigned bits = 64; bits <= (1u << 20); bits *= 2) {
    Interval ia = term_enclosure(a, k, bits);
    Interval ib = term_enclosure(b, k, bits);
    if (ia.hi < ib.lo) return {std::strong_ordering::less, true};
    if (ia.lo > ib.hi) return {std::strong_ordering::greater, true};
    if (ia.exact() && ib.exact() && ia.lo == ib.lo) return {std::strong_ordering::equal, true};
    Rational lo = std::min(ia.lo, ib.lo);
    Rational hi = std::max(ia.hi, ib.hi);
    if (hi == 0) return {std::strong_ordering::equal, true};
    // Overlapping enclosures, both within a relative 2^-256 of each other.
    if ((hi - lo) * pow2(kEqualityToleranceBits) <= lo) return {std::strong_ordering::equal, false};
  }
  return {std::strong_ordering::equal, false};
}

Interval min_interval(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Split "f,g" at the top-level comma that makes both halves parse.
std::pair<ApproxFunction, ApproxFunction> parse_pair(const std::string& body, SizeCap cap) {
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch != ',' || depth != 0) continue;
    try {
      ApproxFunction f = parse_approx_function(body.substr(0, i), cap);
      ApproxFunction g = parse_approx_function(body.substr(i + 1), cap);
      return {f, g};
    } catch (const SizeCapExceeded&) {
      throw;
    } catch (const UsageError&) {
      continue;
    }
  }
  throw UsageError("cannot split min(...) arguments: '" + body + "'");
}

unsigned magnitude_bits(const PowerLog& pl, const Integer& q) {
  // Rough bit size of q^|a|, used to keep root extraction relatively accurate.
  Rational abs_a = abs(pl.a);
  Integer ceil_a = ceil_of(abs_a);
  std::uint64_t bits = bit_length(q) * to_u64(ceil_a) + 8 + bit_length(ceil_of(abs(pl.b))) * 4;
  bits += bit_length(pl.c.get_den()) + bit_length(pl.c.get_num());
  if (bits > (1u << 24)) throw SizeCapExceeded("function value too small to evaluate");
  return static_cast<unsigned>(bits);
}

}  // namespace

ApproxFunction ApproxFunction::power(const Rational& s) { return power_log(Rational(1), s, Rational(0)); }

ApproxFunction ApproxFunction::power_log(const Rational& c, const Rational& a, const Rational& b) {
  if (c <= 0) throw UsageError("power-log coefficient must be positive");
  return ApproxFunction(PowerLog{c, a, b});
}

ApproxFunction ApproxFunction::psi_q(QSequence seq) {
  return ApproxFunction(PsiQ{std::make_shared<const QSequence>(std::move(seq))});
}

ApproxFunction ApproxFunction::min_of(const ApproxFunction& f, const ApproxFunction& g) {
  return ApproxFunction(MinOf{std::make_shared<const ApproxFunction>(f), std::make_shared<const ApproxFunction>(g)});
}

std::string ApproxFunction::spec() const {
  if (const auto* pl = std::get_if<PowerLog>(&v_)) {
    if (pl->c == 1 && pl->b == 0) return "pow:" + to_string(pl->a);
    return "powlog:" + to_string(pl->c) + "," + to_string(pl->a) + "," + to_string(pl->b);
  }
  if (const auto* pq = std::get_if<PsiQ>(&v_)) return "psiQ:" + pq->seq->name();
  const auto& m = std::get<MinOf>(v_);
  return "min(" + m.first->spec() + "," + m.second->spec() + ")";
}

Integer ApproxFunction::domain_start() const {
  if (const auto* pl = std::get_if<PowerLog>(&v_)) return pl->b == 0 ? Integer(1) : Integer(2);
  if (std::holds_alternative<PsiQ>(v_)) return 1;
  const auto& m = std::get<MinOf>(v_);
  return std::max(m.first->domain_start(), m.second->domain_start());
}

ApproxFunction parse_approx_function(const std::string& spec, SizeCap cap) {
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  if (starts("pow:")) return ApproxFunction::power(parse_rational(spec.substr(4)));
  if (starts("powlog:")) {
    std::string body = spec.substr(7);
    auto c1 = body.find(',');
    auto c2 = c1 == std::string::npos ? std::string::npos : body.find(',', c1 + 1);
    if (c2 == std::string::npos || body.find(',', c2 + 1) != std::string::npos) {
      throw UsageError("powlog needs three arguments: '" + spec + "'");
    }
    return ApproxFunction::power_log(parse_rational(body.substr(0, c1)),
                                     parse_rational(body.substr(c1 + 1, c2 - c1 - 1)),
                                     parse_rational(body.substr(c2 + 1)));
  }
  if (starts("psiQ:dexp:")) {
    Integer i = parse_integer(spec.substr(10));
    if (i < 0) throw UsageError("preset index must be nonnegative");
    return ApproxFunction::psi_q(QSequence::doubly_exponential(to_u64(i), cap));
  }
  if (starts("min(") && spec.back() == ')') {
    auto [f, g] = parse_pair(spec.substr(4, spec.size() - 5), cap);
    return ApproxFunction::min_of(f, g);
  }
  throw UsageError("unrecognized function spec: '" + spec + "'");
}

std::optional<std::uint64_t> rational_power_degree(const ApproxFunction& f) {
  if (const auto* pl = f.as_power_log()) {
    if (pl->b != 0) return std::nullopt;
    // c is rational, so only the root in q^(-u/v) matters.
    return to_u64(pl->a.get_den());
  }
  if (std::holds_alternative<PsiQ>(f.variant())) return 1;
  const auto& m = std::get<MinOf>(f.variant());
  auto d1 = rational_power_degree(*m.first);
  auto d2 = rational_power_degree(*m.second);
  if (!d1 || !d2) return std::nullopt;
  return std::lcm(*d1, *d2);
}

Rational power_value(const ApproxFunction& f, const Integer& q, std::uint64_t k) {
  if (q < f.domain_start()) throw UsageError("function evaluated below its domain at q = " + to_string(q));
  if (const auto* pl = f.as_power_log()) {
    auto deg = rational_power_degree(f);
    if (!deg || k % *deg != 0) throw UsageError("power of the function value is not rational");
    Integer e = -pl->a.get_num() * static_cast<unsigned long>(k / *deg);
    return power(pl->c, k) * power(Rational(q), to_i64(e));
  }
  if (const auto* pq = std::get_if<PsiQ>(&f.variant())) {
    Integer big = pq->seq->cover(q).second;
    return power(make_rational(1, q * big), k);
  }
  const auto& m = std::get<MinOf>(f.variant());
  return std::min(power_value(*m.first, q, k), power_value(*m.second, q, k));
}

std::optional<Rational> exact_value(const ApproxFunction& f, const Integer& q) {
  auto deg = rational_power_degree(f);
  if (!deg) return std::nullopt;
  return exact_root(power_value(f, q, *deg), *deg);
}

Interval evaluate(const ApproxFunction& f, const Integer& q, unsigned bits) {
  if (q < f.domain_start()) throw UsageError("function evaluated below its domain at q = " + to_string(q));
  if (auto v = exact_value(f, q)) return Interval::point(*v);
  if (const auto* pl = f.as_power_log()) {
    unsigned work = bits + magnitude_bits(*pl, q);
    Interval out = rational_power(Interval::point(Rational(q)), -pl->a, work);
    if (pl->b != 0) out = multiply(out, rational_power(ln_bounds(q, work), -pl->b, work));
    return scale(out, pl->c);
  }
  if (std::holds_alternative<PsiQ>(f.variant())) {
    return Interval::point(power_value(f, q, 1));
  }
  const auto& m = std::get<MinOf>(f.variant());
  return min_interval(evaluate(*m.first, q, bits), evaluate(*m.second, q, bits));
}

Interval power_enclosure(const ApproxFunction& f, const Integer& q, std::uint64_t k, unsigned bits) {
  auto deg = rational_power_degree(f);
  if (deg && k % *deg == 0) return Interval::point(power_value(f, q, k));
  unsigned extra = static_cast<unsigned>(bit_length(Integer(static_cast<unsigned long>(k)))) + 4;
  return integer_power(evaluate(f, q, bits + extra), static_cast<std::int64_t>(k));
}

ThresholdResult compare_threshold(const DistValue& d, const Rational& scale_factor, const ApproxFunction& f,
                                  const Integer& q) {
  if (scale_factor <= 0) throw UsageError("threshold scale must be positive");
  if (q < 1) throw UsageError("heights start at 1");
  std::uint64_t p = d.norm.exponent();
  Term lhs{d.value, nullptr, Integer(1)};
  Term rhs{power(scale_factor, p), &f, q};
  return compare_terms(lhs, rhs, p);
}

ThresholdResult compare_values(const ApproxFunction& f, const Integer& q, const Rational& f_factor,
                               const ApproxFunction& g, const Integer& r, const Rational& g_factor,
                               std::uint64_t k) {
  return compare_terms(Term{f_factor, &f, q}, Term{g_factor, &g, r}, k);
}

bool is_eventually_nonincreasing(const ApproxFunction& f) {
  if (const auto* pl = f.as_power_log()) return pl->a > 0 || (pl->a == 0 && pl->b >= 0);
  if (std::holds_alternative<PsiQ>(f.variant())) return true;
  const auto& m = std::get<MinOf>(f.variant());
  return is_eventually_nonincreasing(*m.first) && is_eventually_nonincreasing(*m.second);
}

bool tends_to_zero(const ApproxFunction& f) {
  if (const auto* pl = f.as_power_log()) return pl->a > 0 || (pl->a == 0 && pl->b > 0);
  if (std::holds_alternative<PsiQ>(f.variant())) return true;
  const auto& m = std::get<MinOf>(f.variant());
  return tends_to_zero(*m.first) || tends_to_zero(*m.second);
}

Integer monotone_start(const ApproxFunction& f) {
  if (!is_eventually_nonincreasing(f)) throw UsageError("function " + f.spec() + " is not eventually nonincreasing");
  if (const auto* pl = f.as_power_log()) {
    if (pl->b == 0) return 1;
    if (pl->b > 0) return 2;
    // Derivative sign is that of -(a ln q + b): need ln q >= -b/a.
    Rational target = -pl->b / pl->a;
    auto ok = [&](const Integer& q) { return ln_bounds(q, 64).lo >= target; };
    Integer hi = 2;
    while (!ok(hi)) {
      hi *= hi;
      if (bit_length(hi) > 4096) throw SizeCapExceeded("monotone range of " + f.spec() + " starts too late");
    }
    Integer lo = 2;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (ok(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }
  if (std::holds_alternative<PsiQ>(f.variant())) return 1;
  const auto& m = std::get<MinOf>(f.variant());
  return std::max(monotone_start(*m.first), monotone_start(*m.second));
}

Integer least_index_at_most(const ApproxFunction& f, const Rational& t) {
  if (t <= 0) throw UsageError("threshold must be positive");
  if (!tends_to_zero(f)) throw UsageError("function " + f.spec() + " does not tend to zero");
  Integer start = std::max(monotone_start(f), f.domain_start());
  // Proven f(q) <= t; an uncertified tie counts as not proven.
  auto at_most = [&](const Integer& q) {
    ThresholdResult r = compare_threshold(DistValue::from_distance(Norm::supremum(), t), Rational(1), f, q);
    return r.certified && r.order != std::strong_ordering::less;
  };
  Integer hi = start;
  Integer step = 1;
  while (!at_most(hi)) {
    hi += step;
    step *= 2;
    if (bit_length(hi) > 1u << 16) throw SizeCapExceeded("threshold index for " + f.spec() + " is too large");
  }
  Integer lo = std::max(start, Integer(hi - step / 2));
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (at_most(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo > start) return lo;
  // Below the monotone range every q is checked individually.
  Integer domain = f.domain_start();
  if (start - domain > 1000000) throw SizeCapExceeded("non-monotone prefix of " + f.spec() + " is too long");
  Integer n = domain;
  for (Integer q = start - 1; q >= domain; --q) {
    if (!at_most(q)) {
      n = q + 1;
      break;
    }
  }
  return n;
}

}  // namespace dioph
