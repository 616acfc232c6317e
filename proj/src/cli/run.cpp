#include "dioph/cli/run.hpp"

#include "dioph/growth.hpp"
#include "dioph/sampling.hpp"

namespace dioph::cli {

namespace {

struct Output {
  json results = json::object();
  std::vector<json> rows;
};

SizeCap cap_of(const ExperimentConfig& c) {
  SizeCap cap;
  if (c.cap_bits) cap.bits = *c.cap_bits;
  return cap;
}

ApproxFunction psi_of(const ExperimentConfig& c) { return parse_approx_function(*c.psi, cap_of(c)); }
ApproxFunction phi_of(const ExperimentConfig& c) { return parse_approx_function(*c.phi, cap_of(c)); }

Integer integer_field(const std::optional<std::string>& v) { return parse_integer(*v); }

SpaceDescriptor space_or(const ExperimentConfig& c, const SpaceDescriptor& fallback) {
  return c.space ? space_from_json(*c.space) : fallback;
}

SparseVector shift_of(const ExperimentConfig& c) { return c.shift ? point_from_json(*c.shift) : SparseVector(); }

json rows_summary(std::size_t count) { return {{"rows", count}}; }

Output space_info_cmd(const ExperimentConfig& c) {
  return {to_json(space_info(space_from_json(*c.space))), {}};
}

Output approx_best(const ExperimentConfig& c) {
  auto w = best_approx(space_from_json(*c.space), point_from_json(*c.point), integer_field(c.max_height));
  return {to_json(w), {}};
}

Output approx_dirichlet(const ExperimentConfig& c) {
  auto w = dirichlet_witness_finite(point_from_json(*c.point), *c.d, integer_field(c.max_height));
  return {to_json(w), {}};
}

Output approx_rounding(const ExperimentConfig& c) {
  Rational eps = c.eps ? parse_rational(*c.eps) : Rational(1);
  auto w = dirichlet_rounding(space_from_json(*c.space), point_from_json(*c.point), integer_field(c.q), eps);
  return {to_json(w), {}};
}

Output approx_certify(const ExperimentConfig& c) {
  SpaceDescriptor space = space_from_json(*c.space);
  SparseVector x = point_from_json(*c.point);
  ApproxFunction f = psi_of(c);
  if (c.window) {
    auto [lo, hi] = parse_window(*c.window);
    return {to_json(min_ratio(space, x, f, lo, hi)), {}};
  }
  Output out;
  for (const auto& cert : banded_min_ratio(space, x, f, parse_bands(*c.bands))) out.rows.push_back(to_json(cert));
  out.results = rows_summary(out.rows.size());
  return out;
}

Output construct_ba(const ExperimentConfig& c) {
  if (*c.mode == "noncobounded") {
    auto s = schedule_noncobounded(space_or(c, SpaceDescriptor::lp_sequence(1)), psi_of(c), *c.levels, cap_of(c));
    return {{{"schedule", to_json(s)}, {"sample", to_json(sample_ba_noncobounded(s, c.seed))}}, {}};
  }
  auto s = schedule_cobounded(space_or(c, SpaceDescriptor::c0()), *c.levels);
  return {{{"schedule", to_json(s)}, {"sample", to_json(sample_ba_cobounded(s, c.seed))}}, {}};
}

Output construct_wa_cmd(const ExperimentConfig& c) {
  std::vector<Integer> choices;
  if (c.choices) {
    choices = parse_integer_list(*c.choices);
  } else {
    for (std::uint64_t i = 1; i <= *c.levels; ++i) choices.emplace_back(static_cast<unsigned long>(i));
  }
  auto w = construct_wa(space_from_json(*c.space), psi_of(c), *c.levels, choices);
  json witnesses = json::array();
  for (const auto& wr : w.witnesses) witnesses.push_back(to_json(wr));
  return {{{"schedule", to_json(w.schedule)}, {"point", to_json(w.point)}, {"witnesses", witnesses}}, {}};
}

// Centers are the partial sums of seeded samples through level n - 1, moved
// by the optional shift.
Output claims_cmd(const ExperimentConfig& c) {
  const std::uint64_t trials = c.trials.value_or(1);
  const std::uint64_t n = *c.n;
  SparseVector shift = shift_of(c);
  Output out;
  Integer worst = 0;
  if (*c.mode == "noncobounded") {
    auto s = schedule_noncobounded(space_or(c, SpaceDescriptor::lp_sequence(1)), psi_of(c), *c.levels, cap_of(c));
    for (std::uint64_t t = 0; t < trials; ++t) {
      SampledPoint sp = sample_ba_noncobounded(s, mix_seed(c.seed, t));
      SparseVector center;
      for (std::uint64_t j = 1; j < n && j <= s.depth(); ++j) {
        center = center + s.level(j).step * Rational(sp.choices[j - 1]);
      }
      ClaimReport r = claim_count_noncobounded(s, n, center - shift);
      worst = std::max(worst, r.count);
      out.rows.push_back({{"trial", t}, {"claim", to_json(r)}});
    }
  } else {
    auto s = schedule_cobounded(space_or(c, SpaceDescriptor::c0()), *c.levels);
    for (std::uint64_t t = 0; t < trials; ++t) {
      SampledPoint sp = sample_ba_cobounded(s, mix_seed(c.seed, t));
      SparseVector center;
      for (std::uint64_t j = 1; j < n && j <= s.depth; ++j) center = center + s.step(sp.choices[j - 1], j);
      ClaimReport r = claim_count_cobounded(s, n, center - shift);
      worst = std::max(worst, r.count);
      out.rows.push_back({{"trial", t}, {"claim", to_json(r)}});
    }
  }
  out.results = {{"rows", out.rows.size()}, {"max_count", to_string(worst)}};
  return out;
}

Output transversality_cmd(const ExperimentConfig& c) {
  SparseVector shift = shift_of(c);
  if (*c.mode == "noncobounded") {
    auto s = schedule_noncobounded(space_or(c, SpaceDescriptor::lp_sequence(1)), psi_of(c), *c.levels, cap_of(c));
    return {to_json(transversality_trials(s, shift, *c.trials, c.seed)), {}};
  }
  auto s = schedule_cobounded(space_or(c, SpaceDescriptor::c0()), *c.levels);
  return {to_json(transversality_trials(s, shift, *c.trials, c.seed)), {}};
}

Output counterexample_cmd(const ExperimentConfig& c) {
  Output out;
  bool all_equal = true;
  for (const auto& row : strong_optimality_counterexample(*c.n_max, cap_of(c))) {
    all_equal = all_equal && row.phi_q3 == 1;
    out.rows.push_back(to_json(row));
  }
  out.results = {{"rows", out.rows.size()}, {"all_phi_q3_equal_one", all_equal}};
  return out;
}

Output psiq_cmd(const ExperimentConfig& c) {
  std::string preset = c.preset.value_or("dexp:0");
  if (preset.rfind("dexp:", 0) != 0) throw UsageError("unknown preset '" + preset + "'");
  Integer i = parse_integer(preset.substr(5));
  if (i < 0) throw UsageError("preset index must be nonnegative");
  QSequence seq = QSequence::doubly_exponential(to_u64(i), cap_of(c));
  return {to_json(psiQ_witness(parse_rational(*c.x), seq, *c.n)), {}};
}

Output improve_cmd(const ExperimentConfig& c) {
  ApproxFunction psi = c.psi ? psi_of(c) : ApproxFunction::power(Rational(1));
  ImprovementReport r = improve_dirichlet_interval(psi, *c.n);
  Output out;
  json covers = json::array();
  for (const auto& cover : r.covers) covers.push_back(to_json(cover));
  for (const auto& v : r.table) out.rows.push_back(to_json(v));
  out.results = {{"covers", covers}, {"rows", out.rows.size()}};
  return out;
}

Output refute_cmd(const ExperimentConfig& c) {
  SpaceDescriptor space = space_from_json(*c.space);
  SparseVector x = point_from_json(*c.point);
  ApproxFunction psi = psi_of(c);
  ApproxFunction phi = phi_of(c);
  auto bands = parse_bands(*c.bands);
  Rational eps;
  if (c.eps) {
    eps = parse_rational(*c.eps);
  } else {
    // Default: the smallest psi-certificate over the bands, rounded down to a rational.
    std::optional<Rational> low;
    for (const auto& cert : banded_min_ratio(space, x, psi, bands)) {
      Rational v = cert.min_ratio.exact ? *cert.min_ratio.exact : cert.min_ratio.enclosure.lo;
      if (!low || v < *low) low = v;
    }
    eps = *low;
  }
  RefutationReport r = refute_candidate(space, x, eps, psi, phi, bands);
  Output out;
  for (const auto& b : r.bands) {
    out.rows.push_back({{"band", json::array({to_string(b.lo), to_string(b.hi)})},
                        {"psi_certificate", to_json(b.psi_certificate.min_ratio)},
                        {"phi_ratio", to_json(b.phi_certificate.min_ratio)},
                        {"min_psi_over_phi", to_string(b.min_growth)},
                        {"lower_bound", to_string(b.lower_bound)}});
  }
  out.results = {{"eps", to_string(r.eps)},
                 {"rows", out.rows.size()},
                 {"lower_bounds_nondecreasing", r.bounds_nondecreasing}};
  return out;
}

Output growth_cmd(const ExperimentConfig& c) {
  GrowthVerdict v = growth_compare(psi_of(c), phi_of(c));
  return {{{"verdict", to_string(v)}}, {}};
}

Output khinchin_cmd(const ExperimentConfig& c) {
  ApproxFunction f = psi_of(c);
  const PowerLog* pl = f.as_power_log();
  if (pl == nullptr) throw UnsupportedVariant("khinchin needs a power-log function");
  SeriesVerdict v = khinchin_classify(*pl, *c.d);
  std::string meaning = v == SeriesVerdict::SeriesDiverges ? "almost every point is well approximable"
                                                           : "almost no point is well approximable";
  return {{{"verdict", to_string(v)}, {"meaning", meaning}}, {}};
}

Output dispatch(const ExperimentConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "space info") return space_info_cmd(c);
  if (cmd == "approx best") return approx_best(c);
  if (cmd == "approx dirichlet") return approx_dirichlet(c);
  if (cmd == "approx rounding") return approx_rounding(c);
  if (cmd == "approx certify") return approx_certify(c);
  if (cmd == "construct ba") return construct_ba(c);
  if (cmd == "construct wa") return construct_wa_cmd(c);
  if (cmd == "claims") return claims_cmd(c);
  if (cmd == "transversality") return transversality_cmd(c);
  if (cmd == "optimality counterexample") return counterexample_cmd(c);
  if (cmd == "optimality psiq") return psiq_cmd(c);
  if (cmd == "optimality improve") return improve_cmd(c);
  if (cmd == "optimality refute") return refute_cmd(c);
  if (cmd == "growth compare") return growth_cmd(c);
  if (cmd == "khinchin") return khinchin_cmd(c);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

RunReport run(const ExperimentConfig& config) {
  validate(config);
  RunReport report;
  report.header = {{"command", config.command},
                   {"config", to_json(config)},
                   {"version", kVersion},
                   {"invariant_violation", false}};
  try {
    Output out = dispatch(config);
    report.header["results"] = std::move(out.results);
    report.rows = std::move(out.rows);
  } catch (const InvariantViolation& e) {
    report.invariant_violation = true;
    report.header["invariant_violation"] = true;
    report.header["error"] = e.what();
    report.header["results"] = nullptr;
  }
  return report;
}

std::string render(const RunReport& report) {
  std::string out = report.header.dump() + "\n";
  for (const json& row : report.rows) out += row.dump() + "\n";
  return out;
}

}  // namespace dioph::cli
