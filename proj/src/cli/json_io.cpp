#include "dioph/cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dioph::cli {

namespace {

std::string as_text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw UsageError(std::string(what) + " must be a string or an integer");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

json big(const Integer& v) { return to_string(v); }
json rat(const Rational& v) { return to_string(v); }

}  // namespace

SpaceDescriptor space_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("space must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "kind" && key != "d" && key != "p") throw UsageError("unknown space field '" + key + "'");
  }
  if (!j.contains("kind")) throw UsageError("space needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  std::string p = j.contains("p") ? as_text(j.at("p"), "p") : "";
  if (kind == "fin") {
    if (!j.contains("d")) throw UsageError("finite-dimensional space needs d");
    Integer d = parse_integer(as_text(j.at("d"), "d"));
    if (d < 1) throw UsageError("d must be at least 1");
    return SpaceDescriptor::finite_dim(to_u64(d), parse_norm(p.empty() ? "inf" : p));
  }
  if (j.contains("d")) throw UsageError("d applies only to finite-dimensional spaces");
  if (kind == "lp") {
    if (p.empty()) throw UsageError("lp space needs p");
    Norm norm = parse_norm(p);
    if (norm.sup) throw UsageError("use kind \"linf\" for the sup norm on sequences");
    return SpaceDescriptor::lp_sequence(norm.p);
  }
  if (kind == "c0" || kind == "linf") {
    if (!p.empty() && p != "inf") throw UsageError(kind + " carries the sup norm");
    return kind == "c0" ? SpaceDescriptor::c0() : SpaceDescriptor::l_infty();
  }
  throw UsageError("unknown space kind '" + kind + "'");
}

json to_json(const SpaceDescriptor& space) {
  json j{{"kind", space.kind_label()}};
  if (space.kind == SpaceKind::FiniteDim) j["d"] = space.d;
  j["p"] = space.norm.label();
  return j;
}

json to_json(const SpaceInfo& info) {
  json j{{"epsilon_lambda", rat(info.epsilon_lambda)}};
  if (info.codiameter && info.codiameter_is_power) {
    j["codiameter"] = nullptr;
    j["codiameter_pth_power"] = rat(*info.codiameter);
  } else {
    j["codiameter"] = info.codiameter ? json(rat(*info.codiameter)) : json("inf");
  }
  j["cobounded"] = info.cobounded;
  j["strongly_discrete"] = info.strongly_discrete;
  return j;
}

SparseVector point_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("point must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "entries" && key != "runs") throw UsageError("unknown point field '" + key + "'");
  }
  std::vector<Run> runs;
  if (j.contains("entries")) {
    std::map<Integer, Rational> seen;
    for (const json& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2) throw UsageError("entries must be [index, value] pairs");
      Integer index = parse_integer(as_text(e[0], "index"));
      if (index < 1) throw UsageError("indices start at 1");
      if (seen.count(index) != 0) throw UsageError("duplicate index " + to_string(index));
      seen[index] = parse_rational(as_text(e[1], "value"));
      runs.push_back({index, Integer(1), seen[index]});
    }
  }
  if (j.contains("runs")) {
    for (const json& e : j.at("runs")) {
      if (!e.is_array() || e.size() != 3) throw UsageError("runs must be [start, length, value] triples");
      runs.push_back({parse_integer(as_text(e[0], "start")), parse_integer(as_text(e[1], "length")),
                      parse_rational(as_text(e[2], "value"))});
    }
  }
  return SparseVector::from_runs(std::move(runs));
}

json to_json(const SparseVector& v) {
  json j;
  if (v.support_size() <= 64) {
    json entries = json::array();
    for (const auto& [i, value] : v.entries()) entries.push_back(json::array({big(i), rat(value)}));
    j["entries"] = entries;
  } else {
    json runs = json::array();
    for (const Run& r : v.runs()) runs.push_back(json::array({big(r.start), big(r.length), rat(r.value)}));
    j["runs"] = runs;
  }
  return j;
}

json load_json_argument(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("invalid JSON: ") + e.what());
    }
  }
  std::ifstream in(text);
  if (!in) throw UsageError("cannot open '" + text + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("invalid JSON in '" + text + "': " + e.what());
  }
}

json to_json(const DistValue& d) {
  json j{{"norm", d.norm.label()}, {"value", rat(d.value)}};
  if (!d.norm.sup) j["value_is_pth_power"] = true;
  if (d.has_rational_root()) j["distance"] = rat(d.root());
  return j;
}

json to_json(const WitnessReport& w) {
  return {{"r", to_json(w.r)},
          {"height", big(w.height)},
          {"denominator", big(w.denominator)},
          {"dist", to_json(w.dist)},
          {"bound", w.bound}};
}

json to_json(const RatioValue& r) {
  json j{{"enclosure", json::array({rat(r.enclosure.lo), rat(r.enclosure.hi)})}};
  j["exact"] = r.exact ? json(rat(*r.exact)) : json(nullptr);
  if (r.power) {
    j["power"] = rat(*r.power);
    j["exponent"] = r.exponent;
  }
  return j;
}

json to_json(const CertificateReport& c) {
  return {{"window", json::array({big(c.height_lo), big(c.height_hi)})},
          {"min_ratio", to_json(c.min_ratio)},
          {"witness", to_json(c.witness)}};
}

json to_json(const SampledPoint& p) {
  json choices = json::array();
  for (const Integer& c : p.choices) choices.push_back(big(c));
  return {{"point", to_json(p.point)}, {"choices", choices}, {"tail_bound", rat(p.tail_bound)}};
}

json to_json(const ClaimReport& c) {
  json hits = json::array();
  for (const Integer& h : c.hits) hits.push_back(big(h));
  return {{"n", c.n}, {"count", big(c.count)}, {"bound", big(c.bound)}, {"checked_hits", hits}};
}

json to_json(const TransversalityReport& t) {
  json levels = json::array();
  for (std::size_t i = 0; i < t.hits.size(); ++i) {
    levels.push_back({{"n", i + 1},
                      {"hits", t.hits[i]},
                      {"frequency", rat(t.frequencies[i])},
                      {"bound", rat(t.bounds[i])}});
  }
  return {{"trials", t.trials}, {"levels", levels}};
}

json to_json(const NoncoboundedSchedule& s) {
  json levels = json::array();
  for (const NoncoboundedLevel& lv : s.levels) {
    const Run& w = lv.far.runs().front();
    levels.push_back({{"n", lv.n},
                      {"rho", rat(lv.rho)},
                      {"N", big(lv.threshold)},
                      {"M", big(lv.scale)},
                      {"w", {{"coordinates", big(w.length)}, {"entry", rat(w.value)}}},
                      {"v_entry", rat(lv.step.runs().front().value)}});
  }
  return {{"psi", s.psi.spec()}, {"levels", levels}, {"rho_next", rat(s.rho_next)}};
}

json to_json(const CoboundedSchedule& s) {
  json levels = json::array();
  for (std::uint64_t n = 1; n <= s.depth; ++n) {
    levels.push_back({{"n", n},
                      {"choices", big(s.choice_count(n))},
                      {"v_entry", rat(s.step(1, n).runs().front().value)},
                      {"radius", rat(s.radius(n))},
                      {"max_q", big(s.max_q(n))}});
  }
  return {{"lambda", big(s.lambda)}, {"epsilon_lambda", rat(s.epsilon_lambda)}, {"levels", levels}};
}

json to_json(const WASchedule& s) {
  json q = json::array();
  for (const Integer& v : s.q) q.push_back(big(v));
  return {{"c_lambda", rat(s.c_lambda)}, {"epsilon_lambda", rat(s.epsilon_lambda)}, {"q", q}};
}

json to_json(const PsiQWitness& w) {
  return {{"n", w.n},
          {"Q_n", big(w.big_q)},
          {"bound", rat(w.bound)},
          {"psi_Q_at_height", rat(w.psi_value)},
          {"witness", to_json(w.witness)}};
}

json to_json(const CounterexampleRow& row) {
  return {{"q", big(row.q)},     {"source", row.source}, {"psi0", rat(row.psi0)},
          {"psi1", rat(row.psi1)}, {"phi", rat(row.phi)},  {"phi_q3", rat(row.phi_q3)}};
}

json to_json(const CoverReport& c) {
  json points = json::array();
  for (const Rational& r : c.points) points.push_back(rat(r));
  return {{"n", c.n}, {"Q", big(c.max_height)}, {"points", points}, {"verified", c.verified}};
}

json to_json(const ImprovedValue& v) {
  return {{"q", big(v.q)}, {"psi", rat(v.psi)}, {"phi", rat(v.phi)}, {"m", v.m}};
}

std::pair<Integer, Integer> parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("window must look like lo:hi, got '" + text + "'");
  return {parse_integer(text.substr(0, colon)), parse_integer(text.substr(colon + 1))};
}

std::vector<std::pair<Integer, Integer>> parse_bands(const std::string& text) {
  std::vector<std::pair<Integer, Integer>> out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_window(part));
  if (out.empty()) throw UsageError("no bands given");
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_integer(part));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

}  // namespace dioph::cli
