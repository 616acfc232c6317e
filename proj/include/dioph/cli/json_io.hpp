#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "dioph/approx.hpp"
#include "dioph/constructions.hpp"
#include "dioph/optimality.hpp"
#include "dioph/space.hpp"

namespace dioph::cli {

using json = nlohmann::ordered_json;

// {"kind":"fin"|"lp"|"c0"|"linf", "d":int?, "p":"1"|"2"|"inf"}
SpaceDescriptor space_from_json(const json& j);
json to_json(const SpaceDescriptor& space);
json to_json(const SpaceInfo& info);

// {"entries":[[index,"num/den"],...]} or {"runs":[[start,length,"num/den"],...]}
SparseVector point_from_json(const json& j);
json to_json(const SparseVector& v);

// Inline JSON text, or the path of a file holding it.
json load_json_argument(const std::string& text);

json to_json(const DistValue& d);
json to_json(const WitnessReport& w);
json to_json(const RatioValue& r);
json to_json(const CertificateReport& c);
json to_json(const SampledPoint& p);
json to_json(const ClaimReport& c);
json to_json(const TransversalityReport& t);
json to_json(const NoncoboundedSchedule& s);
json to_json(const CoboundedSchedule& s);
json to_json(const WASchedule& s);
json to_json(const PsiQWitness& w);
json to_json(const CounterexampleRow& row);
json to_json(const CoverReport& c);
json to_json(const ImprovedValue& v);

// "lo:hi"
std::pair<Integer, Integer> parse_window(const std::string& text);
// "lo:hi,lo:hi,..."
std::vector<std::pair<Integer, Integer>> parse_bands(const std::string& text);
// "1,2,3"
std::vector<Integer> parse_integer_list(const std::string& text);

}  // namespace dioph::cli
