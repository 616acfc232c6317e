#pragma once

#include <cstdint>
#include <string>

#include "dioph/approx_function.hpp"

namespace dioph {

// Limit of f/g as q grows.
enum class GrowthVerdict { RatioToZero, RatioBounded, RatioToInfinity };

// Both functions must be power-log; otherwise UnsupportedVariant.
GrowthVerdict growth_compare(const ApproxFunction& f, const ApproxFunction& g);
GrowthVerdict mirror(GrowthVerdict v);
std::string to_string(GrowthVerdict v);

enum class SeriesVerdict { SeriesDiverges, SeriesConverges };
std::string to_string(SeriesVerdict v);

// Decides whether sum_q q^d f(q) converges, for f with q^d f(q) eventually
// nonincreasing. Divergence means almost every point of R^d is
// f-approximable; convergence means almost none is.
SeriesVerdict khinchin_classify(const PowerLog& f, std::uint64_t d);

}  // namespace dioph
