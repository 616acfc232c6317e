#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/distance.hpp"
#include "dioph/sparse_vector.hpp"

namespace dioph {

enum class SpaceKind { FiniteDim, LpSequence, C0, LInfty };

/// One of the four product lattices: Z^d in R^d, and the integer points in
/// l^p, c_0 and l^infinity.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::C0;
  std::uint64_t d = 0;  // FiniteDim only
  Norm norm;

  static SpaceDescriptor finite_dim(std::uint64_t d, Norm norm);
  static SpaceDescriptor lp_sequence(std::uint64_t p);
  static SpaceDescriptor c0();
  static SpaceDescriptor l_infty();

  bool infinite_dimensional() const { return kind != SpaceKind::FiniteDim; }
  std::string kind_label() const;  // "fin", "lp", "c0", "linf"
  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

struct SpaceInfo {
  Rational epsilon_lambda;
  // Codiameter, as a p-th power for finite p; empty when infinite.
  std::optional<Rational> codiameter;
  bool codiameter_is_power = false;
  bool cobounded = false;
  bool strongly_discrete = false;
};

SpaceInfo space_info(const SpaceDescriptor& space);

// Throws UsageError when x has support outside {1..d} in finite dimension.
void check_point(const SpaceDescriptor& space, const SparseVector& x);

DistValue distance(const SpaceDescriptor& space, const SparseVector& x, const SparseVector& r);

struct ScaledNearest {
  SparseVector p;  // integral
  DistValue dist;  // ||x - p/q||
};

// Closest point of Lambda/q by coordinatewise rounding of q*x; exact halves
// round toward minus infinity.
ScaledNearest nearest_point_scaled(const SpaceDescriptor& space, const SparseVector& x, const Integer& q);

// e_1, ..., e_n.
std::vector<SparseVector> separated_basis(const SpaceDescriptor& space, std::uint64_t n);

// A point at distance exactly R from the lattice in l^p: m^p coordinates equal
// to R/m with m = ceil(2R). eps only has to be positive.
SparseVector far_point(const SpaceDescriptor& space, const Rational& radius, const Rational& eps);

}  // namespace dioph
