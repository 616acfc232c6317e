#include "dioph/space.hpp"

#include "dioph/errors.hpp"

namespace dioph {

SpaceDescriptor SpaceDescriptor::finite_dim(std::uint64_t d, Norm norm) {
  if (d == 0) throw UsageError("dimension must be at least 1");
  return {SpaceKind::FiniteDim, d, norm};
}

SpaceDescriptor SpaceDescriptor::lp_sequence(std::uint64_t p) { return {SpaceKind::LpSequence, 0, Norm::lp(p)}; }

SpaceDescriptor SpaceDescriptor::c0() { return {SpaceKind::C0, 0, Norm::supremum()}; }

SpaceDescriptor SpaceDescriptor::l_infty() { return {SpaceKind::LInfty, 0, Norm::supremum()}; }

std::string SpaceDescriptor::kind_label() const {
  switch (kind) {
    case SpaceKind::FiniteDim:
      return "fin";
    case SpaceKind::LpSequence:
      return "lp";
    case SpaceKind::C0:
      return "c0";
    default:
      return "linf";
  }
}

SpaceInfo space_info(const SpaceDescriptor& space) {
  SpaceInfo info;
  info.epsilon_lambda = 1;
  switch (space.kind) {
    case SpaceKind::FiniteDim:
      // Half the diagonal of the unit cube.
      if (space.norm.sup) {
        info.codiameter = make_rational(1, 2);
      } else {
        info.codiameter = make_rational(static_cast<unsigned long>(space.d), pow2(space.norm.p));
        info.codiameter_is_power = true;
      }
      info.cobounded = true;
      info.strongly_discrete = true;
      break;
    case SpaceKind::LpSequence:
      info.cobounded = false;
      break;
    case SpaceKind::C0:
    case SpaceKind::LInfty:
      info.codiameter = make_rational(1, 2);
      info.cobounded = true;
      break;
  }
  return info;
}

void check_point(const SpaceDescriptor& space, const SparseVector& x) {
  if (space.kind != SpaceKind::FiniteDim) return;
  if (x.max_index() > static_cast<unsigned long>(space.d)) {
    throw UsageError("coordinate " + to_string(x.max_index()) + " outside dimension " + std::to_string(space.d));
  }
}

DistValue distance(const SpaceDescriptor& space, const SparseVector& x, const SparseVector& r) {
  check_point(space, x);
  check_point(space, r);
  return distance(space.norm, x, r);
}

ScaledNearest nearest_point_scaled(const SpaceDescriptor& space, const SparseVector& x, const Integer& q) {
  if (q < 1) throw UsageError("scale q must be at least 1");
  check_point(space, x);
  std::vector<Run> runs;
  runs.reserve(x.runs().size());
  Rational total = 0;
  const Rational qr(q);
  for (const Run& run : x.runs()) {
    Rational y = run.value * qr;
    Integer p = round_half_down(y);
    Rational err = abs(y - Rational(p)) / qr;
    if (space.norm.sup) {
      if (err > total) total = err;
    } else {
      total += power(err, space.norm.p) * run.length;
    }
    runs.push_back({run.start, run.length, Rational(p)});
  }
  return {SparseVector::from_runs(std::move(runs)), DistValue{space.norm, total}};
}

std::vector<SparseVector> separated_basis(const SpaceDescriptor& space, std::uint64_t n) {
  if (space.kind == SpaceKind::FiniteDim && n > space.d) {
    throw UsageError("cannot take " + std::to_string(n) + " basis vectors in dimension " + std::to_string(space.d));
  }
  std::vector<SparseVector> out;
  out.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) out.push_back(SparseVector::unit(Integer(static_cast<unsigned long>(i))));
  return out;
}

SparseVector far_point(const SpaceDescriptor& space, const Rational& radius, const Rational& eps) {
  if (space.kind != SpaceKind::LpSequence) throw UsageError("far points exist only in the non-cobounded l^p kind");
  if (radius <= 0 || eps <= 0) throw UsageError("radius and eps must be positive");
  Integer m = ceil_of(radius * 2);
  Integer count = power(m, space.norm.p);
  return SparseVector::block(1, count, radius / Rational(m));
}

}  // namespace dioph
