#include "liegeom/model_space.hpp"

#include <cmath>

#include "liegeom/errors.hpp"
#include "liegeom/rng.hpp"

namespace liegeom {

UPoint to_upper_half(const EPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw domain_error("to_upper_half: point has non-finite coordinates");
  }
  const double z = std::exp(p.z);
  if (!std::isfinite(z) || z <= 0.0) {
    throw range_error("to_upper_half: exp(z) is not representable");
  }
  return {p.x, p.y, z};
}

EPoint to_euclidean(const UPoint& p) {
  if (!(p.z > 0.0)) {
    throw domain_error("to_euclidean: point is not in upper half space (z <= 0)");
  }
  return {p.x, p.y, std::log(p.z)};
}

double hyp_distance(const UPoint& p, const UPoint& q) {
  if (!(p.z > 0.0) || !(q.z > 0.0)) {
    throw domain_error("hyp_distance: points must lie in upper half space");
  }
  const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
  double arg = 1.0 + (dx * dx + dy * dy + dz * dz) / (2.0 * p.z * q.z);
  if (arg < 1.0) arg = 1.0;  // roundoff guard for nearly equal points
  return std::acosh(arg);
}

double hyp_distance_halfplane(const Vec2& p, const Vec2& q) {
  if (!(p.y > 0.0) || !(q.y > 0.0)) {
    throw domain_error("hyp_distance_halfplane: points must have positive second coordinate");
  }
  const double dx = p.x - q.x, dz = p.y - q.y;
  double arg = 1.0 + (dx * dx + dz * dz) / (2.0 * p.y * q.y);
  if (arg < 1.0) arg = 1.0;
  return std::acosh(arg);
}

std::vector<UPoint> sample_box(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<UPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    UPoint p;
    p.x = rng.uniform(-5.0, 5.0);
    p.y = rng.uniform(-5.0, 5.0);
    p.z = rng.uniform(0.1, 10.0);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace liegeom
