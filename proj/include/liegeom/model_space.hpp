#ifndef LIEGEOM_MODEL_SPACE_HPP_
#define LIEGEOM_MODEL_SPACE_HPP_

#include <cstdint>
#include <vector>

#include "liegeom/linalg.hpp"

namespace liegeom {

// Point of upper half space U = {(x,y,z) : z > 0}.
struct UPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

// Point of Euclidean three space.
struct EPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// (x, y, z) -> (x, y, exp z). Throws range_error if exp(z) leaves (0, inf).
UPoint to_upper_half(const EPoint& p);

// (x, y, z) -> (x, y, log z). Throws domain_error unless z > 0.
EPoint to_euclidean(const UPoint& p);

// Distance of the constant-curvature -1 metric on U.
double hyp_distance(const UPoint& p, const UPoint& q);

// Same for the (x, z) half plane; used to check the plane factor of isometries.
double hyp_distance_halfplane(const Vec2& p, const Vec2& q);

inline double point_residual(const UPoint& p, const UPoint& q) {
  const double dx = std::abs(p.x - q.x);
  const double dy = std::abs(p.y - q.y);
  const double dz = std::abs(p.z - q.z);
  return std::max(dx, std::max(dy, dz));
}

// Deterministic samples from the standard box x,y in [-5,5], z in [0.1,10].
std::vector<UPoint> sample_box(int n, std::uint64_t seed);

}  // namespace liegeom

#endif  // LIEGEOM_MODEL_SPACE_HPP_
