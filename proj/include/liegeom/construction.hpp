#ifndef LIEGEOM_CONSTRUCTION_HPP_
#define LIEGEOM_CONSTRUCTION_HPP_

#include <string>
#include <vector>

#include "liegeom/group_actions.hpp"
#include "liegeom/lattices.hpp"

namespace liegeom {

// Pushout data of a cusp: the manifold keeps its structure on one side, the
// flat T x R side carries the affine structure, and the double collar of the
// torus carries the lattice reduction.
struct EndAttachment {
  std::string piece_id;
  std::string cusp_id;
  GroupElement conjugator;  // from standard_form
  Lattice2 lattice;         // normalized, area 1
  double height = 1.0;      // Euclidean height of the cross-section in U
  double collar_halfwidth = 1.0;
};

EndAttachment attach_cylinder(const CuspSubgroup& cusp, double collar_halfwidth,
                              const std::string& piece_id = "",
                              const std::string& cusp_id = "");

// Chart change from the piece's original coordinates to the normalized cusp
// coordinates: the scaling that places the cross-section at height 1 composed
// with the standard-form conjugator.  In-group for every tag; for H2R/SL2T the
// scaling acts on the (x, z) factor only.
GroupElement cusp_chart_conjugator(Tag t, const EndAttachment& end);

struct AffineTorusMap {
  Mat2 linear;
  Vec2 offset;

  Vec2 apply(const Vec2& v) const {
    const Vec2 w = linear.apply(v);
    return {w.x + offset.x, w.y + offset.y};
  }
};

// Area preserving affine representative of the gluing class:
// linear = B2 * class * B1^{-1}, so it carries lattice 1 onto lattice 2.
AffineTorusMap gluing_representative(const Lattice2& lat1, const Lattice2& lat2,
                                     const IMat2& cls, const Vec2& offset = {0.0, 0.0});

// The three regions of the gluing cylinder and the middle group H generated by
// the two lattices and the flip.
struct AffineCylinderGlue {
  Lattice2 lat_left;
  Lattice2 lat_right;
  IMat2 cls;
  AffineTorusMap map;
  double slide = 0.0;
  GroupElement flip;  // (v, u) -> (A v, 2*slide - u), an AFF element
  std::vector<GroupElement> gens_left;
  std::vector<GroupElement> gens_mid;
  std::vector<GroupElement> gens_right;
};

// Requires det(cls) = -1: the collar identification reflects the third
// coordinate, so an orientation-reversing torus class keeps the assembled
// three-manifold coherently oriented.
AffineCylinderGlue build_affine_cylinder(const Lattice2& lat1, const Lattice2& lat2,
                                         const IMat2& cls, double slide,
                                         const Vec2& offset = {0.0, 0.0});

// Twisted R-bundle over a Klein bottle: quotient of T x R by an orientation
// preserving fixed point free affine involution flipping the ends.
struct KleinEnd {
  Lattice2 lattice;
  IMat2 sigma;   // involution on lattice coordinates, sigma^2 = I, det = -1
  Vec2 shift;    // in lattice coordinates
  GroupElement involution;  // (v, u) -> (B sigma B^{-1} v + B shift, -u)
};

// Verifies sigma^2 = I, det sigma = -1, iota^2 a lattice translation, and that
// the fixed point congruence (sigma - I) v = -shift (mod lattice) is insolvable.
KleinEnd klein_end(const Lattice2& lat, const IMat2& sigma, const Vec2& shift);

// Distance of det(f, shift) from the nearest integer, f the primitive integer
// -1 eigenvector of sigma.  The congruence (sigma - I) v = -shift (mod lattice)
// is solvable, and the involution has fixed points, exactly when this vanishes.
double klein_congruence_residual(const IMat2& sigma, const Vec2& shift);

}  // namespace liegeom

#endif  // LIEGEOM_CONSTRUCTION_HPP_
