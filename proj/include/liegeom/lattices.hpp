#ifndef LIEGEOM_LATTICES_HPP_
#define LIEGEOM_LATTICES_HPP_

#include "liegeom/group_actions.hpp"
#include "liegeom/linalg.hpp"

namespace liegeom {

// Rank-2 lattice of horizontal translations; the currency of torus walls.
struct Lattice2 {
  Vec2 b1{1.0, 0.0};
  Vec2 b2{0.0, 1.0};
};

// Validates linear independence (|b1 x b2| > 1e-12).
Lattice2 make_lattice(const Vec2& b1, const Vec2& b2);

double area(const Lattice2& lat);

// Columns are the basis vectors.
Mat2 basis_matrix(const Lattice2& lat);

// Two commuting nontrivial generators of the same group; the Z+Z subgroup of
// a toroidal end.  The factory checks commutation by action comparison.
struct CuspSubgroup {
  GroupElement g1;
  GroupElement g2;

  Tag tag() const { return g1.tag(); }
};

CuspSubgroup make_cusp(const GroupElement& g1, const GroupElement& g2);

struct StandardForm {
  GroupElement conjugator;  // h with h g_i h^{-1} = embed_translation(lattice.b_i)
  Lattice2 lattice;
};

// Conjugates the cusp to a lattice of horizontal translations fixing infinity.
// Throws constraint_error for non-commuting input and not_a_cusp_error when the
// generators are not conjugate to horizontal translations.
StandardForm standard_form(const CuspSubgroup& cusp);

struct Normalized {
  double height = 1.0;  // Euclidean height of the horospherical cross-section
  Lattice2 lattice;     // area 1
};

// Hyperbolic-type tags place the cross-section at height sqrt(area), where
// induced lengths scale by 1/height; AFF rescales formally with height 1.
Normalized normalize(const Lattice2& lat, Tag t);

// Lattice shape invariant: tau in the modular fundamental domain
// (|tau| >= 1, Re tau in [-1/2, 1/2), Im tau > 0).
cplx modulus(const Lattice2& lat);

}  // namespace liegeom

#endif  // LIEGEOM_LATTICES_HPP_
