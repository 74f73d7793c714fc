#include "liegeom/construction.hpp"

#include <cmath>
#include <numeric>

#include "liegeom/errors.hpp"

namespace liegeom {

EndAttachment attach_cylinder(const CuspSubgroup& cusp, double collar_halfwidth,
                              const std::string& piece_id, const std::string& cusp_id) {
  if (!(collar_halfwidth > 0.0)) {
    throw constraint_error("attach_cylinder: collar_halfwidth must be positive");
  }
  const StandardForm sf = standard_form(cusp);
  const Normalized nm = normalize(sf.lattice, cusp.tag());
  EndAttachment end;
  end.piece_id = piece_id;
  end.cusp_id = cusp_id;
  end.conjugator = sf.conjugator;
  end.lattice = nm.lattice;
  end.height = nm.height;
  end.collar_halfwidth = collar_halfwidth;
  return end;
}

GroupElement cusp_chart_conjugator(Tag t, const EndAttachment& end) {
  const double h = end.height;
  GroupElement scaling = identity(t);
  if (std::abs(h - 1.0) > 0.0) {
    const double r = std::sqrt(1.0 / h);
    switch (t) {
      case Tag::H3:
        scaling = make_h3(r, 0.0, 0.0, 1.0 / r);
        break;
      case Tag::H2R:
        scaling = make_h2r({r, 0.0, 0.0, 1.0 / r}, 0.0);
        break;
      case Tag::SL2T:
        scaling = make_sl2t({r, 0.0, 0.0, 1.0 / r}, 0, 0.0);
        break;
      case Tag::AFF:
        scaling = identity(Tag::AFF);
        break;
    }
  }
  return compose(scaling, end.conjugator);
}

AffineTorusMap gluing_representative(const Lattice2& lat1, const Lattice2& lat2,
                                     const IMat2& cls, const Vec2& offset) {
  if (std::abs(area(lat1) - 1.0) > 1e-12 || std::abs(area(lat2) - 1.0) > 1e-12) {
    throw constraint_error("gluing_representative: lattices must have area 1");
  }
  const long long d = cls.det();
  if (d != 1 && d != -1) {
    throw constraint_error("gluing_representative: class matrix is not invertible over Z");
  }
  const Mat2 B1 = basis_matrix(lat1);
  const Mat2 B2 = basis_matrix(lat2);
  return {B2 * cls.to_real() * B1.inverse(), offset};
}

AffineCylinderGlue build_affine_cylinder(const Lattice2& lat1, const Lattice2& lat2,
                                         const IMat2& cls, double slide, const Vec2& offset) {
  if (cls.det() != -1) {
    throw orientation_error(
        "build_affine_cylinder: det(class) must be -1: the collar identification "
        "(v,u) -> (Av, 2*slide - u) reflects the third coordinate, so the torus class "
        "must reverse orientation for the glued manifold to stay oriented");
  }
  AffineCylinderGlue glue;
  glue.lat_left = lat1;
  glue.lat_right = lat2;
  glue.cls = cls;
  glue.map = gluing_representative(lat1, lat2, cls, offset);
  glue.slide = slide;
  glue.flip = make_affine(glue.map.linear, -1, {offset.x, offset.y, 2.0 * slide});
  glue.gens_left = {embed_translation(lat1.b1, Tag::AFF),
                    embed_translation(lat1.b2, Tag::AFF)};
  glue.gens_right = {embed_translation(lat2.b1, Tag::AFF),
                     embed_translation(lat2.b2, Tag::AFF)};
  glue.gens_mid = {glue.gens_left[0], glue.gens_left[1], glue.gens_right[0],
                   glue.gens_right[1], glue.flip};
  return glue;
}

namespace {

long long igcd(long long a, long long b) { return std::gcd(a, b); }

// Primitive integer vector spanning the -1 eigenspace of sigma (the kernel of
// sigma + I).
bool minus_one_eigenvector(const IMat2& sigma, long long* fx, long long* fy) {
  const long long m00 = sigma.m00 + 1, m01 = sigma.m01;
  const long long m10 = sigma.m10, m11 = sigma.m11 + 1;
  long long vx = 0, vy = 0;
  if (m00 != 0 || m01 != 0) {
    vx = m01;
    vy = -m00;
  } else if (m10 != 0 || m11 != 0) {
    vx = m11;
    vy = -m10;
  } else {
    return false;  // sigma = -I: whole plane, handled by caller
  }
  if (vx == 0 && vy == 0) return false;
  const long long g = igcd(std::abs(vx), std::abs(vy));
  vx /= g;
  vy /= g;
  if (vx < 0 || (vx == 0 && vy < 0)) {
    vx = -vx;
    vy = -vy;
  }
  // must actually be killed by sigma + I
  if (m00 * vx + m01 * vy != 0 || m10 * vx + m11 * vy != 0) return false;
  *fx = vx;
  *fy = vy;
  return true;
}

double dist_to_integer(double x) { return std::abs(x - std::round(x)); }

}  // namespace

double klein_congruence_residual(const IMat2& sigma, const Vec2& shift) {
  long long fx = 0, fy = 0;
  if (!minus_one_eigenvector(sigma, &fx, &fy)) {
    throw invalid_involution_error("klein_end: sigma has no -1 eigenvector over Z");
  }
  return dist_to_integer(static_cast<double>(fx) * shift.y -
                         static_cast<double>(fy) * shift.x);
}

KleinEnd klein_end(const Lattice2& lat, const IMat2& sigma, const Vec2& shift) {
  if (sigma.det() != -1) {
    throw invalid_involution_error("klein_end: det(sigma) must be -1 (the invariant torus "
                                   "must have its orientation reversed)");
  }
  if (!(sigma * sigma == IMat2::identity())) {
    throw invalid_involution_error("klein_end: sigma^2 must be the identity");
  }
  // iota^2 is the translation by (sigma + I) shift; it must lie in the lattice.
  const double tx = static_cast<double>(sigma.m00 + 1) * shift.x +
                    static_cast<double>(sigma.m01) * shift.y;
  const double ty = static_cast<double>(sigma.m10) * shift.x +
                    static_cast<double>(sigma.m11 + 1) * shift.y;
  if (dist_to_integer(tx) > 1e-9 || dist_to_integer(ty) > 1e-9) {
    throw invalid_involution_error(
        "klein_end: involution squared is not a lattice translation");
  }
  // Fixed points on the quotient exist iff shift lies in R*f + Z^2 for the
  // primitive -1 eigenvector f, i.e. iff det(f, shift) is an integer.
  if (klein_congruence_residual(sigma, shift) <= 1e-9) {
    throw invalid_involution_error(
        "klein_end: involution has fixed points on the quotient (the congruence "
        "(sigma - I) v = -shift (mod lattice) is solvable)");
  }
  const Mat2 B = basis_matrix(lat);
  const Mat2 S = B * sigma.to_real() * B.inverse();
  const Vec2 t = B.apply(shift);
  KleinEnd ke;
  ke.lattice = lat;
  ke.sigma = sigma;
  ke.shift = shift;
  ke.involution = make_affine(S, -1, {t.x, t.y, 0.0});
  return ke;
}

}  // namespace liegeom
