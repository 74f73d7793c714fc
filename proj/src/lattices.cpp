#include "liegeom/lattices.hpp"

#include <cmath>

#include "liegeom/errors.hpp"

namespace liegeom {

Lattice2 make_lattice(const Vec2& b1, const Vec2& b2) {
  if (std::abs(cross(b1, b2)) <= 1e-12) {
    throw constraint_error("make_lattice: basis vectors are linearly dependent");
  }
  return {b1, b2};
}

double area(const Lattice2& lat) {
  const double a = std::abs(cross(lat.b1, lat.b2));
  if (a <= 1e-12) throw constraint_error("area: degenerate lattice basis");
  return a;
}

Mat2 basis_matrix(const Lattice2& lat) {
  return {lat.b1.x, lat.b2.x, lat.b1.y, lat.b2.y};
}

namespace {

void require_commuting(const GroupElement& g1, const GroupElement& g2) {
  const double r = action_residual(compose(g1, g2), compose(g2, g1), action_sample_points());
  if (!(r <= 1e-9)) {
    throw constraint_error("cusp generators do not commute (action residual " +
                           std::to_string(r) + ")");
  }
}

}  // namespace

CuspSubgroup make_cusp(const GroupElement& g1, const GroupElement& g2) {
  if (g1.tag() != g2.tag()) {
    throw tag_error("make_cusp: generators must belong to the same group");
  }
  if (is_identity(g1) || is_identity(g2)) {
    throw constraint_error("make_cusp: generators must be nontrivial");
  }
  require_commuting(g1, g2);
  return {g1, g2};
}

namespace {

constexpr double kFormTol = 1e-7;  // translation form after numeric conjugation

struct H3Class {
  bool parabolic = false;
  bool at_infinity = false;
  cplx fixed{0.0, 0.0};
};

H3Class classify_h3(const MoebiusC& m) {
  const cplx tr = m.a + m.d;
  const bool parabolic = std::abs(tr - 2.0) <= 1e-9 || std::abs(tr + 2.0) <= 1e-9;
  if (!parabolic) return {};
  if (std::abs(m.c) <= 1e-9) return {true, true, {}};
  return {true, false, (m.a - m.d) / (2.0 * m.c)};
}

Lattice2 lattice_from_translations(const Vec2& v1, const Vec2& v2) {
  if (std::abs(cross(v1, v2)) <= 1e-12) {
    throw not_a_cusp_error("standard_form: translation vectors do not span a rank-2 lattice");
  }
  return make_lattice(v1, v2);
}

GroupElement conjugate(const GroupElement& h, const GroupElement& g) {
  return compose(compose(h, g), inverse(h));
}

StandardForm standard_form_h3(const CuspSubgroup& cusp) {
  const H3Class c1 = classify_h3(cusp.g1.h3());
  const H3Class c2 = classify_h3(cusp.g2.h3());
  if (!c1.parabolic || !c2.parabolic) {
    throw not_a_cusp_error(
        "standard_form: generators are not parabolic (trace must be +-2 within 1e-9)");
  }
  GroupElement h = identity(Tag::H3);
  if (!(c1.at_infinity && c2.at_infinity)) {
    if (c1.at_infinity != c2.at_infinity) {
      throw not_a_cusp_error("standard_form: generators do not share a fixed point");
    }
    const double scale =
        std::max(1.0, std::max(std::abs(c1.fixed), std::abs(c2.fixed)));
    if (std::abs(c1.fixed - c2.fixed) > 1e-6 * scale) {
      throw not_a_cusp_error("standard_form: generators do not share a fixed point");
    }
    const cplx p = 0.5 * (c1.fixed + c2.fixed);
    h = make_h3(0.0, -1.0, 1.0, -p);
  }
  const auto v1 = horizontal_translation_vector(conjugate(h, cusp.g1), kFormTol);
  const auto v2 = horizontal_translation_vector(conjugate(h, cusp.g2), kFormTol);
  if (!v1 || !v2) {
    throw not_a_cusp_error(
        "standard_form: conjugated generators are not horizontal translations");
  }
  return {h, lattice_from_translations(*v1, *v2)};
}

struct PlaneClass {
  enum Kind { Identity, Parabolic, Other } kind = Other;
  bool at_infinity = false;
  double fixed = 0.0;
};

PlaneClass classify_plane(const Mat2& m) {
  PlaneClass c;
  if (max_abs_diff(m, Mat2::identity()) <= 1e-9) {
    c.kind = PlaneClass::Identity;
    c.at_infinity = true;
    return c;
  }
  const double tr = m.m00 + m.m11;
  if (std::abs(std::abs(tr) - 2.0) > 1e-9) return c;
  c.kind = PlaneClass::Parabolic;
  if (std::abs(m.m10) <= 1e-9) {
    c.at_infinity = true;
  } else {
    c.fixed = (m.m00 - m.m11) / (2.0 * m.m10);
  }
  return c;
}

// Shared by H2R and SL2T: the plane parts must be parabolic around a common
// boundary point (or identity); the fiber shifts come along untouched.
StandardForm standard_form_fibered(const CuspSubgroup& cusp) {
  const Mat2 m1 = (cusp.tag() == Tag::H2R) ? cusp.g1.h2r().m : cusp.g1.sl2t().m;
  const Mat2 m2 = (cusp.tag() == Tag::H2R) ? cusp.g2.h2r().m : cusp.g2.sl2t().m;
  const PlaneClass c1 = classify_plane(m1);
  const PlaneClass c2 = classify_plane(m2);
  if (c1.kind == PlaneClass::Other || c2.kind == PlaneClass::Other) {
    throw not_a_cusp_error(
        "standard_form: plane parts are not parabolic or identity");
  }
  GroupElement h = identity(cusp.tag());
  const bool need1 = c1.kind == PlaneClass::Parabolic && !c1.at_infinity;
  const bool need2 = c2.kind == PlaneClass::Parabolic && !c2.at_infinity;
  if (need1 || need2) {
    const bool have1 = c1.kind == PlaneClass::Parabolic;
    const bool have2 = c2.kind == PlaneClass::Parabolic;
    if ((have1 && !need1) || (have2 && !need2)) {
      throw not_a_cusp_error("standard_form: generators do not share a fixed point");
    }
    double p = 0.0;
    if (need1 && need2) {
      const double scale = std::max(1.0, std::max(std::abs(c1.fixed), std::abs(c2.fixed)));
      if (std::abs(c1.fixed - c2.fixed) > 1e-6 * scale) {
        throw not_a_cusp_error("standard_form: generators do not share a fixed point");
      }
      p = 0.5 * (c1.fixed + c2.fixed);
    } else {
      p = need1 ? c1.fixed : c2.fixed;
    }
    const Mat2 hm{0.0, -1.0, 1.0, -p};
    h = (cusp.tag() == Tag::H2R) ? make_h2r(hm, 0.0) : make_sl2t(hm, 0, 0.0);
  }
  const auto v1 = horizontal_translation_vector(conjugate(h, cusp.g1), kFormTol);
  const auto v2 = horizontal_translation_vector(conjugate(h, cusp.g2), kFormTol);
  if (!v1 || !v2) {
    throw not_a_cusp_error(
        "standard_form: conjugated generators are not horizontal translations");
  }
  return {h, lattice_from_translations(*v1, *v2)};
}

StandardForm standard_form_affine(const CuspSubgroup& cusp) {
  const auto v1 = horizontal_translation_vector(cusp.g1);
  const auto v2 = horizontal_translation_vector(cusp.g2);
  if (!v1 || !v2) {
    throw not_a_cusp_error("standard_form: AFF cusp generators must be horizontal translations");
  }
  return {identity(Tag::AFF), lattice_from_translations(*v1, *v2)};
}

}  // namespace

StandardForm standard_form(const CuspSubgroup& cusp) {
  if (cusp.g1.tag() != cusp.g2.tag()) {
    throw tag_error("standard_form: generators must belong to the same group");
  }
  require_commuting(cusp.g1, cusp.g2);
  switch (cusp.tag()) {
    case Tag::H3: return standard_form_h3(cusp);
    case Tag::AFF: return standard_form_affine(cusp);
    case Tag::H2R:
    case Tag::SL2T: return standard_form_fibered(cusp);
  }
  throw tag_error("standard_form: bad tag");
}

Normalized normalize(const Lattice2& lat, Tag t) {
  const double a = area(lat);
  const double s = std::sqrt(a);
  const Lattice2 scaled = make_lattice((1.0 / s) * lat.b1, (1.0 / s) * lat.b2);
  return {t == Tag::AFF ? 1.0 : s, scaled};
}

cplx modulus(const Lattice2& lat) {
  area(lat);  // reject degenerate bases
  const cplx z1(lat.b1.x, lat.b1.y);
  const cplx z2(lat.b2.x, lat.b2.y);
  cplx tau = z2 / z1;
  if (tau.imag() < 0.0) tau = -tau;
  for (int i = 0; i < 128; ++i) {
    tau -= std::round(tau.real());
    if (std::norm(tau) < 1.0 - 1e-15) {
      tau = -1.0 / tau;
    } else {
      break;
    }
  }
  if (tau.real() >= 0.5 - 1e-12) tau -= 1.0;
  if (std::abs(std::abs(tau) - 1.0) <= 1e-12 && tau.real() > 1e-12) tau = -1.0 / tau;
  return tau;
}

}  // namespace liegeom
