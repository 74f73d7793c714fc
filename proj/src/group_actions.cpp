#include "liegeom/group_actions.hpp"

#include <cmath>
#include <numbers>

#include "liegeom/errors.hpp"

namespace liegeom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEntryZero = 1e-9;   // "first nonzero entry" threshold
constexpr double kDetTol = 1e-9;      // acceptance tolerance before renormalizing

bool arg_in_right_half(const cplx& v) {
  // argument in (-pi/2, pi/2]: positive real part, or on the imaginary axis
  // pointing up.
  if (v.real() > 0.0) return true;
  if (v.real() < 0.0) return false;
  return v.imag() > 0.0;
}

CMat2 canonical_sign(CMat2 m) {
  const cplx* entries[4] = {&m.a, &m.b, &m.c, &m.d};
  for (const cplx* e : entries) {
    if (std::abs(*e) > kEntryZero) {
      if (!arg_in_right_half(*e)) {
        m.a = -m.a;
        m.b = -m.b;
        m.c = -m.c;
        m.d = -m.d;
      }
      break;
    }
  }
  return m;
}

Mat2 canonical_sign(Mat2 m) {
  const double entries[4] = {m.m00, m.m01, m.m10, m.m11};
  for (double e : entries) {
    if (std::abs(e) > kEntryZero) {
      if (e < 0.0) m = -1.0 * m;
      break;
    }
  }
  return m;
}

Mat2 normalize_sl2(Mat2 m, const char* who) {
  const double d = m.det();
  if (!(d > 1e-12)) {
    throw constraint_error(std::string(who) + ": matrix determinant must be positive");
  }
  // skip the rescaling inside the invariant window so canonicalization is
  // exactly idempotent (serialized elements re-parse bit for bit)
  if (std::abs(d - 1.0) > 1e-13) m = (1.0 / std::sqrt(d)) * m;
  return canonical_sign(m);
}

}  // namespace

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::H3: return "H3";
    case Tag::AFF: return "AFF";
    case Tag::H2R: return "H2R";
    case Tag::SL2T: return "SL2T";
  }
  return "?";
}

std::optional<Tag> tag_from_name(std::string_view name) {
  if (name == "H3") return Tag::H3;
  if (name == "AFF") return Tag::AFF;
  if (name == "H2R") return Tag::H2R;
  if (name == "SL2T") return Tag::SL2T;
  return std::nullopt;
}

int group_dimension(Tag t) {
  switch (t) {
    case Tag::H3: return 6;
    case Tag::AFF: return 6;
    case Tag::H2R: return 4;
    case Tag::SL2T: return 4;
  }
  return 0;
}

const MoebiusC& GroupElement::h3() const {
  if (tag() != Tag::H3) throw tag_error("element is not an H3 element");
  return std::get<MoebiusC>(payload);
}
const AffineA& GroupElement::aff() const {
  if (tag() != Tag::AFF) throw tag_error("element is not an AFF element");
  return std::get<AffineA>(payload);
}
const IsomH2R& GroupElement::h2r() const {
  if (tag() != Tag::H2R) throw tag_error("element is not an H2R element");
  return std::get<IsomH2R>(payload);
}
const FiberedIsom& GroupElement::sl2t() const {
  if (tag() != Tag::SL2T) throw tag_error("element is not an SL2T element");
  return std::get<FiberedIsom>(payload);
}

GroupElement make_h3(cplx a, cplx b, cplx c, cplx d) {
  CMat2 m{a, b, c, d};
  const cplx det = m.det();
  if (std::abs(det) < 1e-12) {
    throw constraint_error("make_h3: matrix is singular");
  }
  if (std::abs(det - 1.0) > 1e-13) {
    const cplx s = std::sqrt(det);
    m.a /= s;
    m.b /= s;
    m.c /= s;
    m.d /= s;
  }
  m = canonical_sign(m);
  return GroupElement{MoebiusC{m.a, m.b, m.c, m.d}};
}

GroupElement make_affine(const Mat2& linear, int eps, const Vec3& b) {
  if (eps != 1 && eps != -1) {
    throw constraint_error("make_affine: eps must be +1 or -1");
  }
  const double ad = std::abs(linear.det());
  if (!(ad > 1e-12) || std::abs(ad - 1.0) > kDetTol) {
    throw constraint_error("make_affine: |det| of the horizontal block must be 1 within 1e-9");
  }
  if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.z)) {
    throw constraint_error("make_affine: translation must be finite");
  }
  AffineA g;
  g.linear = std::abs(ad - 1.0) > 1e-13 ? (1.0 / std::sqrt(ad)) * linear : linear;
  g.eps = eps;
  g.b = b;
  return GroupElement{g};
}

GroupElement make_h2r(const Mat2& m, double s) {
  if (!std::isfinite(s)) throw constraint_error("make_h2r: shift must be finite");
  return GroupElement{IsomH2R{normalize_sl2(m, "make_h2r"), s}};
}

GroupElement make_sl2t(const Mat2& m, long long k, double theta) {
  if (!std::isfinite(theta)) throw constraint_error("make_sl2t: theta must be finite");
  FiberedIsom g;
  g.m = normalize_sl2(m, "make_sl2t");
  g.k = 0;
  g.theta = theta + kTwoPi * static_cast<double>(k);
  return GroupElement{g};
}

GroupElement identity(Tag t) {
  switch (t) {
    case Tag::H3: return make_h3(1.0, 0.0, 0.0, 1.0);
    case Tag::AFF: return make_affine(Mat2::identity(), 1, {0.0, 0.0, 0.0});
    case Tag::H2R: return make_h2r(Mat2::identity(), 0.0);
    case Tag::SL2T: return make_sl2t(Mat2::identity(), 0, 0.0);
  }
  throw tag_error("identity: bad tag");
}

double lift_angle(const Mat2& m, double x, double z) {
  if (m.m10 == 0.0) return 0.0;  // canonical upper-triangular: d > 0, angle 0
  const cplx cwd(m.m10 * x + m.m11, m.m10 * z);
  return -2.0 * std::arg(cwd);
}

double angle_derivative(const Mat2& m, const Vec2& p) {
  if (!(p.y > 0.0)) {
    throw domain_error("angle_derivative: point must lie in the open half plane");
  }
  const Mat2 c = normalize_sl2(m, "angle_derivative");
  if (c.m10 == 0.0) return 0.0;
  double a = lift_angle(c, p.x, p.y);
  if (a > std::numbers::pi) a -= kTwoPi;
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

Vec2 halfplane_apply(const Mat2& m, const Vec2& p) {
  const cplx zeta(p.x, p.y);
  const cplx den = m.m10 * zeta + m.m11;
  const double den2 = std::norm(den);
  if (den2 < 1e-300) {
    throw range_error("halfplane_apply: denominator vanished near the boundary");
  }
  const cplx im = (m.m00 * zeta + m.m01) / den;
  if (!std::isfinite(im.real()) || !(im.imag() > 0.0)) {
    throw range_error("halfplane_apply: image left the half plane numerically");
  }
  return {im.real(), im.imag()};
}

namespace {

// Integer winding of the automorphy-factor identity at the base point i:
//   lift(m1, m2 i) + lift(m2, i) - lift(m1 m2, i) in 2*pi*Z, exactly.
long long winding_cocycle(const Mat2& m1, const Mat2& m2, const Mat2& m12) {
  const Vec2 base{0.0, 1.0};
  const Vec2 mid = halfplane_apply(m2, base);
  const double total = lift_angle(m1, mid.x, mid.y) + lift_angle(m2, base.x, base.y) -
                       lift_angle(m12, base.x, base.y);
  return std::llround(total / kTwoPi);
}

}  // namespace

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.tag() != b.tag()) {
    throw tag_error(std::string("compose: mixed tags ") + tag_name(a.tag()) + " and " +
                    tag_name(b.tag()));
  }
  switch (a.tag()) {
    case Tag::H3: {
      const MoebiusC& x = a.h3();
      const MoebiusC& y = b.h3();
      const CMat2 p = CMat2{x.a, x.b, x.c, x.d} * CMat2{y.a, y.b, y.c, y.d};
      return make_h3(p.a, p.b, p.c, p.d);
    }
    case Tag::AFF: {
      const AffineA& x = a.aff();
      const AffineA& y = b.aff();
      const Vec2 h = x.linear.apply({y.b.x, y.b.y});
      return make_affine(x.linear * y.linear, x.eps * y.eps,
                         {h.x + x.b.x, h.y + x.b.y,
                          static_cast<double>(x.eps) * y.b.z + x.b.z});
    }
    case Tag::H2R: {
      const IsomH2R& x = a.h2r();
      const IsomH2R& y = b.h2r();
      return make_h2r(x.m * y.m, x.s + y.s);
    }
    case Tag::SL2T: {
      const FiberedIsom& x = a.sl2t();
      const FiberedIsom& y = b.sl2t();
      const Mat2 m = normalize_sl2(x.m * y.m, "compose");
      const long long n = winding_cocycle(x.m, y.m, m);
      return make_sl2t(m, 0, x.theta + y.theta + kTwoPi * static_cast<double>(n));
    }
  }
  throw tag_error("compose: bad tag");
}

GroupElement inverse(const GroupElement& a) {
  switch (a.tag()) {
    case Tag::H3: {
      const MoebiusC& x = a.h3();
      return make_h3(x.d, -x.b, -x.c, x.a);
    }
    case Tag::AFF: {
      const AffineA& x = a.aff();
      const Mat2 li = x.linear.inverse();
      const Vec2 h = li.apply({x.b.x, x.b.y});
      return make_affine(li, x.eps, {-h.x, -h.y, -static_cast<double>(x.eps) * x.b.z});
    }
    case Tag::H2R: {
      const IsomH2R& x = a.h2r();
      return make_h2r(x.m.inverse(), -x.s);
    }
    case Tag::SL2T: {
      const FiberedIsom& x = a.sl2t();
      const Mat2 mi = normalize_sl2(x.m.inverse(), "inverse");
      const long long n = winding_cocycle(x.m, mi, Mat2::identity());
      return make_sl2t(mi, 0, -x.theta - kTwoPi * static_cast<double>(n));
    }
  }
  throw tag_error("inverse: bad tag");
}

UPoint act(const GroupElement& g, const UPoint& p) {
  if (!(p.z > 0.0)) throw domain_error("act: point is not in upper half space");
  switch (g.tag()) {
    case Tag::H3: {
      const MoebiusC& m = g.h3();
      const cplx w(p.x, p.y);
      const double t = p.z;
      const cplx cwd = m.c * w + m.d;
      const double D = std::norm(cwd) + std::norm(m.c) * t * t;
      if (D < 1e-300) throw range_error("act: H3 denominator vanished near the boundary");
      const cplx num = (m.a * w + m.b) * std::conj(cwd) + m.a * std::conj(m.c) * (t * t);
      const cplx wi = num / D;
      const double zi = t / D;
      if (!std::isfinite(wi.real()) || !std::isfinite(wi.imag()) || !(zi > 0.0) ||
          !std::isfinite(zi)) {
        throw range_error("act: H3 image is not representable");
      }
      return {wi.real(), wi.imag(), zi};
    }
    case Tag::AFF: {
      const AffineA& f = g.aff();
      const Vec2 h = f.linear.apply({p.x, p.y});
      const double scale = std::exp(f.b.z);
      const double zi = (f.eps == 1) ? p.z * scale : scale / p.z;
      if (!std::isfinite(h.x) || !std::isfinite(h.y) || !(zi > 0.0) || !std::isfinite(zi)) {
        throw range_error("act: AFF image is not representable");
      }
      return {h.x + f.b.x, h.y + f.b.y, zi};
    }
    case Tag::H2R: {
      const IsomH2R& f = g.h2r();
      const Vec2 q = halfplane_apply(f.m, {p.x, p.z});
      return {q.x, p.y + f.s, q.y};
    }
    case Tag::SL2T: {
      const FiberedIsom& f = g.sl2t();
      const Vec2 q = halfplane_apply(f.m, {p.x, p.z});
      const double shift =
          f.theta + lift_angle(f.m, p.x, p.z) + kTwoPi * static_cast<double>(f.k);
      return {q.x, p.y + shift, q.y};
    }
  }
  throw tag_error("act: bad tag");
}

EuclideanAffine euclidean_compose(const EuclideanAffine& f, const EuclideanAffine& g) {
  EuclideanAffine h;
  h.linear = f.linear * g.linear;
  h.eps = f.eps * g.eps;
  const Vec2 t = f.linear.apply({g.translation.x, g.translation.y});
  h.translation = {t.x + f.translation.x, t.y + f.translation.y,
                   static_cast<double>(f.eps) * g.translation.z + f.translation.z};
  return h;
}

GroupElement transfer_affine(const EuclideanAffine& f) {
  if (f.eps != 1 && f.eps != -1) {
    throw constraint_error("transfer_affine: eps must be +1 or -1");
  }
  if (std::abs(std::abs(f.linear.det()) - 1.0) > kDetTol) {
    throw constraint_error("transfer_affine: |det| of the horizontal block must be 1");
  }
  return make_affine(f.linear, f.eps, f.translation);
}

GroupElement embed_translation(const Vec2& v, Tag t) {
  switch (t) {
    case Tag::H3: return make_h3(1.0, cplx(v.x, v.y), 0.0, 1.0);
    case Tag::AFF: return make_affine(Mat2::identity(), 1, {v.x, v.y, 0.0});
    case Tag::H2R: return make_h2r({1.0, v.x, 0.0, 1.0}, v.y);
    case Tag::SL2T: return make_sl2t({1.0, v.x, 0.0, 1.0}, 0, v.y);
  }
  throw tag_error("embed_translation: bad tag");
}

namespace {

double cdiff(const cplx& a, const cplx& b) { return std::abs(a - b); }

}  // namespace

bool approx_equal(const GroupElement& a, const GroupElement& b, double tol) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::H3: {
      const MoebiusC& x = a.h3();
      const MoebiusC& y = b.h3();
      return cdiff(x.a, y.a) <= tol && cdiff(x.b, y.b) <= tol && cdiff(x.c, y.c) <= tol &&
             cdiff(x.d, y.d) <= tol;
    }
    case Tag::AFF: {
      const AffineA& x = a.aff();
      const AffineA& y = b.aff();
      return x.eps == y.eps && max_abs_diff(x.linear, y.linear) <= tol &&
             std::abs(x.b.x - y.b.x) <= tol && std::abs(x.b.y - y.b.y) <= tol &&
             std::abs(x.b.z - y.b.z) <= tol;
    }
    case Tag::H2R: {
      const IsomH2R& x = a.h2r();
      const IsomH2R& y = b.h2r();
      return max_abs_diff(x.m, y.m) <= tol && std::abs(x.s - y.s) <= tol;
    }
    case Tag::SL2T: {
      const FiberedIsom& x = a.sl2t();
      const FiberedIsom& y = b.sl2t();
      return max_abs_diff(x.m, y.m) <= tol && x.k == y.k && std::abs(x.theta - y.theta) <= tol;
    }
  }
  return false;
}

bool is_identity(const GroupElement& g, double tol) {
  return approx_equal(g, identity(g.tag()), tol);
}

std::optional<Vec2> horizontal_translation_vector(const GroupElement& g, double tol) {
  switch (g.tag()) {
    case Tag::H3: {
      const MoebiusC& m = g.h3();
      if (cdiff(m.a, 1.0) <= tol && cdiff(m.d, 1.0) <= tol && std::abs(m.c) <= tol) {
        return Vec2{m.b.real(), m.b.imag()};
      }
      return std::nullopt;
    }
    case Tag::AFF: {
      const AffineA& f = g.aff();
      if (f.eps == 1 && max_abs_diff(f.linear, Mat2::identity()) <= tol &&
          std::abs(f.b.z) <= tol) {
        return Vec2{f.b.x, f.b.y};
      }
      return std::nullopt;
    }
    case Tag::H2R: {
      const IsomH2R& f = g.h2r();
      if (std::abs(f.m.m00 - 1.0) <= tol && std::abs(f.m.m10) <= tol &&
          std::abs(f.m.m11 - 1.0) <= tol) {
        return Vec2{f.m.m01, f.s};
      }
      return std::nullopt;
    }
    case Tag::SL2T: {
      const FiberedIsom& f = g.sl2t();
      if (std::abs(f.m.m00 - 1.0) <= tol && std::abs(f.m.m10) <= tol &&
          std::abs(f.m.m11 - 1.0) <= tol) {
        return Vec2{f.m.m01, f.theta};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<GroupElement> re_express(const GroupElement& g, Tag target) {
  if (g.tag() == target) return g;
  if (auto v = horizontal_translation_vector(g)) {
    return embed_translation(*v, target);
  }
  constexpr double tol = 1e-9;
  // Rotation-translations act the same way through H3 and AFF.
  if (g.tag() == Tag::H3 && target == Tag::AFF) {
    const MoebiusC& m = g.h3();
    if (std::abs(m.c) <= tol) {
      const cplx alpha = m.a / m.d;
      const cplx beta = m.b / m.d;
      if (std::abs(std::abs(alpha) - 1.0) <= tol) {
        return make_affine(rotation(std::arg(alpha)), 1, {beta.real(), beta.imag(), 0.0});
      }
    }
    return std::nullopt;
  }
  if (g.tag() == Tag::AFF && target == Tag::H3) {
    const AffineA& f = g.aff();
    const Mat2& L = f.linear;
    const bool is_rotation = std::abs(L.m00 - L.m11) <= tol && std::abs(L.m01 + L.m10) <= tol &&
                             std::abs(L.det() - 1.0) <= tol;
    if (f.eps == 1 && std::abs(f.b.z) <= tol && is_rotation) {
      const cplx alpha(L.m00, L.m10);
      const cplx s = std::sqrt(alpha);
      const cplx beta(f.b.x, f.b.y);
      return make_h3(s, beta / s, 0.0, 1.0 / s);
    }
    return std::nullopt;
  }
  // Upper-triangular elements have identically vanishing angle, so the H2R and
  // SL2T interpretations coincide.
  if (g.tag() == Tag::H2R && target == Tag::SL2T) {
    const IsomH2R& f = g.h2r();
    if (std::abs(f.m.m10) <= tol) return make_sl2t(f.m, 0, f.s);
    return std::nullopt;
  }
  if (g.tag() == Tag::SL2T && target == Tag::H2R) {
    const FiberedIsom& f = g.sl2t();
    if (std::abs(f.m.m10) <= tol) return make_h2r(f.m, f.theta);
    return std::nullopt;
  }
  return std::nullopt;
}

std::span<const UPoint> action_sample_points() {
  static const std::vector<UPoint> pts = sample_box(100, 0x11d5a11ce0ffee00ULL);
  return pts;
}

double action_residual(const GroupElement& a, const GroupElement& b,
                       std::span<const UPoint> pts) {
  double r = 0.0;
  for (const UPoint& p : pts) {
    r = std::max(r, point_residual(act(a, p), act(b, p)));
  }
  return r;
}

bool acts_identically(const GroupElement& a, const GroupElement& b, double tol) {
  return action_residual(a, b, action_sample_points()) <= tol;
}

}  // namespace liegeom
