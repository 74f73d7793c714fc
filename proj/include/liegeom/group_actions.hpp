#ifndef LIEGEOM_GROUP_ACTIONS_HPP_
#define LIEGEOM_GROUP_ACTIONS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "liegeom/linalg.hpp"
#include "liegeom/model_space.hpp"

namespace liegeom {

// The four element types acting on upper half space U.
//
//   H3   rational transformations: Poincare extension of a Moebius map of the
//        boundary plane w = x + iy.
//   AFF  affine transformations transferred from Euclidean space through
//        exp/log on the third coordinate; measure preserving on each factor
//        of the R^2 x R splitting.
//   H2R  Moebius map of the (x, z) half plane times a translation of the
//        y line.
//   SL2T Z-cover elements: Moebius map of the (x, z) half plane plus a fiber
//        shift of y by theta and the continuously branched rotation angle of
//        the derivative relative to the vertical field.
enum class Tag { H3, AFF, H2R, SL2T };

const char* tag_name(Tag t);
std::optional<Tag> tag_from_name(std::string_view name);

// Continuous parameter count of the element type.
int group_dimension(Tag t);

// Normalized so ad - bc = 1 and the first entry of (a,b,c,d) with modulus
// above 1e-9 has argument in (-pi/2, pi/2].
struct MoebiusC {
  cplx a, b, c, d;
};

// Euclidean data of the transferred affine map: (x,y) -> linear*(x,y) + (b1,b2),
// z -> exp(b3) * z^eps.  |det linear| = 1 and eps = +-1.
struct AffineA {
  Mat2 linear;
  int eps = 1;
  Vec3 b;
};

// m in PSL(2,R) acting on the (x, z) half plane, s shifting the y line.
struct IsomH2R {
  Mat2 m;
  double s = 0.0;
};

// Canonical representatives keep k = 0; construction folds 2*pi*k into theta.
struct FiberedIsom {
  Mat2 m;
  long long k = 0;
  double theta = 0.0;
};

struct GroupElement {
  std::variant<MoebiusC, AffineA, IsomH2R, FiberedIsom> payload;

  Tag tag() const { return static_cast<Tag>(payload.index()); }
  const MoebiusC& h3() const;
  const AffineA& aff() const;
  const IsomH2R& h2r() const;
  const FiberedIsom& sl2t() const;
};

// Factories canonicalize and validate; all other code builds elements here.
GroupElement make_h3(cplx a, cplx b, cplx c, cplx d);
GroupElement make_affine(const Mat2& linear, int eps, const Vec3& b);
GroupElement make_h2r(const Mat2& m, double s);
GroupElement make_sl2t(const Mat2& m, long long k, double theta);
GroupElement identity(Tag t);

// (a after b): act(compose(a,b), p) == act(a, act(b, p)). Throws tag_error on
// mixed tags; cross-group products live in developing::Word.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
UPoint act(const GroupElement& g, const UPoint& p);

// Affine map of Euclidean three space respecting the R^2 x R splitting.
struct EuclideanAffine {
  Mat2 linear;
  int eps = 1;
  Vec3 translation;

  Vec3 apply(const Vec3& q) const {
    const Vec2 h = linear.apply({q.x, q.y});
    return {h.x + translation.x, h.y + translation.y,
            static_cast<double>(eps) * q.z + translation.z};
  }
};

EuclideanAffine euclidean_compose(const EuclideanAffine& f, const EuclideanAffine& g);

// Transfer through exp/log on the third coordinate; a group homomorphism onto
// the AFF elements: act(transfer_affine(f), to_upper_half(q)) = to_upper_half(f(q)).
GroupElement transfer_affine(const EuclideanAffine& f);

// Rotation angle of the derivative of the Moebius map of m at the half-plane
// point p, against the vertical field.  Principal branch in (-pi, pi]; exactly
// zero when the matrix is upper triangular.
double angle_derivative(const Mat2& m, const Vec2& halfplane_point);

// The continuously branched angle used by the SL2T action: -2 arg(c w + d)
// without wrapping.  Single valued on the half plane since c w + d stays in
// one open half plane for c != 0.
double lift_angle(const Mat2& m, double x, double z);

// Moebius action of a real matrix on the (x, z) half plane.
Vec2 halfplane_apply(const Mat2& m, const Vec2& p);

// The element of the tagged group acting exactly as (x,y,z) -> (x+v.x, y+v.y, z).
GroupElement embed_translation(const Vec2& v, Tag t);

// Field-wise comparison of canonical representatives.
bool approx_equal(const GroupElement& a, const GroupElement& b, double tol = 1e-12);
bool is_identity(const GroupElement& g, double tol = 1e-12);

// If g acts as a horizontal translation, its vector.
std::optional<Vec2> horizontal_translation_vector(const GroupElement& g, double tol = 1e-9);

// Re-expresses g as an element of the target group with the same action on U,
// when one exists: horizontal translations move between all four tags,
// rotation-translations between H3 and AFF, upper-triangular elements between
// H2R and SL2T.
std::optional<GroupElement> re_express(const GroupElement& g, Tag target);

// 100 fixed deterministic points used whenever two elements are compared by
// their actions.
std::span<const UPoint> action_sample_points();

double action_residual(const GroupElement& a, const GroupElement& b,
                       std::span<const UPoint> pts);
bool acts_identically(const GroupElement& a, const GroupElement& b, double tol = 1e-12);

}  // namespace liegeom

#endif  // LIEGEOM_GROUP_ACTIONS_HPP_
