#ifndef LIEGEOM_LINALG_HPP_
#define LIEGEOM_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

namespace liegeom {

using cplx = std::complex<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a.x, s * a.y}; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double max_abs(const Vec2& a) { return std::max(std::abs(a.x), std::abs(a.y)); }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

// Real 2x2 matrix, row major.
struct Mat2 {
  double m00 = 1.0, m01 = 0.0;
  double m10 = 0.0, m11 = 1.0;

  static Mat2 identity() { return {}; }
  double det() const { return m00 * m11 - m01 * m10; }
  Mat2 inverse() const {
    const double d = det();
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
  }
  Vec2 apply(const Vec2& v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Mat2 operator*(double s, const Mat2& a) {
  return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  return std::max(std::max(std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01)),
                  std::max(std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)));
}

inline Mat2 rotation(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c, -s, s, c};
}

// Integer 2x2 matrix (gluing classes, Klein involutions on lattice coordinates).
struct IMat2 {
  long long m00 = 1, m01 = 0;
  long long m10 = 0, m11 = 1;

  static IMat2 identity() { return {}; }
  long long det() const { return m00 * m11 - m01 * m10; }
  Mat2 to_real() const {
    return {static_cast<double>(m00), static_cast<double>(m01),
            static_cast<double>(m10), static_cast<double>(m11)};
  }
};

inline IMat2 operator*(const IMat2& a, const IMat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline bool operator==(const IMat2& a, const IMat2& b) {
  return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
}

// Complex 2x2 matrix for the Moebius group.
struct CMat2 {
  cplx a{1.0, 0.0}, b{0.0, 0.0};
  cplx c{0.0, 0.0}, d{1.0, 0.0};

  cplx det() const { return a * d - b * c; }
};

inline CMat2 operator*(const CMat2& m, const CMat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

}  // namespace liegeom

#endif  // LIEGEOM_LINALG_HPP_
