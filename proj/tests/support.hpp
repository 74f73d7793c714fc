#ifndef LIEGEOM_TESTS_SUPPORT_HPP_
#define LIEGEOM_TESTS_SUPPORT_HPP_

#include <cmath>

#include "liegeom/assembly.hpp"
#include "liegeom/developing.hpp"
#include "liegeom/group_actions.hpp"
#include "liegeom/lattices.hpp"
#include "liegeom/rng.hpp"

namespace liegeom::testsupport {

inline cplx random_cplx(Rng& rng, double r) {
  return {rng.uniform(-r, r), rng.uniform(-r, r)};
}

// Bounded SL(2,R) matrix: well conditioned on the standard sampling box.
inline Mat2 random_sl2r(Rng& rng) {
  const double lam = rng.uniform(0.75, 1.33);
  return rotation(rng.uniform(-3.0, 3.0)) * Mat2{lam, 0.0, 0.0, 1.0 / lam} *
         rotation(rng.uniform(-3.0, 3.0));
}

inline GroupElement random_element(Tag t, Rng& rng) {
  switch (t) {
    case Tag::H3:
      for (;;) {
        const cplx a = random_cplx(rng, 1.5), b = random_cplx(rng, 1.5);
        const cplx c = random_cplx(rng, 1.5), d = random_cplx(rng, 1.5);
        if (std::abs(a * d - b * c) > 0.3) return make_h3(a, b, c, d);
      }
    case Tag::AFF: {
      Mat2 L = random_sl2r(rng);
      if (rng.uniform_int(0, 1)) L = Mat2{L.m01, L.m00, L.m11, L.m10};  // det -1 block
      const int eps = rng.uniform_int(0, 1) ? 1 : -1;
      return make_affine(L, eps,
                         {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                          rng.uniform(-1.5, 1.5)});
    }
    case Tag::H2R:
      return make_h2r(random_sl2r(rng), rng.uniform(-2.0, 2.0));
    case Tag::SL2T:
      return make_sl2t(random_sl2r(rng), 0, rng.uniform(-6.0, 6.0));
  }
  return identity(t);
}

// Near-identity elements: derivatives stay bounded on the standard box, so
// word-evaluation comparisons sit at roundoff scale.
inline GroupElement random_mild_element(Tag t, Rng& rng) {
  const double e = 0.08;
  switch (t) {
    case Tag::H3:
      return make_h3({1.0 + rng.uniform(-e, e), rng.uniform(-e, e)},
                     {rng.uniform(-e, e), rng.uniform(-e, e)},
                     {rng.uniform(-e, e), rng.uniform(-e, e)},
                     {1.0 + rng.uniform(-e, e), rng.uniform(-e, e)});
    case Tag::AFF: {
      const double lam = 1.0 + rng.uniform(-e, e);
      const Mat2 L = rotation(rng.uniform(-e, e)) * Mat2{lam, 0.0, 0.0, 1.0 / lam};
      return make_affine(L, 1,
                         {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5),
                          rng.uniform(-0.3, 0.3)});
    }
    case Tag::H2R:
      return make_h2r({1.0 + rng.uniform(-e, e), rng.uniform(-e, e), rng.uniform(-e, e),
                       1.0 + rng.uniform(-e, e)},
                      rng.uniform(-0.5, 0.5));
    case Tag::SL2T:
      return make_sl2t({1.0 + rng.uniform(-e, e), rng.uniform(-e, e), rng.uniform(-e, e),
                        1.0 + rng.uniform(-e, e)},
                       0, rng.uniform(-0.5, 0.5));
  }
  return identity(t);
}

// Random mixed-tag word of length <= max_len with exact translation letters
// sprinkled in.
inline Word random_mixed_word(Rng& rng, int max_len) {
  Word w;
  const int len = rng.uniform_int(0, max_len);
  for (int k = 0; k < len; ++k) {
    const Tag t = static_cast<Tag>(rng.uniform_int(0, 3));
    if (rng.uniform_int(0, 2) == 0) {
      w.letters.push_back(
          embed_translation({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, t));
    } else {
      w.letters.push_back(random_mild_element(t, rng));
    }
  }
  return w;
}

inline Lattice2 random_lattice(Rng& rng) {
  for (;;) {
    const Vec2 b1{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Vec2 b2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (std::abs(cross(b1, b2)) > 0.2) return make_lattice(b1, b2);
  }
}

inline Lattice2 random_unit_lattice(Rng& rng) {
  return normalize(random_lattice(rng), Tag::AFF).lattice;
}

// Product of unipotents (det 1), optionally flipped to det -1.
inline IMat2 random_glz(Rng& rng, long long target_det) {
  IMat2 m;
  for (int i = 0; i < 4; ++i) {
    const long long k = rng.uniform_int(-2, 2);
    m = m * (rng.uniform_int(0, 1) ? IMat2{1, k, 0, 1} : IMat2{1, 0, k, 1});
  }
  if (m.det() != target_det) m = m * IMat2{1, 0, 0, -1};
  return m;
}

// An admissible cusp: a horizontal lattice conjugated by a random element.
inline CuspSubgroup random_cusp(Tag t, Rng& rng) {
  const Lattice2 lat = random_lattice(rng);
  const GroupElement h = random_element(t, rng);
  const GroupElement hi = inverse(h);
  return make_cusp(compose(compose(h, embed_translation(lat.b1, t)), hi),
                   compose(compose(h, embed_translation(lat.b2, t)), hi));
}

inline constexpr double kFig8Longitude = 3.4641016151377544;  // 2*sqrt(3)

inline PieceDecoration fig8_piece(const std::string& id) {
  PieceDecoration v;
  v.id = id;
  v.kind = PieceDecoration::Kind::Elemental;
  v.tag = Tag::H3;
  CuspData c;
  c.id = "c0";
  c.group = CuspSubgroup{embed_translation({1.0, 0.0}, Tag::H3),
                         embed_translation({0.0, kFig8Longitude}, Tag::H3)};
  v.cusps.push_back(c);
  return v;
}

// Two figure-eight-complement pieces joined along their cusps.
inline GeometryGraph fig8_double_graph(double slide = 0.25) {
  GeometryGraph g;
  g.vertices.push_back(fig8_piece("v1"));
  g.vertices.push_back(fig8_piece("v2"));
  EdgeData e;
  e.a = {"v1", "c0"};
  e.b = {"v2", "c0"};
  e.cls = IMat2{0, 1, 1, 0};
  e.slide = slide;
  g.edges.push_back(e);
  return g;
}

// One figure-eight piece capped with a Klein end.
inline GeometryGraph fig8_klein_graph() {
  GeometryGraph g;
  g.vertices.push_back(fig8_piece("v1"));
  PieceDecoration k;
  k.id = "k1";
  k.kind = PieceDecoration::Kind::Klein;
  k.lattice = make_lattice({1.0, 0.0}, {0.0, 1.0});
  k.sigma = IMat2{1, 0, 0, -1};
  k.shift = {0.5, 0.0};
  g.vertices.push_back(k);
  EdgeData e;
  e.a = {"v1", "c0"};
  e.b = {"k1", "end"};
  e.cls = IMat2{0, 1, 1, 0};
  g.edges.push_back(e);
  return g;
}

}  // namespace liegeom::testsupport

#endif  // LIEGEOM_TESTS_SUPPORT_HPP_
