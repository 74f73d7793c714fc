// Acceptance suite: one pass/fail line per criterion, each at its stated
// tolerance.  Usage: acceptance <path-to-cli> <fixtures-dir>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "liegeom/developing.hpp"
#include "liegeom/errors.hpp"
#include "liegeom/scene.hpp"
#include "support.hpp"

using namespace liegeom;
using namespace liegeom::testsupport;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

int run_cli(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -1;
}

const Tag kTags[4] = {Tag::H3, Tag::AFF, Tag::H2R, Tag::SL2T};

// ---------------------------------------------------------------------------

void criterion_1_dimensions() {
  const bool ok = group_dimension(Tag::H3) == 6 && group_dimension(Tag::AFF) == 6 &&
                  group_dimension(Tag::H2R) == 4 && group_dimension(Tag::SL2T) == 4;
  report(1, "group dimensions (6,6,4,4)", ok);
}

void criterion_2_group_axioms() {
  double worst = 0.0;
  const auto pts = sample_box(25, 0xACCE01);
  for (Tag t : kTags) {
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
      const GroupElement a = random_element(t, rng);
      const GroupElement b = random_element(t, rng);
      const GroupElement c = random_element(t, rng);
      const GroupElement ab_c = compose(compose(a, b), c);
      const GroupElement gi = inverse(a);
      const GroupElement id_a = compose(identity(t), a);
      for (const UPoint& p : pts) {
        worst = std::max(worst, point_residual(act(ab_c, p), act(a, act(b, act(c, p)))));
        worst = std::max(worst, point_residual(act(gi, act(a, p)), p));
        worst = std::max(worst, point_residual(act(id_a, p), act(a, p)));
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.3e", worst);
  report(2, "group axioms (associativity, inverse, identity), all four tags",
         worst < 1e-9, buf);
}

void criterion_3_isometry() {
  double worst = 0.0;
  Rng rng(333);
  const auto pts = sample_box(200, 0xACCE03);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = random_element(Tag::H3, rng);
    const UPoint& p = pts[static_cast<std::size_t>(2 * i)];
    const UPoint& q = pts[static_cast<std::size_t>(2 * i + 1)];
    worst = std::max(worst,
                     std::abs(hyp_distance(act(g, p), act(g, q)) - hyp_distance(p, q)));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.3e", worst);
  report(3, "H3 elements preserve hyperbolic distance", worst < 1e-9, buf);
}

void criterion_4_standard_form() {
  double worst = 0.0;
  bool angles_exact = true;
  const auto angle_pts = sample_box(20, 0xACCE04);
  for (Tag t : kTags) {
    Rng rng(444);
    for (int i = 0; i < 50; ++i) {
      const CuspSubgroup cusp = random_cusp(t, rng);
      const StandardForm sf = standard_form(cusp);
      const GroupElement hi = inverse(sf.conjugator);
      const GroupElement c1 = compose(compose(sf.conjugator, cusp.g1), hi);
      const GroupElement c2 = compose(compose(sf.conjugator, cusp.g2), hi);
      worst = std::max(worst, action_residual(c1, embed_translation(sf.lattice.b1, t),
                                              action_sample_points()));
      worst = std::max(worst, action_residual(c2, embed_translation(sf.lattice.b2, t),
                                              action_sample_points()));
      if (t == Tag::SL2T) {
        for (const Vec2& v : {sf.lattice.b1, sf.lattice.b2}) {
          const Mat2 m = embed_translation(v, Tag::SL2T).sl2t().m;
          for (const UPoint& p : angle_pts) {
            if (angle_derivative(m, {p.x, p.z}) != 0.0) angles_exact = false;
          }
        }
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max residual %.3e, parabolic angles exactly 0: %s", worst,
                angles_exact ? "yes" : "no");
  report(4, "standard form recovery, 50 cusps per tag", worst < 1e-9 && angles_exact, buf);
}

void criterion_5_cross_group() {
  double worst = 0.0;
  Rng rng(555);
  const auto pts = sample_box(100, 0xACCE05);
  for (int i = 0; i < 25; ++i) {
    const Vec2 v{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const GroupElement ref = embed_translation(v, Tag::AFF);
    for (Tag t : kTags) {
      worst = std::max(worst, action_residual(embed_translation(v, t), ref, pts));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual %.3e", worst);
  report(5, "cross-group wall agreement of embedded translations", worst < 1e-12, buf);
}

void criterion_6_klein() {
  bool ok = true;
  std::string detail;
  try {
    const Lattice2 unit = make_lattice({1.0, 0.0}, {0.0, 1.0});
    const KleinEnd ke = klein_end(unit, {1, 0, 0, -1}, {0.5, 0.0});
    // iota^2 is the lattice translation (1,0)
    ok = ok && acts_identically(compose(ke.involution, ke.involution),
                                embed_translation({1.0, 0.0}, Tag::AFF), 1e-12);
    // exact integer congruence: no fixed points
    ok = ok && klein_congruence_residual(ke.sigma, ke.shift) > 1e-9;
    // 3D orientation +1, invariant torus orientation -1
    const AffineA& f = ke.involution.aff();
    ok = ok && f.eps == -1 && f.linear.det() < 0.0;
    ok = ok && std::abs(f.linear.det() * static_cast<double>(f.eps) - 1.0) < 1e-12;
    // the zero-shift variant must be rejected
    bool rejected = false;
    try {
      klein_end(unit, {1, 0, 0, -1}, {0.0, 0.0});
    } catch (const invalid_involution_error&) {
      rejected = true;
    }
    ok = ok && rejected;
    if (!rejected) detail = "zero shift was not rejected";
  } catch (const error& e) {
    ok = false;
    detail = e.what();
  }
  report(6, "Klein end checks and rejection of the fixed-point variant", ok, detail);
}

void criterion_7_figure_eight(const std::string& cli, const std::string& fixtures) {
  // Longitude oracle: multiply out the word b a b^-1 a^-1 a^-1 b^-1 a b in the
  // standard parabolic generators and check it is upper triangular.
  using C = std::complex<double>;
  using M = std::array<C, 4>;  // row major a b c d
  const auto mul = [](const M& x, const M& y) {
    return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
             x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  const C omega(0.5, 0.5 * std::sqrt(3.0));
  const M a{1.0, 1.0, 0.0, 1.0};
  const M ai{1.0, -1.0, 0.0, 1.0};
  const M b{1.0, 0.0, -omega, 1.0};
  const M bi{1.0, 0.0, omega, 1.0};
  M lon{1.0, 0.0, 0.0, 1.0};
  for (const M* w : {&b, &a, &bi, &ai, &ai, &bi, &a, &b}) lon = mul(lon, *w);
  const bool upper = std::abs(lon[2]) < 1e-9;
  const C translation = lon[1] / lon[0];
  const C expected(0.0, kFig8Longitude);
  const bool matches = std::abs(translation - expected) < 1e-9;

  // End-to-end on the fixture scene through the CLI.
  const std::string scene = fixtures + "/fig8_double.json";
  const std::string tmp =
      (std::filesystem::temp_directory_path() / "liegeom_acceptance_report.json").string();
  const int rc =
      run_cli("\"" + cli + "\" build-verify \"" + scene + "\" --out \"" + tmp + "\"");

  // Combinatorial counts and the collar-loop holonomy commutator in process.
  const GeometryGraph g = fig8_double_graph(0.25);
  const LieGeneratedStructure s = build(g);
  const bool counts = s.regions.size() == 7 && s.walls.size() == 6;
  const bool moduli = moduli_dimension(g) == 3;

  const auto step = [](const char* w, int idx, int sign) {
    PathStep st{w, {}};
    if (idx >= 0) {
      ReductionChoice c;
      c.index = idx;
      c.sign = sign;
      st.reductions.push_back(c);
    }
    return st;
  };
  const PathSpec comm{{step("w0", 0, +1), step("w0", -1, 0), step("w0", 1, +1),
                       step("w0", -1, 0), step("w0", 0, -1), step("w0", -1, 0),
                       step("w0", 1, -1), step("w0", -1, 0)}};
  const Word wc = holonomy(s, comm);
  double worst = 0.0;
  for (const UPoint& p : action_sample_points()) {
    worst = std::max(worst, point_residual(evaluate_word(wc, p), p));
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "longitude oracle %s (upper-tri %s), cli exit %d, regions %zu, walls %zu, "
                "moduli %d, commutator residual %.2e",
                matches ? "ok" : "BAD", upper ? "yes" : "no", rc, s.regions.size(),
                s.walls.size(), moduli_dimension(g), worst);
  report(7, "figure-eight double end to end", upper && matches && rc == 0 && counts &&
                                                  moduli && worst < 1e-9, buf);
}

void criterion_8_fault_injection() {
  bool ok = true;
  std::string detail;
  const GeometryGraph g = fig8_double_graph();
  const LieGeneratedStructure clean = build(g);
  for (std::size_t wi = 0; wi < clean.walls.size() && ok; ++wi) {
    for (std::size_t ri = 0; ri < clean.walls[wi].reductions.size() && ok; ++ri) {
      for (int side = 0; side < 2 && ok; ++side) {
        LieGeneratedStructure s = build(g);
        ReductionGenerator& red = s.walls[wi].reductions[ri];
        GroupElement& rep = side == 0 ? red.rep_a : red.rep_b;
        rep = compose(embed_translation({1e-3, 0.0}, rep.tag()), rep);
        const VerificationReport rep_out = verify(s, 1e-9, 100, 0);
        const std::string want = "reduction:" + s.walls[wi].id;
        bool found = false;
        for (const Check& c : rep_out.checks) {
          if (c.name == want) {
            found = true;
            if (c.pass || c.max_residual < 1e-4 || c.max_residual > 1e-2) {
              ok = false;
              detail = want + " residual " + std::to_string(c.max_residual);
            }
          } else if (c.name.rfind("reduction:", 0) == 0 && !c.pass) {
            ok = false;
            detail = "unrelated check failed: " + c.name;
          }
        }
        if (!found) {
          ok = false;
          detail = "missing check " + want;
        }
      }
    }
  }
  report(8, "fault injection flips exactly the perturbed reduction check", ok, detail);
}

void criterion_9_word_calculus() {
  Rng rng(999);
  const auto pts = sample_box(20, 0xACCE09);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Word w = random_mixed_word(rng, 8);
    const Word r = reduce_word(w);
    for (const UPoint& p : pts) {
      worst = std::max(worst, point_residual(evaluate_word(w, p), evaluate_word(r, p)));
    }
  }
  const Word cancel = reduce_word({{embed_translation({1.0, 0.0}, Tag::H3),
                                    embed_translation({-1.0, 0.0}, Tag::AFF)}});
  char buf[96];
  std::snprintf(buf, sizeof buf, "max evaluation drift %.3e, mixed cancellation %s", worst,
                cancel.letters.empty() ? "empty" : "NOT empty");
  report(9, "word calculus: reduction preserves evaluation", worst < 1e-12 &&
                                                                 cancel.letters.empty(),
         buf);
}

void criterion_10_determinism() {
  const auto run = []() {
    const GeometryGraph g = fig8_double_graph();
    const LieGeneratedStructure s = build(g);
    ReportDocument doc;
    doc.scene = "fig8_double";
    doc.regions = static_cast<int>(s.regions.size());
    doc.intersections = static_cast<int>(s.walls.size());
    doc.moduli = moduli_dimension(g);
    doc.verification = verify(s, 1e-9, 100, 0);
    return render_report(doc);
  };
  const std::string r1 = run();
  const std::string r2 = run();
  report(10, "bit-identical reports for identical seeds", r1 == r2);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli> <fixtures-dir>\n");
    return 2;
  }
  const std::string cli = argv[1];
  const std::string fixtures = argv[2];

  criterion_1_dimensions();
  criterion_2_group_axioms();
  criterion_3_isometry();
  criterion_4_standard_form();
  criterion_5_cross_group();
  criterion_6_klein();
  criterion_7_figure_eight(cli, fixtures);
  criterion_8_fault_injection();
  criterion_9_word_calculus();
  criterion_10_determinism();

  if (g_failures) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}
