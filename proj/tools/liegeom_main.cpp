// liegeom: construct, verify and probe Lie generated geometries on graph
// assembled three-manifold data.
//
// Exit codes: 0 ok, 1 validation failure, 2 verification failure,
// 64 scene parse / usage error, 65 bad loop or point expression.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liegeom/errors.hpp"
#include "liegeom/scene.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitParse = 64;
constexpr int kExitLoop = 65;

liegeom::UPoint parse_point(const std::string& text) {
  liegeom::UPoint p;
  char extra = 0;
  const int n = std::sscanf(text.c_str(), " %lf , %lf , %lf %c", &p.x, &p.y, &p.z, &extra);
  if (n != 3 || !(p.z > 0.0)) {
    throw liegeom::loop_error("--point must be 'x,y,z' with z > 0, got '" + text + "'");
  }
  return p;
}

int cmd_validate(const std::string& path) {
  const liegeom::Scene scene = liegeom::load_scene(path);
  const liegeom::VerificationReport rep = liegeom::validate(scene.graph);
  std::cout << liegeom::render_validation(rep);
  return rep.all_pass() ? 0 : kExitValidation;
}

int cmd_build_verify(const std::string& path, double eps, int samples, long long seed,
                     const std::string& out) {
  const liegeom::Scene scene = liegeom::load_scene(path);
  const liegeom::VerificationReport val = liegeom::validate(scene.graph);
  if (!val.all_pass()) {
    std::cout << liegeom::render_validation(val);
    return kExitValidation;
  }
  const liegeom::LieGeneratedStructure s = liegeom::build(scene.graph);
  liegeom::ReportDocument doc;
  doc.scene = path;
  doc.eps = eps;
  doc.samples = samples;
  doc.seed = seed;
  doc.regions = static_cast<int>(s.regions.size());
  doc.intersections = static_cast<int>(s.walls.size());
  doc.moduli = liegeom::moduli_dimension(scene.graph);
  doc.verification =
      liegeom::verify(s, eps, samples, static_cast<std::uint64_t>(seed));
  const std::string text = liegeom::render_report(doc);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write report to '" << out << "'\n";
      return kExitParse;
    }
    f << text;
  }
  return doc.verification.all_pass() ? 0 : kExitVerification;
}

int cmd_develop(const std::string& path, const std::string& loop_text,
                const std::string& point_text) {
  const liegeom::Scene scene = liegeom::load_scene(path);
  const liegeom::VerificationReport val = liegeom::validate(scene.graph);
  if (!val.all_pass()) {
    std::cout << liegeom::render_validation(val);
    return kExitValidation;
  }
  const liegeom::LieGeneratedStructure s = liegeom::build(scene.graph);
  const liegeom::PathSpec loop = liegeom::parse_loop(loop_text);
  const liegeom::UPoint p = parse_point(point_text);
  liegeom::Word word;
  try {
    word = liegeom::holonomy(s, loop);
  } catch (const liegeom::path_error& e) {
    throw liegeom::loop_error(e.what());
  } catch (const liegeom::index_error& e) {
    throw liegeom::loop_error(e.what());
  }
  std::cout << liegeom::render_word(word);
  std::cout << "image: " << liegeom::render_point(liegeom::evaluate_word(word, p)) << "\n";
  return 0;
}

int cmd_moduli(const std::string& path) {
  const liegeom::Scene scene = liegeom::load_scene(path);
  const liegeom::VerificationReport val = liegeom::validate(scene.graph);
  if (!val.all_pass()) {
    std::cout << liegeom::render_validation(val);
    return kExitValidation;
  }
  std::cout << "moduli_dimension: " << liegeom::moduli_dimension(scene.graph) << "\n";
  for (std::size_t i = 0; i < scene.graph.edges.size(); ++i) {
    const liegeom::EdgeData& e = scene.graph.edges[i];
    char buf[128];
    std::snprintf(buf, sizeof buf, "slide=%.15g offset=[%.15g,%.15g]", e.slide, e.offset.x,
                  e.offset.y);
    std::cout << "edge e" << i << " (" << e.a.vertex << "." << e.a.cusp << " -- " << e.b.vertex
              << "." << e.b.cusp << "): " << buf << " -> 3 parameters\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie generated geometries on compound prime three-manifold data"};
  app.require_subcommand(1);

  std::string scene_path;
  double eps = 1e-9;
  int samples = 100;
  long long seed = 0;
  std::string out;
  std::string loop_text;
  std::string point_text = "0,0,1";

  CLI::App* validate = app.add_subcommand("validate", "check a scene file");
  validate->add_option("scene", scene_path, "scene file")->required();

  CLI::App* build = app.add_subcommand("build-verify", "build the structure and verify it");
  build->add_option("scene", scene_path, "scene file")->required();
  build->add_option("--eps", eps, "verification tolerance");
  build->add_option("--samples", samples, "sample points per check");
  build->add_option("--seed", seed, "sampling seed");
  build->add_option("--out", out, "report output path (default stdout)");

  CLI::App* develop = app.add_subcommand("develop", "holonomy word of a loop");
  develop->add_option("scene", scene_path, "scene file")->required();
  develop->add_option("--loop", loop_text, "loop expression, e.g. \"w0,+t0,w0\"");
  develop->add_option("--point", point_text, "base point x,y,z");

  CLI::App* moduli = app.add_subcommand("moduli", "moduli dimension and parameter list");
  moduli->add_option("scene", scene_path, "scene file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (validate->parsed()) return cmd_validate(scene_path);
    if (build->parsed()) return cmd_build_verify(scene_path, eps, samples, seed, out);
    if (develop->parsed()) return cmd_develop(scene_path, loop_text, point_text);
    if (moduli->parsed()) return cmd_moduli(scene_path);
  } catch (const liegeom::parse_error& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const liegeom::loop_error& e) {
    std::cerr << e.what() << "\n";
    return kExitLoop;
  } catch (const liegeom::error& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }
  return kExitParse;
}
