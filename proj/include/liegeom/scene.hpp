#ifndef LIEGEOM_SCENE_HPP_
#define LIEGEOM_SCENE_HPP_

#include <string>

#include "liegeom/assembly.hpp"
#include "liegeom/developing.hpp"

namespace liegeom {

// Parsed scene file (schema version 1).  The parser is strict: unknown keys,
// wrong types, and malformed numbers are errors.
struct Scene {
  int version = 1;
  GeometryGraph graph;
};

Scene parse_scene_text(const std::string& text);
Scene load_scene(const std::string& path);

// Canonical serialization: stable key order, reals with 17 significant digits.
// Emitting a parsed scene is idempotent byte for byte.
std::string serialize_scene(const Scene& scene);

struct ReportDocument {
  std::string scene;
  double eps = 1e-9;
  int samples = 100;
  long long seed = 0;
  int regions = 0;
  int intersections = 0;
  int moduli = 0;
  VerificationReport verification;
};

// Structured report with a stable field order; bit-identical for identical
// input and seed.
std::string render_report(const ReportDocument& doc);

// Plain-text rendering of a validation report, one line per check.
std::string render_validation(const VerificationReport& rep);

// Holonomy word and point rendering with 15 significant digits.
std::string render_word(const Word& w);
std::string render_point(const UPoint& p);

// Loop grammar: comma separated tokens; "w3" crosses wall w3, "+t1"/"-t1"
// applies the signed reduction generator t1 after the previous crossing.
PathSpec parse_loop(const std::string& text);

}  // namespace liegeom

#endif  // LIEGEOM_SCENE_HPP_
