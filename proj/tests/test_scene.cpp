#include <doctest.h>

#include "liegeom/errors.hpp"
#include "liegeom/scene.hpp"
#include "support.hpp"

using namespace liegeom;
using namespace liegeom::testsupport;

namespace {

const char* kMinimalScene = R"({
  "version": 1,
  "vertices": [
    {"id": "v1", "kind": "elemental", "tag": "H3",
     "cusps": [{"id": "c0", "generators": [
        [[1,0],[1,0],[0,0],[1,0]],
        [[1,0],[0,3.4641016151377544],[0,0],[1,0]]
     ]}]},
    {"id": "k1", "kind": "klein",
     "lattice": [[1,0],[0,1]], "sigma": [[1,0],[0,-1]], "shift": [0.5,0]}
  ],
  "edges": [
    {"from": "v1.c0", "to": "k1.end", "class": [[0,1],[1,0]], "slide": 0.25}
  ]
})";

}  // namespace

TEST_CASE("scene parsing builds the graph") {
  const Scene s = parse_scene_text(kMinimalScene);
  CHECK(s.version == 1);
  REQUIRE(s.graph.vertices.size() == 2);
  CHECK(s.graph.vertices[0].kind == PieceDecoration::Kind::Elemental);
  CHECK(s.graph.vertices[0].tag == Tag::H3);
  REQUIRE(s.graph.vertices[0].cusps.size() == 1);
  CHECK(s.graph.vertices[1].kind == PieceDecoration::Kind::Klein);
  REQUIRE(s.graph.edges.size() == 1);
  CHECK(s.graph.edges[0].slide == 0.25);
  CHECK(s.graph.edges[0].cls.det() == -1);
  CHECK(validate(s.graph).all_pass());
}

TEST_CASE("canonical serialization is a byte-identical fixed point") {
  const Scene s = parse_scene_text(kMinimalScene);
  const std::string e1 = serialize_scene(s);
  const std::string e2 = serialize_scene(parse_scene_text(e1));
  CHECK(e1 == e2);

  // also through every tag of generator encoding, with generic random
  // holonomy generators whose determinants carry roundoff
  Rng rng(3);
  Scene mixed;
  int counter = 0;
  for (Tag t : {Tag::H3, Tag::H2R, Tag::SL2T}) {
    PieceDecoration v;
    v.id = "p" + std::to_string(counter++);
    v.kind = PieceDecoration::Kind::Elemental;
    v.tag = t;
    CuspData c;
    c.id = "c0";
    c.group = CuspSubgroup{embed_translation({1.25, 0.5}, t),
                           embed_translation({0.0, 2.0}, t)};
    v.cusps.push_back(c);
    for (int i = 0; i < 5; ++i) {
      v.holonomy_generators.push_back(random_element(t, rng));
      v.holonomy_generators.push_back(
          compose(random_element(t, rng), random_element(t, rng)));
    }
    mixed.graph.vertices.push_back(v);
  }
  const std::string m1 = serialize_scene(mixed);
  const std::string m2 = serialize_scene(parse_scene_text(m1));
  CHECK(m1 == m2);
  const std::string m3 = serialize_scene(parse_scene_text(m2));
  CHECK(m2 == m3);
}

TEST_CASE("strict schema: unknown keys, bad types, bad version") {
  CHECK_THROWS_AS(parse_scene_text("{"), parse_error);
  CHECK_THROWS_AS(parse_scene_text(R"({"version": 2, "vertices": []})"), parse_error);
  CHECK_THROWS_AS(parse_scene_text(R"({"version": 1, "vertices": [], "extra": 0})"),
                  parse_error);
  CHECK_THROWS_AS(
      parse_scene_text(
          R"({"version": 1, "vertices": [{"id": "a", "kind": "elemental", "tag": "H3",
               "cusps": [], "typo": 1}]})"),
      parse_error);
  // malformed numeric field
  CHECK_THROWS_AS(
      parse_scene_text(
          R"({"version": 1, "vertices": [], "edges": [{"from": "a.b", "to": "c.d",
               "class": [[0,1],[1,0]], "slide": "fast"}]})"),
      parse_error);
  // class entries must be integers
  CHECK_THROWS_AS(
      parse_scene_text(
          R"({"version": 1, "vertices": [], "edges": [{"from": "a.b", "to": "c.d",
               "class": [[0,1.5],[1,0]]}]})"),
      parse_error);
  // endpoint grammar
  CHECK_THROWS_AS(
      parse_scene_text(
          R"({"version": 1, "vertices": [], "edges": [{"from": "ab", "to": "c.d",
               "class": [[0,1],[1,0]]}]})"),
      parse_error);
  // singular generator matrix
  CHECK_THROWS_AS(
      parse_scene_text(
          R"({"version": 1, "vertices": [{"id": "a", "kind": "elemental", "tag": "H3",
               "cusps": [{"id": "c", "generators": [
                 [[0,0],[0,0],[0,0],[0,0]],
                 [[1,0],[1,0],[0,0],[1,0]]]}]}]})"),
      parse_error);
}

TEST_CASE("report rendering is deterministic and stable") {
  const Scene s = parse_scene_text(kMinimalScene);
  const LieGeneratedStructure st = build(s.graph);
  ReportDocument doc;
  doc.scene = "scene.json";
  doc.regions = static_cast<int>(st.regions.size());
  doc.intersections = static_cast<int>(st.walls.size());
  doc.moduli = moduli_dimension(s.graph);
  doc.verification = verify(st, 1e-9, 100, 0);
  const std::string r1 = render_report(doc);
  doc.verification = verify(st, 1e-9, 100, 0);
  const std::string r2 = render_report(doc);
  CHECK(r1 == r2);
  CHECK(r1.find("\"overall\": \"pass\"") != std::string::npos);
  CHECK(r1.find("\"moduli_dimension\": 3") != std::string::npos);
}

TEST_CASE("loop grammar") {
  const PathSpec p = parse_loop("w3,+t1,w3");
  REQUIRE(p.steps.size() == 2);
  CHECK(p.steps[0].wall == "w3");
  REQUIRE(p.steps[0].reductions.size() == 1);
  CHECK(p.steps[0].reductions[0].index == 1);
  CHECK(p.steps[0].reductions[0].sign == 1);
  CHECK(p.steps[1].wall == "w3");
  CHECK(p.steps[1].reductions.empty());

  CHECK(parse_loop("").steps.empty());
  CHECK(parse_loop(" w0 , -t0 ").steps[0].reductions[0].sign == -1);
  CHECK_THROWS_AS(parse_loop("+t0"), loop_error);
  CHECK_THROWS_AS(parse_loop("w0,banana"), loop_error);
  CHECK_THROWS_AS(parse_loop("w0,+tX"), loop_error);
}

TEST_CASE("word and point rendering") {
  CHECK(render_word({}) == "word: identity (0 letters)\n");
  const Word w{{embed_translation({1.0, 0.0}, Tag::AFF)}};
  const std::string text = render_word(w);
  CHECK(text.find("AFF") != std::string::npos);
  CHECK(render_point({0.5, 0.0, 1.0}) == "(0.5, 0, 1)");
}
