#include "liegeom/scene.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "liegeom/errors.hpp"

namespace liegeom {

namespace {

using nljson = nlohmann::json;

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
  throw parse_error("scene: " + ctx + ": " + what);
}

void check_keys(const nljson& j, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(ctx, "unknown key '" + it.key() + "'");
  }
}

const nljson& get(const nljson& j, const char* key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end()) fail(ctx, std::string("missing key '") + key + "'");
  return *it;
}

double num(const nljson& j, const std::string& ctx) {
  if (!j.is_number()) fail(ctx, "expected a number");
  return j.get<double>();
}

long long inum(const nljson& j, const std::string& ctx) {
  if (!j.is_number_integer()) fail(ctx, "expected an integer");
  return j.get<long long>();
}

std::string str(const nljson& j, const std::string& ctx) {
  if (!j.is_string()) fail(ctx, "expected a string");
  return j.get<std::string>();
}

const nljson& arr(const nljson& j, std::size_t n, const std::string& ctx) {
  if (!j.is_array() || j.size() != n) {
    fail(ctx, "expected an array of length " + std::to_string(n));
  }
  return j;
}

cplx parse_complex(const nljson& j, const std::string& ctx) {
  arr(j, 2, ctx);
  return {num(j[0], ctx + "[0]"), num(j[1], ctx + "[1]")};
}

Vec2 parse_vec2(const nljson& j, const std::string& ctx) {
  arr(j, 2, ctx);
  return {num(j[0], ctx + "[0]"), num(j[1], ctx + "[1]")};
}

Mat2 parse_mat2(const nljson& j, const std::string& ctx) {
  arr(j, 2, ctx);
  const Vec2 r0 = parse_vec2(j[0], ctx + "[0]");
  const Vec2 r1 = parse_vec2(j[1], ctx + "[1]");
  return {r0.x, r0.y, r1.x, r1.y};
}

IMat2 parse_imat2(const nljson& j, const std::string& ctx) {
  arr(j, 2, ctx);
  arr(j[0], 2, ctx + "[0]");
  arr(j[1], 2, ctx + "[1]");
  return {inum(j[0][0], ctx), inum(j[0][1], ctx), inum(j[1][0], ctx), inum(j[1][1], ctx)};
}

GroupElement parse_generator(const nljson& j, Tag tag, const std::string& ctx) {
  try {
    switch (tag) {
      case Tag::H3: {
        arr(j, 4, ctx);
        return make_h3(parse_complex(j[0], ctx + ".a"), parse_complex(j[1], ctx + ".b"),
                       parse_complex(j[2], ctx + ".c"), parse_complex(j[3], ctx + ".d"));
      }
      case Tag::H2R: {
        if (!j.is_object()) fail(ctx, "expected an object {m, s}");
        check_keys(j, ctx, {"m", "s"});
        return make_h2r(parse_mat2(get(j, "m", ctx), ctx + ".m"),
                        num(get(j, "s", ctx), ctx + ".s"));
      }
      case Tag::SL2T: {
        if (!j.is_object()) fail(ctx, "expected an object {m, theta}");
        check_keys(j, ctx, {"m", "theta"});
        return make_sl2t(parse_mat2(get(j, "m", ctx), ctx + ".m"), 0,
                         num(get(j, "theta", ctx), ctx + ".theta"));
      }
      case Tag::AFF: {
        if (!j.is_object()) fail(ctx, "expected an object {linear, eps, translation}");
        check_keys(j, ctx, {"linear", "eps", "translation"});
        const nljson& t = arr(get(j, "translation", ctx), 3, ctx + ".translation");
        return make_affine(parse_mat2(get(j, "linear", ctx), ctx + ".linear"),
                           static_cast<int>(inum(get(j, "eps", ctx), ctx + ".eps")),
                           {num(t[0], ctx), num(t[1], ctx), num(t[2], ctx)});
      }
    }
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    fail(ctx, e.what());
  }
  fail(ctx, "bad tag");
}

EndRef parse_endref(const nljson& j, const std::string& ctx) {
  const std::string s = str(j, ctx);
  const auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= s.size()) {
    fail(ctx, "endpoint reference must have the form 'vertexid.cuspid', got '" + s + "'");
  }
  return {s.substr(0, dot), s.substr(dot + 1)};
}

PieceDecoration parse_vertex(const nljson& j, const std::string& ctx) {
  if (!j.is_object()) fail(ctx, "expected an object");
  PieceDecoration v;
  v.id = str(get(j, "id", ctx), ctx + ".id");
  if (v.id.empty() || v.id.find('.') != std::string::npos) {
    fail(ctx, "vertex id must be nonempty and must not contain '.'");
  }
  const std::string kind = str(get(j, "kind", ctx), ctx + ".kind");
  if (kind == "elemental") {
    v.kind = PieceDecoration::Kind::Elemental;
    check_keys(j, ctx, {"id", "kind", "tag", "cusps", "holonomy_generators"});
    const std::string tag = str(get(j, "tag", ctx), ctx + ".tag");
    const auto t = tag_from_name(tag);
    if (!t) fail(ctx, "unknown tag '" + tag + "'");
    v.tag = *t;
    const nljson& cusps = get(j, "cusps", ctx);
    if (!cusps.is_array()) fail(ctx, "'cusps' must be an array");
    for (std::size_t i = 0; i < cusps.size(); ++i) {
      const std::string cctx = ctx + ".cusps[" + std::to_string(i) + "]";
      const nljson& cj = cusps[i];
      if (!cj.is_object()) fail(cctx, "expected an object");
      check_keys(cj, cctx, {"id", "generators"});
      CuspData c;
      c.id = str(get(cj, "id", cctx), cctx + ".id");
      if (c.id.empty()) fail(cctx, "cusp id must be nonempty");
      const nljson& gens = arr(get(cj, "generators", cctx), 2, cctx + ".generators");
      c.group.g1 = parse_generator(gens[0], v.tag, cctx + ".generators[0]");
      c.group.g2 = parse_generator(gens[1], v.tag, cctx + ".generators[1]");
      v.cusps.push_back(std::move(c));
    }
    if (j.contains("holonomy_generators")) {
      const nljson& hol = get(j, "holonomy_generators", ctx);
      if (!hol.is_array()) fail(ctx, "'holonomy_generators' must be an array");
      for (std::size_t i = 0; i < hol.size(); ++i) {
        v.holonomy_generators.push_back(
            parse_generator(hol[i], v.tag, ctx + ".holonomy_generators[" + std::to_string(i) + "]"));
      }
    }
  } else if (kind == "klein") {
    v.kind = PieceDecoration::Kind::Klein;
    check_keys(j, ctx, {"id", "kind", "lattice", "sigma", "shift"});
    const nljson& lat = arr(get(j, "lattice", ctx), 2, ctx + ".lattice");
    try {
      v.lattice = make_lattice(parse_vec2(lat[0], ctx + ".lattice[0]"),
                               parse_vec2(lat[1], ctx + ".lattice[1]"));
    } catch (const error& e) {
      fail(ctx + ".lattice", e.what());
    }
    v.sigma = parse_imat2(get(j, "sigma", ctx), ctx + ".sigma");
    v.shift = parse_vec2(get(j, "shift", ctx), ctx + ".shift");
  } else {
    fail(ctx, "kind must be 'elemental' or 'klein', got '" + kind + "'");
  }
  return v;
}

EdgeData parse_edge(const nljson& j, const std::string& ctx) {
  if (!j.is_object()) fail(ctx, "expected an object");
  check_keys(j, ctx, {"from", "to", "class", "slide", "offset"});
  EdgeData e;
  e.a = parse_endref(get(j, "from", ctx), ctx + ".from");
  e.b = parse_endref(get(j, "to", ctx), ctx + ".to");
  e.cls = parse_imat2(get(j, "class", ctx), ctx + ".class");
  if (j.contains("slide")) e.slide = num(j["slide"], ctx + ".slide");
  if (j.contains("offset")) e.offset = parse_vec2(j["offset"], ctx + ".offset");
  if (!std::isfinite(e.slide)) fail(ctx, "slide must be finite");
  return e;
}

}  // namespace

Scene parse_scene_text(const std::string& text) {
  nljson j;
  try {
    j = nljson::parse(text);
  } catch (const nljson::exception& e) {
    throw parse_error(std::string("scene: ") + e.what());
  }
  if (!j.is_object()) fail("root", "expected an object");
  check_keys(j, "root", {"version", "vertices", "edges"});
  Scene scene;
  scene.version = static_cast<int>(inum(get(j, "version", "root"), "root.version"));
  if (scene.version != 1) fail("root.version", "unsupported version (expected 1)");
  const nljson& verts = get(j, "vertices", "root");
  if (!verts.is_array()) fail("root.vertices", "expected an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    scene.graph.vertices.push_back(
        parse_vertex(verts[i], "vertices[" + std::to_string(i) + "]"));
  }
  if (j.contains("edges")) {
    const nljson& edges = j["edges"];
    if (!edges.is_array()) fail("root.edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      scene.graph.edges.push_back(parse_edge(edges[i], "edges[" + std::to_string(i) + "]"));
    }
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("scene: cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene_text(ss.str());
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string emit_vec2(const Vec2& v) { return "[" + fmt(v.x) + "," + fmt(v.y) + "]"; }

std::string emit_cplx(const cplx& z) { return "[" + fmt(z.real()) + "," + fmt(z.imag()) + "]"; }

std::string emit_mat2(const Mat2& m) {
  return "[[" + fmt(m.m00) + "," + fmt(m.m01) + "],[" + fmt(m.m10) + "," + fmt(m.m11) + "]]";
}

std::string emit_imat2(const IMat2& m) {
  return "[[" + std::to_string(m.m00) + "," + std::to_string(m.m01) + "],[" +
         std::to_string(m.m10) + "," + std::to_string(m.m11) + "]]";
}

std::string emit_generator(const GroupElement& g) {
  switch (g.tag()) {
    case Tag::H3: {
      const MoebiusC& m = g.h3();
      return "[" + emit_cplx(m.a) + "," + emit_cplx(m.b) + "," + emit_cplx(m.c) + "," +
             emit_cplx(m.d) + "]";
    }
    case Tag::H2R: {
      const IsomH2R& f = g.h2r();
      return "{\"m\": " + emit_mat2(f.m) + ", \"s\": " + fmt(f.s) + "}";
    }
    case Tag::SL2T: {
      const FiberedIsom& f = g.sl2t();
      return "{\"m\": " + emit_mat2(f.m) + ", \"theta\": " + fmt(f.theta) + "}";
    }
    case Tag::AFF: {
      const AffineA& f = g.aff();
      return "{\"linear\": " + emit_mat2(f.linear) + ", \"eps\": " + std::to_string(f.eps) +
             ", \"translation\": [" + fmt(f.b.x) + "," + fmt(f.b.y) + "," + fmt(f.b.z) + "]}";
    }
  }
  return "null";
}

}  // namespace

std::string serialize_scene(const Scene& scene) {
  std::string out = "{\n  \"version\": " + std::to_string(scene.version) +
                    ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < scene.graph.vertices.size(); ++i) {
    const PieceDecoration& v = scene.graph.vertices[i];
    out += (i ? ",\n    {" : "\n    {");
    out += "\n      \"id\": \"" + json_escape(v.id) + "\",";
    if (v.kind == PieceDecoration::Kind::Elemental) {
      out += "\n      \"kind\": \"elemental\",";
      out += std::string("\n      \"tag\": \"") + tag_name(v.tag) + "\",";
      out += "\n      \"cusps\": [";
      for (std::size_t c = 0; c < v.cusps.size(); ++c) {
        const CuspData& cusp = v.cusps[c];
        out += (c ? ",\n        {" : "\n        {");
        out += "\n          \"id\": \"" + json_escape(cusp.id) + "\",";
        out += "\n          \"generators\": [";
        out += "\n            " + emit_generator(cusp.group.g1) + ",";
        out += "\n            " + emit_generator(cusp.group.g2);
        out += "\n          ]";
        out += "\n        }";
      }
      out += v.cusps.empty() ? "]" : "\n      ]";
      if (!v.holonomy_generators.empty()) {
        out += ",\n      \"holonomy_generators\": [";
        for (std::size_t h = 0; h < v.holonomy_generators.size(); ++h) {
          out += (h ? ",\n        " : "\n        ") + emit_generator(v.holonomy_generators[h]);
        }
        out += "\n      ]";
      }
    } else {
      out += "\n      \"kind\": \"klein\",";
      out += "\n      \"lattice\": [" + emit_vec2(v.lattice.b1) + "," + emit_vec2(v.lattice.b2) +
             "],";
      out += "\n      \"sigma\": " + emit_imat2(v.sigma) + ",";
      out += "\n      \"shift\": " + emit_vec2(v.shift);
    }
    out += "\n    }";
  }
  out += scene.graph.vertices.empty() ? "]" : "\n  ]";
  out += ",\n  \"edges\": [";
  for (std::size_t i = 0; i < scene.graph.edges.size(); ++i) {
    const EdgeData& e = scene.graph.edges[i];
    out += (i ? ",\n    {" : "\n    {");
    out += "\n      \"from\": \"" + json_escape(e.a.vertex + "." + e.a.cusp) + "\",";
    out += "\n      \"to\": \"" + json_escape(e.b.vertex + "." + e.b.cusp) + "\",";
    out += "\n      \"class\": " + emit_imat2(e.cls) + ",";
    out += "\n      \"slide\": " + fmt(e.slide) + ",";
    out += "\n      \"offset\": " + emit_vec2(e.offset);
    out += "\n    }";
  }
  out += scene.graph.edges.empty() ? "]" : "\n  ]";
  out += "\n}\n";
  return out;
}

std::string render_report(const ReportDocument& doc) {
  std::string out = "{\n";
  out += "  \"scene\": \"" + json_escape(doc.scene) + "\",\n";
  out += "  \"eps\": " + fmt(doc.eps) + ",\n";
  out += "  \"samples\": " + std::to_string(doc.samples) + ",\n";
  out += "  \"seed\": " + std::to_string(doc.seed) + ",\n";
  out += "  \"build\": {\n";
  out += "    \"regions\": " + std::to_string(doc.regions) + ",\n";
  out += "    \"intersections\": " + std::to_string(doc.intersections) + ",\n";
  out += "    \"moduli_dimension\": " + std::to_string(doc.moduli) + "\n";
  out += "  },\n";
  out += "  \"checks\": [";
  for (std::size_t i = 0; i < doc.verification.checks.size(); ++i) {
    const Check& c = doc.verification.checks[i];
    out += (i ? ",\n    {" : "\n    {");
    out += "\n      \"name\": \"" + json_escape(c.name) + "\",";
    out += std::string("\n      \"status\": \"") + (c.pass ? "pass" : "fail") + "\",";
    out += "\n      \"max_residual\": " + fmt(c.max_residual) + ",";
    out += "\n      \"detail\": \"" + json_escape(c.detail) + "\"";
    out += "\n    }";
  }
  out += doc.verification.checks.empty() ? "]" : "\n  ]";
  out += ",\n  \"overall\": \"";
  out += doc.verification.all_pass() ? "pass" : "fail";
  out += "\"\n}\n";
  return out;
}

std::string render_validation(const VerificationReport& rep) {
  std::string out;
  for (const Check& c : rep.checks) {
    out += c.pass ? "[pass] " : "[FAIL] ";
    out += c.name;
    if (!c.pass && !c.detail.empty()) out += " - " + c.detail;
    out += "\n";
  }
  out += std::string("validation: ") + (rep.all_pass() ? "pass" : "fail") + "\n";
  return out;
}

namespace {

std::string render_letter(const GroupElement& g) {
  switch (g.tag()) {
    case Tag::H3: {
      const MoebiusC& m = g.h3();
      return std::string("H3 a=[") + fmt15(m.a.real()) + "," + fmt15(m.a.imag()) + "] b=[" +
             fmt15(m.b.real()) + "," + fmt15(m.b.imag()) + "] c=[" + fmt15(m.c.real()) + "," +
             fmt15(m.c.imag()) + "] d=[" + fmt15(m.d.real()) + "," + fmt15(m.d.imag()) + "]";
    }
    case Tag::AFF: {
      const AffineA& f = g.aff();
      return std::string("AFF linear=[[") + fmt15(f.linear.m00) + "," + fmt15(f.linear.m01) +
             "],[" + fmt15(f.linear.m10) + "," + fmt15(f.linear.m11) + "]] eps=" +
             std::to_string(f.eps) + " b=[" + fmt15(f.b.x) + "," + fmt15(f.b.y) + "," +
             fmt15(f.b.z) + "]";
    }
    case Tag::H2R: {
      const IsomH2R& f = g.h2r();
      return std::string("H2R m=[[") + fmt15(f.m.m00) + "," + fmt15(f.m.m01) + "],[" +
             fmt15(f.m.m10) + "," + fmt15(f.m.m11) + "]] s=" + fmt15(f.s);
    }
    case Tag::SL2T: {
      const FiberedIsom& f = g.sl2t();
      return std::string("SL2T m=[[") + fmt15(f.m.m00) + "," + fmt15(f.m.m01) + "],[" +
             fmt15(f.m.m10) + "," + fmt15(f.m.m11) + "]] theta=" + fmt15(f.theta);
    }
  }
  return "?";
}

}  // namespace

std::string render_word(const Word& w) {
  if (w.letters.empty()) return "word: identity (0 letters)\n";
  std::string out = "word: " + std::to_string(w.letters.size()) + " letter(s)\n";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out += "letter " + std::to_string(i) + ": " + render_letter(w.letters[i]) + "\n";
  }
  return out;
}

std::string render_point(const UPoint& p) {
  return "(" + fmt15(p.x) + ", " + fmt15(p.y) + ", " + fmt15(p.z) + ")";
}

PathSpec parse_loop(const std::string& text) {
  PathSpec path;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    // trim
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (!tok.empty()) {
      if (tok[0] == 'w') {
        path.steps.push_back(PathStep{tok, {}});
      } else if ((tok[0] == '+' || tok[0] == '-') && tok.size() > 2 && tok[1] == 't') {
        if (path.steps.empty()) {
          throw loop_error("loop: reduction token '" + tok +
                           "' must follow a wall crossing token (grammar: w<k>,+t<i>,...)");
        }
        const std::string idx = tok.substr(2);
        for (char ch : idx) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw loop_error("loop: bad reduction index in token '" + tok + "'");
          }
        }
        ReductionChoice choice;
        choice.index = std::stoi(idx);
        choice.sign = (tok[0] == '+') ? 1 : -1;
        path.steps.back().reductions.push_back(choice);
      } else {
        throw loop_error("loop: bad token '" + tok +
                         "' (grammar: comma separated w<wall>, +t<i>, -t<i>)");
      }
    }
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return path;
}

}  // namespace liegeom
