#include "liegeom/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "liegeom/errors.hpp"

namespace liegeom {

namespace {

constexpr double kCollarHalfwidth = 1.0;

bool is_hyperbolic_type(Tag t) { return t == Tag::H3 || t == Tag::H2R || t == Tag::SL2T; }

std::string end_key(const EndRef& e) { return e.vertex + "." + e.cusp; }

const PieceDecoration* find_vertex(const GeometryGraph& g, const std::string& id) {
  for (const auto& v : g.vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const CuspData* find_cusp(const PieceDecoration& v, const std::string& id) {
  for (const auto& c : v.cusps) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void add_check(VerificationReport* rep, const std::string& name, bool pass,
               double residual, const std::string& detail) {
  rep->checks.push_back({name, pass, residual, detail});
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerificationReport validate(const GeometryGraph& g) {
  VerificationReport rep;

  // endpoint references
  std::vector<std::string> bad_refs;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (const EndRef* e : {&g.edges[i].a, &g.edges[i].b}) {
      const PieceDecoration* v = find_vertex(g, e->vertex);
      if (v == nullptr) {
        bad_refs.push_back("edge e" + std::to_string(i) + ": unknown vertex '" + e->vertex + "'");
        continue;
      }
      if (v->kind == PieceDecoration::Kind::Klein) {
        if (e->cusp != "end") {
          bad_refs.push_back("edge e" + std::to_string(i) + ": Klein vertex '" + e->vertex +
                             "' has the single attachment point 'end'");
        }
      } else if (find_cusp(*v, e->cusp) == nullptr) {
        bad_refs.push_back("edge e" + std::to_string(i) + ": vertex '" + e->vertex +
                           "' has no cusp '" + e->cusp + "'");
      }
    }
  }
  add_check(&rep, "graph:references", bad_refs.empty(), 0.0, join(bad_refs));

  // duplicate ids
  std::vector<std::string> dups;
  std::set<std::string> seen;
  for (const auto& v : g.vertices) {
    if (!seen.insert(v.id).second) dups.push_back("duplicate vertex id '" + v.id + "'");
    std::set<std::string> cusp_seen;
    for (const auto& c : v.cusps) {
      if (!cusp_seen.insert(c.id).second) {
        dups.push_back("vertex '" + v.id + "': duplicate cusp id '" + c.id + "'");
      }
    }
  }
  add_check(&rep, "graph:unique-ids", dups.empty(), 0.0, join(dups));

  // cusp matching: every cusp of every elemental vertex matched by exactly one
  // endpoint; Klein vertices are univalent.
  std::map<std::string, int> uses;
  for (const auto& e : g.edges) {
    uses[end_key(e.a)]++;
    uses[end_key(e.b)]++;
  }
  std::vector<std::string> match_fail;
  for (const auto& v : g.vertices) {
    if (v.kind == PieceDecoration::Kind::Elemental) {
      for (const auto& c : v.cusps) {
        const int n = uses.count(v.id + "." + c.id) ? uses[v.id + "." + c.id] : 0;
        if (n != 1) {
          match_fail.push_back("cusp " + v.id + "." + c.id + " is matched by " +
                               std::to_string(n) + " edge endpoints (needs exactly 1)");
        }
      }
    } else {
      const int n = uses.count(v.id + ".end") ? uses[v.id + ".end"] : 0;
      if (n != 1) {
        match_fail.push_back("Klein vertex " + v.id + " must be univalent, found " +
                             std::to_string(n) + " endpoints");
      }
    }
  }
  add_check(&rep, "graph:cusp-matching", match_fail.empty(), 0.0, join(match_fail));

  // connectivity over vertices
  std::vector<std::string> conn_fail;
  if (g.vertices.empty()) {
    conn_fail.push_back("graph has no vertices");
  } else {
    std::set<std::string> reached;
    std::vector<std::string> queue{g.vertices.front().id};
    reached.insert(g.vertices.front().id);
    while (!queue.empty()) {
      const std::string cur = queue.back();
      queue.pop_back();
      for (const auto& e : g.edges) {
        const std::string other = (e.a.vertex == cur) ? e.b.vertex
                                 : (e.b.vertex == cur) ? e.a.vertex
                                                       : "";
        if (!other.empty() && reached.insert(other).second) queue.push_back(other);
      }
    }
    for (const auto& v : g.vertices) {
      if (!reached.count(v.id)) {
        conn_fail.push_back("vertex '" + v.id + "' is not connected to '" +
                            g.vertices.front().id + "'");
      }
    }
  }
  add_check(&rep, "graph:connected", conn_fail.empty(), 0.0, join(conn_fail));

  // orientation convention per edge
  std::vector<std::string> orient_fail;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const long long d = g.edges[i].cls.det();
    if (d != -1) {
      orient_fail.push_back("edge e" + std::to_string(i) + ": det(class) = " +
                            std::to_string(d) +
                            ", must be -1 (the collar identification reflects the third "
                            "coordinate, so the torus class must reverse orientation)");
    }
  }
  add_check(&rep, "graph:edge-orientation", orient_fail.empty(), 0.0, join(orient_fail));

  // piece tags and Klein data
  std::vector<std::string> tag_fail;
  for (const auto& v : g.vertices) {
    if (v.kind == PieceDecoration::Kind::Elemental) {
      if (!is_hyperbolic_type(v.tag)) {
        tag_fail.push_back("vertex '" + v.id +
                           "': elemental pieces must carry a hyperbolic-type tag "
                           "(H3, H2R or SL2T)");
      }
      for (const auto& h : v.holonomy_generators) {
        if (h.tag() != v.tag) {
          tag_fail.push_back("vertex '" + v.id + "': holonomy generator tag " +
                             tag_name(h.tag()) + " does not match piece tag " +
                             tag_name(v.tag));
        }
      }
      for (const auto& c : v.cusps) {
        if (c.group.g1.tag() != v.tag || c.group.g2.tag() != v.tag) {
          tag_fail.push_back("vertex '" + v.id + "': cusp '" + c.id +
                             "' generators do not carry the piece tag");
        }
      }
    } else {
      try {
        klein_end(normalize(v.lattice, Tag::AFF).lattice, v.sigma, v.shift);
      } catch (const error& err) {
        tag_fail.push_back("vertex '" + v.id + "': " + err.what());
      }
    }
  }
  add_check(&rep, "graph:piece-data", tag_fail.empty(), 0.0, join(tag_fail));

  // cusp standard form
  std::vector<std::string> cusp_fail;
  for (const auto& v : g.vertices) {
    if (v.kind != PieceDecoration::Kind::Elemental) continue;
    for (const auto& c : v.cusps) {
      try {
        standard_form(c.group);
      } catch (const error& err) {
        cusp_fail.push_back("cusp " + v.id + "." + c.id + ": " + err.what());
      }
    }
  }
  add_check(&rep, "graph:cusp-standard-form", cusp_fail.empty(), 0.0, join(cusp_fail));

  return rep;
}

int moduli_dimension(const GeometryGraph& g) {
  return 3 * static_cast<int>(g.edges.size());
}

const RegionRecord* LieGeneratedStructure::find_region(const std::string& id) const {
  for (const auto& r : regions) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const WallRecord* LieGeneratedStructure::find_wall(const std::string& id) const {
  for (const auto& w : walls) {
    if (w.id == id) return &w;
  }
  return nullptr;
}

namespace {

struct CuspSite {
  EndAttachment attachment;
  GroupElement chart;  // total conjugator: original piece coordinates -> wall coordinates
  Tag tag = Tag::H3;
};

std::vector<ReductionGenerator> lattice_reductions(const Lattice2& lat, Tag tag_a, Tag tag_b) {
  std::vector<ReductionGenerator> out;
  for (const Vec2& v : {lat.b1, lat.b2}) {
    out.push_back({v, embed_translation(v, tag_a), embed_translation(v, tag_b)});
  }
  return out;
}

}  // namespace

LieGeneratedStructure build(const GeometryGraph& g) {
  const VerificationReport val = validate(g);
  if (!val.all_pass()) {
    for (const auto& c : val.checks) {
      if (!c.pass) throw build_error("build: " + c.name + " failed: " + c.detail);
    }
  }

  LieGeneratedStructure s;

  // Attachments for every matched cusp, keyed by endpoint.
  std::map<std::string, CuspSite> sites;
  for (const auto& v : g.vertices) {
    if (v.kind != PieceDecoration::Kind::Elemental) continue;
    for (const auto& c : v.cusps) {
      CuspSite site;
      site.attachment = attach_cylinder(c.group, kCollarHalfwidth, v.id, c.id);
      site.chart = cusp_chart_conjugator(v.tag, site.attachment);
      site.tag = v.tag;
      sites.emplace(v.id + "." + c.id, site);
    }
  }

  // Piece regions.  The base chart of a piece is the wall chart of its first
  // cusp, so that wall's transition is exactly the identity; stored generators
  // are conjugated into that chart.
  std::map<std::string, GroupElement> base_chart;
  for (const auto& v : g.vertices) {
    if (v.kind != PieceDecoration::Kind::Elemental) continue;
    GroupElement base = identity(v.tag);
    if (!v.cusps.empty()) base = sites.at(v.id + "." + v.cusps.front().id).chart;
    base_chart.emplace(v.id, base);

    RegionRecord region;
    region.id = "piece:" + v.id;
    region.tag = v.tag;
    region.provenance = v.id;
    const GroupElement base_inv = inverse(base);
    for (const auto& c : v.cusps) {
      const GroupElement g1 = compose(compose(base, c.group.g1), base_inv);
      const GroupElement g2 = compose(compose(base, c.group.g2), base_inv);
      region.generators.push_back(g1);
      region.generators.push_back(g2);
      s.cusp_pairs.emplace_back(v.id + "." + c.id, CuspSubgroup{g1, g2});
    }
    for (const auto& h : v.holonomy_generators) {
      region.generators.push_back(compose(compose(base, h), base_inv));
    }
    s.regions.push_back(std::move(region));
  }

  int wall_counter = 0;
  auto next_wall_id = [&wall_counter]() { return "w" + std::to_string(wall_counter++); };

  // One gluing cylinder per edge, wired to piece collars or Klein ends.
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const EdgeData& e = g.edges[i];
    const std::string eid = "e" + std::to_string(i);
    const PieceDecoration* va = find_vertex(g, e.a.vertex);
    const PieceDecoration* vb = find_vertex(g, e.b.vertex);
    const bool a_klein = va->kind == PieceDecoration::Kind::Klein;
    const bool b_klein = vb->kind == PieceDecoration::Kind::Klein;

    Lattice2 lat1, lat2;
    KleinEnd ka, kb;
    if (a_klein) {
      ka = klein_end(normalize(va->lattice, Tag::AFF).lattice, va->sigma, va->shift);
      lat1 = ka.lattice;
    } else {
      lat1 = sites.at(end_key(e.a)).attachment.lattice;
    }
    if (b_klein) {
      kb = klein_end(normalize(vb->lattice, Tag::AFF).lattice, vb->sigma, vb->shift);
      lat2 = kb.lattice;
    } else {
      lat2 = sites.at(end_key(e.b)).attachment.lattice;
    }

    const AffineCylinderGlue cyl = build_affine_cylinder(lat1, lat2, e.cls, e.slide, e.offset);
    if (max_abs(lat1.b1 - cyl.lat_left.b1) > 1e-9 ||
        max_abs(lat2.b1 - cyl.lat_right.b1) > 1e-9) {
      throw build_error("build: half-edge lattice mismatch on " + eid +
                        " (upstream normalization bug)");
    }
    s.cylinders.emplace_back(eid, cyl);

    const std::string rl = "cyl:" + eid + ":L";
    const std::string rm = "cyl:" + eid + ":M";
    const std::string rr = "cyl:" + eid + ":R";

    // side a, then the cylinder, then side b, so the wall ids read in path order
    std::string a_region;
    if (a_klein) {
      a_region = "klein:" + va->id;
      RegionRecord kr;
      kr.id = a_region;
      kr.tag = Tag::AFF;
      kr.provenance = va->id;
      kr.generators = {embed_translation(lat1.b1, Tag::AFF),
                       embed_translation(lat1.b2, Tag::AFF), ka.involution};
      s.regions.push_back(std::move(kr));
      s.klein_ends.emplace_back(va->id, ka);
    } else {
      const CuspSite& site = sites.at(end_key(e.a));
      a_region = "collar:" + end_key(e.a);
      RegionRecord cr;
      cr.id = a_region;
      cr.tag = Tag::AFF;
      cr.provenance = end_key(e.a);
      cr.generators = {embed_translation(lat1.b1, Tag::AFF),
                       embed_translation(lat1.b2, Tag::AFF)};
      s.regions.push_back(std::move(cr));

      WallRecord pw;
      pw.id = next_wall_id();
      pw.region_a = "piece:" + va->id;
      pw.region_b = a_region;
      const bool is_base = va->cusps.front().id == e.a.cusp;
      pw.transition = is_base ? identity(site.tag)
                              : compose(base_chart.at(va->id), inverse(site.chart));
      pw.reductions = lattice_reductions(lat1, site.tag, Tag::AFF);
      pw.wall_lattice = lat1;
      s.walls.push_back(std::move(pw));
    }

    RegionRecord lreg{rl, Tag::AFF, cyl.gens_left, eid};
    RegionRecord mreg{rm, Tag::AFF, cyl.gens_mid, eid};
    RegionRecord rreg{rr, Tag::AFF, cyl.gens_right, eid};
    s.regions.push_back(std::move(lreg));
    s.regions.push_back(std::move(mreg));
    s.regions.push_back(std::move(rreg));

    WallRecord wal;  // a-side wall onto the cylinder
    wal.id = next_wall_id();
    wal.region_a = a_region;
    wal.region_b = rl;
    wal.transition = identity(Tag::AFF);
    wal.reductions = lattice_reductions(lat1, Tag::AFF, Tag::AFF);
    wal.wall_lattice = lat1;
    s.walls.push_back(std::move(wal));

    WallRecord wlm;
    wlm.id = next_wall_id();
    wlm.region_a = rl;
    wlm.region_b = rm;
    wlm.transition = identity(Tag::AFF);
    wlm.reductions = lattice_reductions(lat1, Tag::AFF, Tag::AFF);
    wlm.wall_lattice = lat1;
    s.walls.push_back(std::move(wlm));

    WallRecord wmr;  // charts change by the flip across the middle wall
    wmr.id = next_wall_id();
    wmr.region_a = rm;
    wmr.region_b = rr;
    wmr.transition = inverse(cyl.flip);
    wmr.reductions = lattice_reductions(lat2, Tag::AFF, Tag::AFF);
    wmr.wall_lattice = lat2;
    s.walls.push_back(std::move(wmr));

    std::string b_region;
    if (b_klein) {
      b_region = "klein:" + vb->id;
      RegionRecord kr;
      kr.id = b_region;
      kr.tag = Tag::AFF;
      kr.provenance = vb->id;
      kr.generators = {embed_translation(lat2.b1, Tag::AFF),
                       embed_translation(lat2.b2, Tag::AFF), kb.involution};
      s.regions.push_back(std::move(kr));
      s.klein_ends.emplace_back(vb->id, kb);

      WallRecord wrk;
      wrk.id = next_wall_id();
      wrk.region_a = rr;
      wrk.region_b = b_region;
      wrk.transition = identity(Tag::AFF);
      wrk.reductions = lattice_reductions(lat2, Tag::AFF, Tag::AFF);
      wrk.wall_lattice = lat2;
      s.walls.push_back(std::move(wrk));
    } else {
      const CuspSite& site = sites.at(end_key(e.b));
      b_region = "collar:" + end_key(e.b);
      RegionRecord cr;
      cr.id = b_region;
      cr.tag = Tag::AFF;
      cr.provenance = end_key(e.b);
      cr.generators = {embed_translation(lat2.b1, Tag::AFF),
                       embed_translation(lat2.b2, Tag::AFF)};
      s.regions.push_back(std::move(cr));

      WallRecord wrc;
      wrc.id = next_wall_id();
      wrc.region_a = rr;
      wrc.region_b = b_region;
      wrc.transition = identity(Tag::AFF);
      wrc.reductions = lattice_reductions(lat2, Tag::AFF, Tag::AFF);
      wrc.wall_lattice = lat2;
      s.walls.push_back(std::move(wrc));

      WallRecord pw;
      pw.id = next_wall_id();
      pw.region_a = "piece:" + vb->id;
      pw.region_b = b_region;
      const bool is_base = vb->cusps.front().id == e.b.cusp;
      pw.transition = is_base ? identity(site.tag)
                              : compose(base_chart.at(vb->id), inverse(site.chart));
      pw.reductions = lattice_reductions(lat2, site.tag, Tag::AFF);
      pw.wall_lattice = lat2;
      s.walls.push_back(std::move(pw));
    }
  }

  const PieceDecoration& first = g.vertices.front();
  s.base_region = (first.kind == PieceDecoration::Kind::Elemental ? "piece:" : "klein:") +
                  first.id;
  return s;
}

VerificationReport verify(const LieGeneratedStructure& s, double eps, int samples,
                          std::uint64_t seed) {
  VerificationReport rep;
  const std::vector<UPoint> pts = sample_box(samples, seed);

  // (1) reduction axiom on every intersection
  for (const auto& w : s.walls) {
    double r = 0.0;
    for (const auto& red : w.reductions) {
      r = std::max(r, action_residual(red.rep_a, red.rep_b, pts));
    }
    add_check(&rep, "reduction:" + w.id, r < eps, r,
              w.region_a + " | " + w.region_b + ": the two interpretations of each "
              "reduction generator must act identically");
  }

  // (2) the middle group H lies in the affine group [A]
  for (const auto& [eid, cyl] : s.cylinders) {
    double r = 0.0;
    bool ok = true;
    for (const auto& gen : cyl.gens_mid) {
      if (gen.tag() != Tag::AFF) {
        ok = false;
        continue;
      }
      const AffineA& f = gen.aff();
      r = std::max(r, std::abs(std::abs(f.linear.det()) - 1.0));
      if (f.eps != 1 && f.eps != -1) ok = false;
    }
    add_check(&rep, "membership:cyl:" + eid + ":M", ok && r < std::max(eps, 1e-12), r,
              "generators of H are measure preserving on each factor");
  }

  // (3) commutation of every cusp pair
  for (const auto& [label, cusp] : s.cusp_pairs) {
    const double r =
        action_residual(compose(cusp.g1, cusp.g2), compose(cusp.g2, cusp.g1), pts);
    add_check(&rep, "commute:" + label, r < eps, r, "cusp generators commute");
  }

  // (4) flip conjugacy: F T_v F^{-1} = T_{Av} on the left lattice
  for (const auto& [eid, cyl] : s.cylinders) {
    double r = 0.0;
    const GroupElement flip_inv = inverse(cyl.flip);
    for (const Vec2& v : {cyl.lat_left.b1, cyl.lat_left.b2}) {
      const GroupElement lhs =
          compose(compose(cyl.flip, embed_translation(v, Tag::AFF)), flip_inv);
      const GroupElement rhs = embed_translation(cyl.map.linear.apply(v), Tag::AFF);
      r = std::max(r, action_residual(lhs, rhs, pts));
    }
    add_check(&rep, "flip:" + eid, r < eps, r,
              "the flip conjugates left-lattice translations to their images");
  }

  // (5) Klein involution checks (integer congruences, independent of eps)
  for (const auto& [vid, ke] : s.klein_ends) {
    std::vector<std::string> fails;
    if (ke.sigma.det() != -1) fails.push_back("det(sigma) != -1");
    if (!(ke.sigma * ke.sigma == IMat2::identity())) fails.push_back("sigma^2 != I");
    const double tx = static_cast<double>(ke.sigma.m00 + 1) * ke.shift.x +
                      static_cast<double>(ke.sigma.m01) * ke.shift.y;
    const double ty = static_cast<double>(ke.sigma.m10) * ke.shift.x +
                      static_cast<double>(ke.sigma.m11 + 1) * ke.shift.y;
    const double r2 = std::max(std::abs(tx - std::round(tx)), std::abs(ty - std::round(ty)));
    if (r2 > 1e-9) fails.push_back("involution squared is not a lattice translation");
    const AffineA& f = ke.involution.aff();
    if (!(f.eps == -1 && f.linear.det() < 0.0)) {
      fails.push_back("involution does not preserve 3D orientation while reversing the torus");
    }
    try {
      if (klein_congruence_residual(ke.sigma, ke.shift) <= 1e-9) {
        fails.push_back("fixed point congruence is solvable");
      }
    } catch (const error& err) {
      fails.push_back(err.what());
    }
    add_check(&rep, "klein:" + vid, fails.empty(), r2, join(fails));
  }

  // (6) area 1 for every wall lattice
  for (const auto& w : s.walls) {
    const double r = std::abs(area(w.wall_lattice) - 1.0);
    add_check(&rep, "area:" + w.id, r < eps, r, "wall lattice has normalized area");
  }

  // (7) minimality bookkeeping: stored reduction set equals the wall lattice
  for (const auto& w : s.walls) {
    double r = 0.0;
    bool ok = w.reductions.size() == 2;
    if (ok) {
      r = std::max(max_abs(w.reductions[0].vector - w.wall_lattice.b1),
                   max_abs(w.reductions[1].vector - w.wall_lattice.b2));
    }
    add_check(&rep, "minimal:" + w.id, ok && r < eps, r,
              "stored reduction set equals the wall-holonomy lattice; minimality "
              "assumed by construction");
  }

  // structure invariant: the intersection adjacency graph is connected
  {
    bool connected = true;
    if (!s.regions.empty()) {
      std::set<std::string> reached{s.regions.front().id};
      std::vector<std::string> queue{s.regions.front().id};
      while (!queue.empty()) {
        const std::string cur = queue.back();
        queue.pop_back();
        for (const auto& w : s.walls) {
          const std::string other = (w.region_a == cur) ? w.region_b
                                   : (w.region_b == cur) ? w.region_a
                                                         : "";
          if (!other.empty() && reached.insert(other).second) queue.push_back(other);
        }
      }
      connected = reached.size() == s.regions.size();
    }
    add_check(&rep, "structure:connected", connected, 0.0,
              "every region is reachable through binary intersections");
  }

  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  return rep;
}

}  // namespace liegeom
