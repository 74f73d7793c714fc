#ifndef LIEGEOM_ASSEMBLY_HPP_
#define LIEGEOM_ASSEMBLY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liegeom/construction.hpp"
#include "liegeom/group_actions.hpp"
#include "liegeom/lattices.hpp"

namespace liegeom {

struct CuspData {
  std::string id;
  CuspSubgroup group;
};

// A decorated graph vertex: a finite volume elemental piece of hyperbolic type,
// or a twisted R-bundle over a Klein bottle at a univalent position.
struct PieceDecoration {
  enum class Kind { Elemental, Klein };

  std::string id;
  Kind kind = Kind::Elemental;
  // elemental
  Tag tag = Tag::H3;
  std::vector<CuspData> cusps;
  std::vector<GroupElement> holonomy_generators;
  // klein
  Lattice2 lattice;
  IMat2 sigma;
  Vec2 shift;
};

struct EndRef {
  std::string vertex;
  std::string cusp;  // "end" for Klein vertices
};

struct EdgeData {
  EndRef a;
  EndRef b;
  IMat2 cls;  // det -1
  double slide = 0.0;
  Vec2 offset;
};

struct GeometryGraph {
  std::vector<PieceDecoration> vertices;
  std::vector<EdgeData> edges;
};

struct Check {
  std::string name;
  bool pass = true;
  double max_residual = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool all_pass() const;
};

// Connectivity, valence/cusp matching, Klein placement, det(class) = -1 per
// edge, and cusp standard-form success.  Failures are report entries, not
// exceptions.
VerificationReport validate(const GeometryGraph& g);

// One reduction generator of a binary intersection, with its representative in
// each adjacent region's group.
struct ReductionGenerator {
  Vec2 vector;
  GroupElement rep_a;
  GroupElement rep_b;
};

// Binary intersection record.  Base charts satisfy
// c_{region_a} = transition o c_{region_b}; the transition is tagged with
// region_a's group.
struct WallRecord {
  std::string id;
  std::string region_a;
  std::string region_b;
  GroupElement transition;
  std::vector<ReductionGenerator> reductions;
  Lattice2 wall_lattice;
};

struct RegionRecord {
  std::string id;
  Tag tag = Tag::AFF;
  std::vector<GroupElement> generators;
  std::string provenance;
};

struct LieGeneratedStructure {
  std::vector<RegionRecord> regions;
  std::vector<WallRecord> walls;
  std::string base_region;

  // side tables used by verify
  std::vector<std::pair<std::string, CuspSubgroup>> cusp_pairs;
  std::vector<std::pair<std::string, AffineCylinderGlue>> cylinders;
  std::vector<std::pair<std::string, KleinEnd>> klein_ends;

  const RegionRecord* find_region(const std::string& id) const;
  const WallRecord* find_wall(const std::string& id) const;
};

// Assembles the structure: piece regions, collar attachments per cusp, the
// three cylinder regions per edge, Klein end regions, and every wall with its
// lattice reduction.  Throws build_error when validate fails.
LieGeneratedStructure build(const GeometryGraph& g);

// Continuous parameters of the construction: slide + gluing offset per edge.
int moduli_dimension(const GeometryGraph& g);

// Runs the full check list: reduction axiom per wall, membership of the middle
// groups in the affine group, cusp commutation, flip conjugacy, Klein
// involution checks, wall areas, minimality bookkeeping, and connectivity.
// Deterministic for fixed input and seed; entries are sorted by name.
VerificationReport verify(const LieGeneratedStructure& s, double eps, int samples,
                          std::uint64_t seed);

}  // namespace liegeom

#endif  // LIEGEOM_ASSEMBLY_HPP_
