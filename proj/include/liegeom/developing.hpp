#ifndef LIEGEOM_DEVELOPING_HPP_
#define LIEGEOM_DEVELOPING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "liegeom/assembly.hpp"
#include "liegeom/group_actions.hpp"

namespace liegeom {

// A chart germ: the offset of the chart from the region's base chart, inside
// the region's group.
struct Germ {
  std::string region;
  GroupElement frame;
};

// Deck choice applied after a wall crossing: a signed index into the wall's
// reduction generators, or an explicit element.
struct ReductionChoice {
  int index = 0;
  int sign = 1;
  std::optional<GroupElement> element;
};

struct PathStep {
  std::string wall;
  std::vector<ReductionChoice> reductions;
};

// Combinatorial path: a sequence of wall crossings with deck choices.  The
// regions' overlaps are collars, so the Poincare path groupoid is exactly this
// data; no geometric curves are traced.
struct PathSpec {
  std::vector<PathStep> steps;
};

// A composable word in the generated group; letters of mixed tags allowed.
struct Word {
  std::vector<GroupElement> letters;
};

// Analytic continuation of the germ along the path.  At each crossing the
// frame is composed on the right with the wall transition and the chosen
// reduction elements, then re-expressed in the target region's group.  A germ
// whose frame is not expressible there does not continue (path_error); this is
// the honest obstruction, not a bookkeeping gap.
Germ continue_germ(const LieGeneratedStructure& s, const Germ& g, const PathSpec& path);

// The word of transition and reduction letters picked up by continuing the
// identity germ around the loop; evaluates to the continued frame's action.
// Loops must start and end at the base region.  The returned word is reduced.
Word holonomy(const LieGeneratedStructure& s, const PathSpec& loop);

// Applies the letters right to left via act.
UPoint evaluate_word(const Word& w, const UPoint& p);

// Composes adjacent same-tag letters, re-tags horizontal translations to the
// canonical AFF letter, merges translation neighbors, and drops identities.
// Evaluation is unchanged.
Word reduce_word(const Word& w);

}  // namespace liegeom

#endif  // LIEGEOM_DEVELOPING_HPP_
