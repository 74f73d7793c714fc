#include "liegeom/developing.hpp"

#include "liegeom/errors.hpp"

namespace liegeom {

namespace {

struct Crossing {
  std::string target;
  Tag target_tag = Tag::AFF;
  GroupElement frame;                   // continued frame
  std::vector<GroupElement> letters;    // raw letters (derived-group word)
};

GroupElement reduction_element(const WallRecord& wall, const ReductionChoice& choice,
                               Tag target_tag) {
  if (choice.element) {
    const auto re = re_express(*choice.element, target_tag);
    if (!re) {
      throw path_error("explicit reduction element is not expressible in the target group " +
                       std::string(tag_name(target_tag)));
    }
    return *re;
  }
  if (choice.index < 0 || choice.index >= static_cast<int>(wall.reductions.size())) {
    throw index_error("reduction index " + std::to_string(choice.index) +
                      " out of range on wall " + wall.id + " (has " +
                      std::to_string(wall.reductions.size()) + " generators)");
  }
  Vec2 v = wall.reductions[static_cast<std::size_t>(choice.index)].vector;
  if (choice.sign < 0) v = -v;
  return embed_translation(v, target_tag);
}

Crossing cross_wall(const LieGeneratedStructure& s, const std::string& region,
                    const GroupElement& frame, const PathStep& step) {
  const WallRecord* wall = s.find_wall(step.wall);
  if (wall == nullptr) throw path_error("unknown wall id '" + step.wall + "'");

  Crossing out;
  if (wall->region_a == region) {
    out.target = wall->region_b;
  } else if (wall->region_b == region) {
    out.target = wall->region_a;
  } else {
    throw path_error("wall " + wall->id + " is not adjacent to region " + region);
  }
  const RegionRecord* target = s.find_region(out.target);
  if (target == nullptr) throw path_error("structure has no region " + out.target);
  out.target_tag = target->tag;

  if (wall->region_a == region) {
    // c_a = transition o c_b, so the frame relative to c_b is frame o transition.
    const GroupElement composite = compose(frame, wall->transition);
    const auto re = re_express(composite, target->tag);
    if (!re) {
      throw path_error("germ does not continue across " + wall->id +
                       ": its frame is not expressible in the structure group of " +
                       out.target + " (choose a wall-compatible deck position)");
    }
    out.frame = *re;
    if (!is_identity(wall->transition)) out.letters.push_back(wall->transition);
  } else {
    const auto re = re_express(frame, target->tag);
    if (!re) {
      throw path_error("germ does not continue across " + wall->id +
                       ": its frame is not expressible in the structure group of " +
                       out.target + " (choose a wall-compatible deck position)");
    }
    const GroupElement trans_inv = inverse(wall->transition);
    out.frame = compose(*re, trans_inv);
    if (!is_identity(wall->transition)) out.letters.push_back(trans_inv);
  }

  for (const ReductionChoice& choice : step.reductions) {
    const GroupElement r = reduction_element(*wall, choice, target->tag);
    out.frame = compose(out.frame, r);
    if (!is_identity(r)) out.letters.push_back(r);
  }
  return out;
}

}  // namespace

Germ continue_germ(const LieGeneratedStructure& s, const Germ& g, const PathSpec& path) {
  const RegionRecord* region = s.find_region(g.region);
  if (region == nullptr) throw path_error("unknown region '" + g.region + "'");
  if (g.frame.tag() != region->tag) {
    throw path_error("germ frame tag does not match the tag of region " + g.region);
  }
  Germ cur = g;
  for (const PathStep& step : path.steps) {
    Crossing c = cross_wall(s, cur.region, cur.frame, step);
    cur.region = std::move(c.target);
    cur.frame = std::move(c.frame);
  }
  return cur;
}

Word holonomy(const LieGeneratedStructure& s, const PathSpec& loop) {
  const RegionRecord* base = s.find_region(s.base_region);
  if (base == nullptr) throw path_error("structure has no base region");
  std::string region = s.base_region;
  GroupElement frame = identity(base->tag);
  std::vector<GroupElement> letters;
  for (const PathStep& step : loop.steps) {
    Crossing c = cross_wall(s, region, frame, step);
    region = std::move(c.target);
    frame = std::move(c.frame);
    letters.insert(letters.end(), c.letters.begin(), c.letters.end());
  }
  if (region != s.base_region) {
    throw path_error("loop ends in region " + region + ", not at the base region " +
                     s.base_region);
  }
  return reduce_word(Word{std::move(letters)});
}

UPoint evaluate_word(const Word& w, const UPoint& p) {
  UPoint q = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    q = act(*it, q);
  }
  return q;
}

namespace {

// Translations are re-tagged to the canonical AFF letter; exact forms only, so
// evaluation is untouched.
GroupElement normalize_letter(const GroupElement& g) {
  if (const auto v = horizontal_translation_vector(g, 1e-12)) {
    return embed_translation(*v, Tag::AFF);
  }
  return g;
}

}  // namespace

Word reduce_word(const Word& w) {
  std::vector<GroupElement> cur;
  cur.reserve(w.letters.size());
  for (const GroupElement& l : w.letters) {
    const GroupElement n = normalize_letter(l);
    if (!is_identity(n)) cur.push_back(n);
  }
  bool merged = true;
  while (merged) {
    merged = false;
    std::vector<GroupElement> next;
    next.reserve(cur.size());
    for (const GroupElement& l : cur) {
      if (!next.empty() && next.back().tag() == l.tag()) {
        GroupElement c = normalize_letter(compose(next.back(), l));
        next.pop_back();
        if (!is_identity(c)) next.push_back(std::move(c));
        merged = true;
      } else {
        next.push_back(l);
      }
    }
    cur = std::move(next);
  }
  return Word{std::move(cur)};
}

}  // namespace liegeom
