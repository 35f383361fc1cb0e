#pragma once

// Cubical and regular systems: classification, the cubical coreflection,
// the regular reflection, path spaces per variant and pointed
// (star-shaped) systems.

#include <set>
#include <utility>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

struct ClassificationReport {
  bool is_weak = false;
  bool all_actions_used = false;
  bool intermediate_state = false;
  bool unique_intermediate_state = false;

  ValidationReport weak;
  std::vector<Index> unused_actions;
  struct Division {
    Transition transition;
    std::size_t p = 0;
    std::vector<Index> states;  // empty: no divider; two or more: CSA2 failure
  };
  std::vector<Division> missing_dividers;
  std::vector<Division> ambiguous_dividers;

  bool is_cubical() const { return is_weak && all_actions_used && intermediate_state; }
  bool is_regular() const { return is_cubical() && unique_intermediate_state; }
};

ClassificationReport classify(const TransitionSystem& x);
bool is_cubical(const TransitionSystem& x);
bool is_regular(const TransitionSystem& x);
/// Throws ArgumentError when X is not in the given subcategory.
void require_variant(const TransitionSystem& x, Variant variant, const char* what);

struct Coreflection {
  TransitionSystem system;
  Morphism counit;  // inclusion into X
};

/// Largest cubical part of X: transitions on top of a filled cube, closed,
/// restricted to actions carried by some 1-transition.
Coreflection cubicalify(const TransitionSystem& x);

/// True if the n-transition t is the top of a labelled cube mapped into X.
bool has_cube_filler(const TransitionSystem& x, const Transition& t);

struct Reflection {
  TransitionSystem system;
  Morphism unit;
};

/// Merges the dividing states of CSA2 failures until none remain. Each
/// class is named after its least member. X must be cubical.
Reflection regularize(const TransitionSystem& x);

/// wts: cocyl(X); cts and rts: the cubical part of cocyl(X).
TransitionSystem path_space(const TransitionSystem& x, Variant variant);

struct PointedSystem {
  TransitionSystem system;
  Index base = 0;
};

StateSet reachable(const PointedSystem& p);

struct StarCoreflection {
  PointedSystem pointed;
  Morphism counit;
};

/// Keeps the reachable part. Transitions starting from a reachable state
/// end in one, so the result is a restriction plus action pruning.
StarCoreflection star_coreflect(const PointedSystem& p, Variant variant);

/// cyl(X)//{base} (wts, cts) or cyl(X)//(internal + base) (rts), based at
/// (base,0).
PointedSystem star_cylinder(const PointedSystem& p, Variant variant);

/// Pairs reachable from (base,base) in the path space.
std::set<std::pair<Index, Index>> same_past_pairs(const PointedSystem& p, Variant variant);

}  // namespace hdts
