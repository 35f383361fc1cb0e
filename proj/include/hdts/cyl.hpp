#pragma once

// The cylinder functor X x V, the path space, the transpose bijection
// between them, the quotients cyl(X)//Z and internal states.

#include <map>
#include <utility>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

/// States "(s,e)" and actions "(u,e)" for e in {0,1}.
struct Cylinder {
  TransitionSystem system;
  Morphism gamma0;
  Morphism gamma1;
  Morphism sigma;
  // index of (s,e) is state[2*s+e]; of (u,e) is action[2*u+e]
  std::vector<Index> state;
  std::vector<Index> action;
};

Cylinder cylinder(const TransitionSystem& x);

/// cyl(f) : cyl(A) -> cyl(B).
Morphism cylinder_map(const Morphism& f);

/// gamma = gamma^0 + gamma^1 out of coproduct(X, X).
Morphism cylinder_gamma(const TransitionSystem& x);

/// States "(s,t)", actions "(u,v)" with equal labels. A tuple is a
/// transition iff every side-mixture of it is a transition of X.
struct Cocylinder {
  TransitionSystem system;
  Morphism pi0;
  Morphism pi1;
  std::vector<Index> state;  // index of (s,t) is state[s*|S|+t]
  std::map<std::pair<Index, Index>, Index> action;
};

Cocylinder cocylinder(const TransitionSystem& x);

/// cyl(X) -> Y  to  X -> cocyl(Y). ArgumentError unless f starts at cyl(X).
Morphism transpose(const TransitionSystem& x, const Morphism& f);
/// X -> cocyl(Y)  to  cyl(X) -> Y. ArgumentError unless g ends at cocyl(Y).
Morphism untranspose(const TransitionSystem& y, const Morphism& g);

// Same, with the cylinder of X and the cocylinder of Y already built.
Morphism transpose(const Cylinder& cx, const Cocylinder& cy, const Morphism& f);
Morphism untranspose(const Cylinder& cx, const Cocylinder& cy, const Morphism& g);

struct QuotientCylinder {
  TransitionSystem system;
  Morphism projection;  // cyl(X) -> cyl(X)//Z, (a,1) -> (a,0) for a in Z
  Morphism section;     // inclusion cyl(X)//Z -> cyl(X)
};

/// cyl(X) restricted to Z x {0} and (S \ Z) x {0,1}.
QuotientCylinder quotient_cyl(const TransitionSystem& x, const StateSet& z);

/// States dividing some transition of dimension at least 2.
StateSet internal_states(const TransitionSystem& x);

}  // namespace hdts
