#pragma once

// Generating cofibrations, cofibration tests, the lifting solver, the
// factorization through the state identification R, relocation of R-cells
// in a cellular decomposition, bounded saturation and the causal-collapse
// check.

#include <optional>
#include <string>
#include <vector>

#include "hdts/catops.hpp"
#include "hdts/core.hpp"

namespace hdts {

/// A well-formed call whose input violates a stated precondition.
class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

enum class Family { I, I_CTS, I_RTS };

std::string to_string(Family f);
Family parse_family(std::string_view text);  // throws ArgumentError
Family family_for(Variant v);                 // wts -> I, otherwise I_CTS

struct Generator {
  std::string name;  // e.g. "empty->point", "boundary(a,b)"
  Morphism map;
};

struct GeneratingSet {
  Family family = Family::I;
  std::vector<Generator> members;
};

/// Members over every word of length 1..d.
GeneratingSet generating_set(Family family, const Alphabet& sigma, int d);

struct CofibrationVerdict {
  bool cofibration = false;
  std::string procedure;
  std::string note;
  std::string witness;  // reason for a negative verdict
};

/// wts, cts: injective on states and actions. rts: see the procedure text
/// in the verdict; negative answers from it are not proofs.
CofibrationVerdict is_cofibration(const Morphism& f, Variant variant);

struct LiftingProblem {
  Morphism f;       // A -> B
  Morphism g;       // X -> Y
  Morphism top;     // A -> X
  Morphism bottom;  // B -> Y
};

/// Diagonal B -> X with l.f = top and g.l = bottom, or nothing. ArgumentError
/// if the square does not commute.
std::optional<Morphism> lift(const LiftingProblem& p);

/// Extension e of top : P -> X along j : P -> C (e.j = top), if any.
std::optional<Morphism> extend(const Morphism& j, const Morphism& top);

struct RFactorization {
  Morphism minus;  // quotient by the kernel on states, transitions closed
  Morphism plus;   // injective on states
};

RFactorization factor_R(const Morphism& f);

struct Cell {
  Morphism generator;  // U -> W
  Morphism attaching;  // U -> current stage
};

struct CellularDecomposition {
  TransitionSystem base;
  Family family = Family::I;
  std::vector<Cell> cells;
};

/// The map R : {0,1} -> {0}, recognized structurally.
bool is_r_generator(const Morphism& g);

struct AttachResult {
  TransitionSystem system;
  Morphism insertion;  // stage -> system
  Morphism cell;       // W -> system
};

/// Pushout of the generator along the attaching map. Stage names are kept
/// (merged states take the least name); new elements are named "tag:name".
AttachResult attach(const TransitionSystem& stage, const Cell& cell, const std::string& tag);

struct Realization {
  std::vector<TransitionSystem> stages;  // stages[0] = base
  Morphism composite;                    // base -> last stage
};

/// Computes every stage. ArgumentError if an attaching map does not land
/// in the stage it is attached to.
Realization realize(const CellularDecomposition& d);

struct Relocation {
  CellularDecomposition decomposition;  // R-cells first
  std::size_t r_cells = 0;
  Morphism comparison;  // last stage of the result -> last stage of the input
  bool isomorphic = false;  // comparison is an isomorphism over the base
};

/// Moves every R-cell to the front. PreconditionError if a non-R cell is
/// not injective on states.
Relocation relocate(const CellularDecomposition& d);

struct SaturationStep {
  std::size_t round = 0;
  std::string generator;
  StarWhich which = StarWhich::gamma0;
  std::size_t squares = 0;
  std::size_t defects = 0;
};

struct Saturation {
  TransitionSystem result;
  Morphism insertion;
  std::vector<SaturationStep> trace;
};

/// Each round adjoins a solution to every lifting problem of f*gamma^e
/// (f generating, e = 0, 1) against X -> 1 that is unsolvable at the start
/// of the round.
Saturation saturate(const TransitionSystem& x, Variant variant, int rounds);

struct CollapseReport {
  bool collapsed = true;
  std::size_t obligations = 0;
  struct Missing {
    Index from;
    Index to;
    std::vector<Index> word;  // label indices
  };
  std::vector<Missing> missing;  // states are indices of X0
};

/// For every label word of a transition of X0 and every ordered pair of
/// X0 states, is there a transition with that word between the images?
CollapseReport causal_collapse_check(const TransitionSystem& x0, const TransitionSystem& xsat,
                                     const Morphism& insertion);

}  // namespace hdts
