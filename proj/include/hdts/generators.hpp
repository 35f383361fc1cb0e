#pragma once

// Standard objects: point, action object, pure and full cubes, cube
// boundaries, the double transition, the interval V, the truncated
// terminal object and the a||b square.
//
// Naming: cube states are bit strings ("01"), cube actions "(x,i)" with
// 1-based i. The double transition has states "1".."4" and action "x".
// V has states "0","1" and actions "(x,e)". The terminal object has state
// "0" and one action per label, named by the label.

#include <string>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

enum class GeneratorKind {
  point,
  action,
  pure_cube,
  cube,
  boundary_cube,
  double_transition,
  interval,
  terminal,
  fig1,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::point;
  std::vector<std::string> labels;  // x_1..x_n, x, or (a,b) for fig1
  int dimension = kDefaultMaxDimension;  // truncation for interval / terminal
};

TransitionSystem make(const GeneratorSpec& spec, const Alphabet& sigma);

TransitionSystem point(const Alphabet& sigma);
TransitionSystem action_object(const Alphabet& sigma, const std::string& x);
TransitionSystem pure_cube(const Alphabet& sigma, const std::vector<std::string>& xs);
TransitionSystem cube(const Alphabet& sigma, const std::vector<std::string>& xs);
TransitionSystem boundary_cube(const Alphabet& sigma, const std::vector<std::string>& xs);
TransitionSystem double_transition(const Alphabet& sigma, const std::string& x);
TransitionSystem interval(const Alphabet& sigma, int dimension = kDefaultMaxDimension);
TransitionSystem terminal(const Alphabet& sigma, int dimension = kDefaultMaxDimension);
TransitionSystem fig1(const Alphabet& sigma, const std::string& a, const std::string& b);

/// The two corners of the pure cube plus its actions, without transitions.
TransitionSystem pure_cube_frame(const Alphabet& sigma, const std::vector<std::string>& xs);

/// {0_n,1_n} + x_1 + .. + x_n included in the pure n-transition.
Morphism pure_cube_inclusion(const Alphabet& sigma, const std::vector<std::string>& xs);
/// Boundary of the n-cube included in the cube.
Morphism boundary_inclusion(const Alphabet& sigma, const std::vector<std::string>& xs);
/// C_1[x] as the transition (1,x,2) of the double transition.
Morphism double_inclusion(const Alphabet& sigma, const std::string& x);
/// The empty system included in Y.
Morphism from_empty(const TransitionSystem& y);
/// The unique map X -> terminal(d); ArgumentError if X exceeds dimension d.
Morphism to_terminal(const TransitionSystem& x, int dimension);

/// The map R : {0,1} -> {0}.
Morphism r_map(const Alphabet& sigma);

enum class ProbeKind { point, action, pure_cube };

struct HomCount {
  std::size_t enumerated = 0;  // via hom enumeration
  std::size_t direct = 0;      // states, actions labelled x, or transitions with the word
  bool agrees() const { return enumerated == direct; }
};

/// Hom sets out of the probes count states, actions of a label, and
/// transitions of a label word.
HomCount hom_characterization_check(ProbeKind kind, const std::vector<std::string>& labels,
                                    const TransitionSystem& x);

}  // namespace hdts
