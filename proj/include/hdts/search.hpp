#pragma once

// Backtracking enumeration of structure-preserving maps between two
// systems. Shared by hom enumeration, isomorphism search, the lifting
// solver and cube filling.

#include <functional>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

struct SearchProblem {
  const TransitionSystem* source = nullptr;
  const TransitionSystem* target = nullptr;
  // Candidate images per source state / action. Singletons fix a value.
  std::vector<std::vector<Index>> state_domains;
  std::vector<std::vector<Index>> action_domains;
  bool injective = false;
};

/// Every target state for each source state; every target action with the
/// same label name for each source action.
SearchProblem default_problem(const TransitionSystem& source, const TransitionSystem& target);

/// Called with a complete assignment; return false to stop.
using SearchVisitor =
    std::function<bool(const std::vector<Index>& states, const std::vector<Index>& actions)>;

/// Enumerates assignments preserving all transitions, smallest candidates
/// first. Returns the number of solutions visited.
std::size_t search_morphisms(const SearchProblem& problem, const SearchVisitor& visit);

}  // namespace hdts
