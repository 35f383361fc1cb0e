#pragma once

#include <random>
#include <string>
#include <vector>

#include "hdts/core.hpp"

namespace corpus {

struct Entry {
  std::string name;
  hdts::TransitionSystem system;
};

hdts::Alphabet ab();

/// Closed random system: up to max_states states, max_actions actions,
/// transitions of dimension at most max_dim.
hdts::TransitionSystem random_system(std::mt19937& rng, const hdts::Alphabet& sigma, int max_states,
                                     int max_actions, int max_dim);

/// Generators over {a,b} up to dimension 3, fig1 (a and b in parallel), amalgamated sums and
/// 20 seeded random systems.
const std::vector<Entry>& all();

std::vector<Entry> with_at_most(std::size_t states);

}  // namespace corpus
