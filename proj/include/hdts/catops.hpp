#pragma once

// Finite categorical constructions: hom sets, binary products,
// coproducts, colimits of finite diagrams and pushout-products.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hdts/core.hpp"

namespace hdts {

/// All morphisms X -> Y, in a deterministic order.
std::vector<Morphism> hom(const TransitionSystem& x, const TransitionSystem& y);
std::size_t count_hom(const TransitionSystem& x, const TransitionSystem& y);
/// Visits morphisms until the callback returns false.
void for_each_hom(const TransitionSystem& x, const TransitionSystem& y,
                  const std::function<bool(const Morphism&)>& visit);

struct ProductResult {
  TransitionSystem system;
  Morphism first;
  Morphism second;
  std::vector<Index> state_pair;  // index of (s,t) is state_pair[s*|S_Y|+t]
  std::map<std::pair<Index, Index>, Index> action_pair;
};

/// States "(s,t)", actions "(u,v)" over pairs with equal labels.
ProductResult product(const TransitionSystem& x, const TransitionSystem& y);

/// Induced map into the product from a cone (f: W -> X, g: W -> Y).
Morphism pairing(const ProductResult& p, const Morphism& f, const Morphism& g);

struct Cocone {
  TransitionSystem apex;
  std::vector<Morphism> legs;
};

struct DiagramArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Morphism map;
};

struct Diagram {
  Alphabet sigma;
  std::vector<TransitionSystem> objects;
  std::vector<DiagramArrow> arrows;
};

/// Disjoint union; element names become "i:name".
Cocone coproduct(const Alphabet& sigma, const std::vector<TransitionSystem>& xs);

/// Quotient of the disjoint union by the arrows, transitions closed. Each
/// class is named after its least member "i:name". For cts the objects
/// must be cubical; for rts regular, and the apex is then regularized.
Cocone colimit(const Diagram& d, Variant variant = Variant::wts);

/// The unique map from a colimit apex to the apex of another cocone over
/// the same diagram; ArgumentError if `other` is not a cocone.
Morphism factor_through(const Diagram& d, const Cocone& colim, const Cocone& other);

/// True if the legs commute with every arrow of the diagram.
bool is_cocone(const Diagram& d, const Cocone& c);

/// Pushout of B <-f- A -g-> C. Legs are given for [A, B, C].
Cocone pushout(const Morphism& f, const Morphism& g, Variant variant = Variant::wts);

/// f + g : A + C -> B + D on coproducts built by `coproduct`.
Morphism coproduct_map(const Alphabet& sigma, const std::vector<Morphism>& maps);

enum class StarWhich { gamma0, gamma1, gamma };

struct StarProduct {
  Cocone corner;  // pushout over the diagram A (or A+A) -> B, cyl(A)
  Morphism map;   // corner apex -> cyl(B)
};

/// The pushout-product of f : A -> B with gamma^0, gamma^1 or gamma.
StarProduct star_product(const Morphism& f, StarWhich which);

std::string to_string(StarWhich which);

}  // namespace hdts
