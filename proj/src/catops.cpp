#include "hdts/catops.hpp"

#include <algorithm>
#include <map>

#include "hdts/cyl.hpp"
#include "hdts/search.hpp"
#include "hdts/subcats.hpp"
#include "union_find.hpp"

namespace hdts {

void for_each_hom(const TransitionSystem& x, const TransitionSystem& y,
                  const std::function<bool(const Morphism&)>& visit) {
  SearchProblem p = default_problem(x, y);
  search_morphisms(p, [&](const std::vector<Index>& s, const std::vector<Index>& a) {
    return visit(Morphism{x, y, s, a});
  });
}

std::vector<Morphism> hom(const TransitionSystem& x, const TransitionSystem& y) {
  std::vector<Morphism> out;
  for_each_hom(x, y, [&](const Morphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t count_hom(const TransitionSystem& x, const TransitionSystem& y) {
  SearchProblem p = default_problem(x, y);
  return search_morphisms(p, [](const std::vector<Index>&, const std::vector<Index>&) { return true; });
}

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

void require_same_alphabet(const TransitionSystem& x, const TransitionSystem& y) {
  if (!(x.alphabet() == y.alphabet())) throw ArgumentError("systems over different alphabets");
}

std::string tagged(std::size_t i, const std::string& name) { return std::to_string(i) + ":" + name; }

}  // namespace

ProductResult product(const TransitionSystem& x, const TransitionSystem& y) {
  require_same_alphabet(x, y);
  SystemBuilder b(x.alphabet());
  const std::size_t ny = y.state_count();
  std::vector<Index> state(x.state_count() * ny);
  for (Index s = 0; s < x.state_count(); ++s)
    for (Index t = 0; t < ny; ++t) state[s * ny + t] = b.add_state(pair_name(x.state_name(s), y.state_name(t)));
  std::map<std::pair<Index, Index>, Index> action;
  for (Index u = 0; u < x.action_count(); ++u)
    for (Index v = 0; v < y.action_count(); ++v)
      if (x.action_label(u) == y.action_label(v))
        action[{u, v}] =
            b.add_action_with_label(pair_name(x.action_name(u), y.action_name(v)), x.action_label(u));

  // Pair transitions with equal dimension and label word.
  std::map<std::vector<Index>, std::vector<const Transition*>> by_word;
  for (const auto& t : y.transitions()) by_word[y.label_word(t)].push_back(&t);
  for (const auto& t : x.transitions()) {
    auto it = by_word.find(x.label_word(t));
    if (it == by_word.end()) continue;
    for (const Transition* r : it->second) {
      Transition p{state[t.source * ny + r->source], {}, state[t.target * ny + r->target]};
      for (std::size_t i = 0; i < t.actions.size(); ++i) p.actions.push_back(action.at({t.actions[i], r->actions[i]}));
      b.add_transition(std::move(p));
    }
  }
  auto built = std::move(b).build();
  ProductResult result{built.system,
                       Morphism{built.system, x, std::vector<Index>(built.system.state_count()),
                                std::vector<Index>(built.system.action_count())},
                       Morphism{built.system, y, std::vector<Index>(built.system.state_count()),
                                std::vector<Index>(built.system.action_count())},
                       {},
                       {}};
  for (Index s = 0; s < x.state_count(); ++s)
    for (Index t = 0; t < ny; ++t) {
      Index k = built.state_index[state[s * ny + t]];
      result.first.state_map[k] = s;
      result.second.state_map[k] = t;
      result.state_pair.push_back(k);
    }
  for (const auto& [uv, local] : action) {
    Index k = built.action_index[local];
    result.first.action_map[k] = uv.first;
    result.second.action_map[k] = uv.second;
    result.action_pair[uv] = k;
  }
  return result;
}

Morphism pairing(const ProductResult& p, const Morphism& f, const Morphism& g) {
  if (!(f.source == g.source) || !(f.target == p.first.target) || !(g.target == p.second.target))
    throw ArgumentError("pairing needs a cone over the product's factors");
  const std::size_t ny = p.second.target.state_count();
  Morphism h{f.source, p.system, {}, {}};
  for (Index s = 0; s < f.source.state_count(); ++s)
    h.state_map.push_back(p.state_pair[f.state_map[s] * ny + g.state_map[s]]);
  for (Index a = 0; a < f.source.action_count(); ++a) {
    auto it = p.action_pair.find({f.action_map[a], g.action_map[a]});
    if (it == p.action_pair.end()) throw ArgumentError("cone legs disagree on labels");
    h.action_map.push_back(it->second);
  }
  return h;
}

Cocone coproduct(const Alphabet& sigma, const std::vector<TransitionSystem>& xs) {
  Diagram d{sigma, xs, {}};
  return colimit(d, Variant::wts);
}

Cocone colimit(const Diagram& d, Variant variant) {
  for (const auto& x : d.objects)
    if (!(x.alphabet() == d.sigma)) throw ArgumentError("diagram objects over different alphabets");
  for (const auto& arrow : d.arrows) {
    if (arrow.from >= d.objects.size() || arrow.to >= d.objects.size())
      throw ArgumentError("diagram arrow between unknown objects");
    if (!(arrow.map.source == d.objects[arrow.from]) || !(arrow.map.target == d.objects[arrow.to]))
      throw ArgumentError("diagram arrow does not match its objects");
    auto report = check_morphism(arrow.map);
    if (!report.ok()) throw ArgumentError("diagram arrow is not a morphism: " + report.violations[0].detail);
  }
  if (variant != Variant::wts)
    for (const auto& x : d.objects) require_variant(x, variant, "colimit");

  std::vector<Index> state_offset, action_offset;
  std::size_t states = 0, actions = 0;
  for (const auto& x : d.objects) {
    state_offset.push_back(static_cast<Index>(states));
    action_offset.push_back(static_cast<Index>(actions));
    states += x.state_count();
    actions += x.action_count();
  }
  detail::UnionFind su(states), au(actions);
  for (const auto& arrow : d.arrows) {
    for (Index s = 0; s < arrow.map.state_map.size(); ++s)
      su.unite(state_offset[arrow.from] + s, state_offset[arrow.to] + arrow.map.state_map[s]);
    for (Index a = 0; a < arrow.map.action_map.size(); ++a)
      au.unite(action_offset[arrow.from] + a, action_offset[arrow.to] + arrow.map.action_map[a]);
  }

  SystemBuilder b(d.sigma);
  std::vector<Index> state_local(states), action_local(actions);
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const auto& x = d.objects[i];
    for (Index s = 0; s < x.state_count(); ++s) {
      Index g = state_offset[i] + s;
      if (su.find(g) == g) state_local[g] = b.add_state(tagged(i, x.state_name(s)));
    }
    for (Index a = 0; a < x.action_count(); ++a) {
      Index g = action_offset[i] + a;
      if (au.find(g) == g) action_local[g] = b.add_action_with_label(tagged(i, x.action_name(a)), x.action_label(a));
    }
  }
  auto state_of = [&](std::size_t i, Index s) { return state_local[su.find(state_offset[i] + s)]; };
  auto action_of = [&](std::size_t i, Index a) { return action_local[au.find(action_offset[i] + a)]; };
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    for (const auto& t : d.objects[i].transitions()) {
      Transition r{state_of(i, t.source), {}, state_of(i, t.target)};
      for (Index a : t.actions) r.actions.push_back(action_of(i, a));
      b.add_transition(std::move(r));
    }
  auto built = std::move(b).build(true);

  Cocone c{built.system, {}};
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const auto& x = d.objects[i];
    Morphism leg{x, built.system, {}, {}};
    for (Index s = 0; s < x.state_count(); ++s) leg.state_map.push_back(built.state_index[state_of(i, s)]);
    for (Index a = 0; a < x.action_count(); ++a) leg.action_map.push_back(built.action_index[action_of(i, a)]);
    c.legs.push_back(std::move(leg));
  }

  if (variant == Variant::cts && !is_cubical(c.apex))
    throw std::logic_error("colimit of cubical systems is not cubical");
  if (variant == Variant::rts) {
    Reflection r = regularize(c.apex);
    for (auto& leg : c.legs) leg = compose(r.unit, leg);
    c.apex = r.system;
  }
  return c;
}

bool is_cocone(const Diagram& d, const Cocone& c) {
  if (c.legs.size() != d.objects.size()) return false;
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    if (!(c.legs[i].source == d.objects[i]) || !(c.legs[i].target == c.apex)) return false;
    if (!check_morphism(c.legs[i]).ok()) return false;
  }
  for (const auto& arrow : d.arrows)
    if (!(compose(c.legs[arrow.to], arrow.map) == c.legs[arrow.from])) return false;
  return true;
}

Morphism factor_through(const Diagram& d, const Cocone& colim, const Cocone& other) {
  if (!is_cocone(d, other)) throw ArgumentError("not a cocone over the diagram");
  constexpr Index unset = static_cast<Index>(-1);
  Morphism u{colim.apex, other.apex, std::vector<Index>(colim.apex.state_count(), unset),
             std::vector<Index>(colim.apex.action_count(), unset)};
  auto assign = [](std::vector<Index>& map, Index at, Index value) {
    if (map[at] != unset && map[at] != value) throw ArgumentError("cocone does not factor: legs disagree");
    map[at] = value;
  };
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    for (Index s = 0; s < d.objects[i].state_count(); ++s)
      assign(u.state_map, colim.legs[i].state_map[s], other.legs[i].state_map[s]);
    for (Index a = 0; a < d.objects[i].action_count(); ++a)
      assign(u.action_map, colim.legs[i].action_map[a], other.legs[i].action_map[a]);
  }
  if (std::find(u.state_map.begin(), u.state_map.end(), unset) != u.state_map.end() ||
      std::find(u.action_map.begin(), u.action_map.end(), unset) != u.action_map.end())
    throw std::logic_error("colimit legs are not jointly surjective");
  if (!check_morphism(u).ok()) throw ArgumentError("induced map does not preserve transitions");
  return u;
}

Cocone pushout(const Morphism& f, const Morphism& g, Variant variant) {
  if (!(f.source == g.source)) throw ArgumentError("pushout of maps with different sources");
  Diagram d{f.source.alphabet(), {f.source, f.target, g.target}, {{0, 1, f}, {0, 2, g}}};
  return colimit(d, variant);
}

Morphism coproduct_map(const Alphabet& sigma, const std::vector<Morphism>& maps) {
  std::vector<TransitionSystem> sources, targets;
  for (const auto& m : maps) {
    sources.push_back(m.source);
    targets.push_back(m.target);
  }
  Cocone from = coproduct(sigma, sources);
  Cocone to = coproduct(sigma, targets);
  Cocone other{to.apex, {}};
  for (std::size_t i = 0; i < maps.size(); ++i) other.legs.push_back(compose(to.legs[i], maps[i]));
  return factor_through(Diagram{sigma, sources, {}}, from, other);
}

std::string to_string(StarWhich which) {
  switch (which) {
    case StarWhich::gamma0: return "gamma0";
    case StarWhich::gamma1: return "gamma1";
    case StarWhich::gamma: return "gamma";
  }
  return "?";
}

StarProduct star_product(const Morphism& f, StarWhich which) {
  const Alphabet& sigma = f.source.alphabet();
  Cylinder ca = cylinder(f.source);
  Cylinder cb = cylinder(f.target);
  Morphism cf = cylinder_map(f);
  Diagram d{sigma, {}, {}};
  Cocone other{cb.system, {}};
  if (which == StarWhich::gamma) {
    Morphism ff = coproduct_map(sigma, {f, f});
    Morphism ga = cylinder_gamma(f.source);
    Morphism gb = cylinder_gamma(f.target);
    d.objects = {ff.source, ff.target, ca.system};
    d.arrows = {{0, 1, ff}, {0, 2, ga}};
    other.legs = {compose(gb, ff), gb, cf};
  } else {
    const Morphism& ga = which == StarWhich::gamma0 ? ca.gamma0 : ca.gamma1;
    const Morphism& gb = which == StarWhich::gamma0 ? cb.gamma0 : cb.gamma1;
    d.objects = {f.source, f.target, ca.system};
    d.arrows = {{0, 1, f}, {0, 2, ga}};
    other.legs = {compose(gb, f), gb, cf};
  }
  Cocone corner = colimit(d, Variant::wts);
  Morphism map = factor_through(d, corner, other);
  if (is_mono(f).mono && !is_mono(map).mono)
    throw std::logic_error("pushout-product of a monomorphism is not a monomorphism");
  return StarProduct{std::move(corner), std::move(map)};
}

}  // namespace hdts
