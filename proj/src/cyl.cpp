#include "hdts/cyl.hpp"

#include <map>
#include <stdexcept>

#include "hdts/catops.hpp"

namespace hdts {

namespace {

std::string side_name(const std::string& base, int e) { return "(" + base + "," + std::to_string(e) + ")"; }

}  // namespace

Cylinder cylinder(const TransitionSystem& x) {
  SystemBuilder b(x.alphabet());
  std::vector<Index> state(2 * x.state_count()), action(2 * x.action_count());
  for (Index s = 0; s < x.state_count(); ++s)
    for (int e = 0; e < 2; ++e) state[2 * s + e] = b.add_state(side_name(x.state_name(s), e));
  for (Index a = 0; a < x.action_count(); ++a)
    for (int e = 0; e < 2; ++e)
      action[2 * a + e] = b.add_action_with_label(side_name(x.action_name(a), e), x.action_label(a));
  for (const auto& t : x.transitions()) {
    const std::size_t n = t.dimension();
    // bit 0: source side, bits 1..n: action sides, bit n+1: target side
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n + 2)); ++mask) {
      auto bit = [mask](std::size_t i) { return static_cast<Index>((mask >> i) & 1); };
      Transition r{state[2 * t.source + bit(0)], {}, state[2 * t.target + bit(n + 1)]};
      for (std::size_t i = 0; i < n; ++i) r.actions.push_back(action[2 * t.actions[i] + bit(i + 1)]);
      b.add_transition(std::move(r));
    }
  }
  auto built = std::move(b).build();
  Cylinder c{built.system,
             Morphism{x, built.system, {}, {}},
             Morphism{x, built.system, {}, {}},
             Morphism{built.system, x, std::vector<Index>(built.system.state_count()),
                      std::vector<Index>(built.system.action_count())},
             {},
             {}};
  for (auto& s : state) c.state.push_back(built.state_index[s]);
  for (auto& a : action) c.action.push_back(built.action_index[a]);
  for (Index s = 0; s < x.state_count(); ++s) {
    c.gamma0.state_map.push_back(c.state[2 * s]);
    c.gamma1.state_map.push_back(c.state[2 * s + 1]);
    c.sigma.state_map[c.state[2 * s]] = s;
    c.sigma.state_map[c.state[2 * s + 1]] = s;
  }
  for (Index a = 0; a < x.action_count(); ++a) {
    c.gamma0.action_map.push_back(c.action[2 * a]);
    c.gamma1.action_map.push_back(c.action[2 * a + 1]);
    c.sigma.action_map[c.action[2 * a]] = a;
    c.sigma.action_map[c.action[2 * a + 1]] = a;
  }
  if (!(compose(c.sigma, c.gamma0) == identity(x)) || !(compose(c.sigma, c.gamma1) == identity(x)))
    throw std::logic_error("cylinder projection is not a retraction");
  return c;
}

Morphism cylinder_map(const Morphism& f) {
  Cylinder ca = cylinder(f.source);
  Cylinder cb = cylinder(f.target);
  Morphism g{ca.system, cb.system, std::vector<Index>(ca.system.state_count()),
             std::vector<Index>(ca.system.action_count())};
  for (Index s = 0; s < f.source.state_count(); ++s)
    for (Index e = 0; e < 2; ++e) g.state_map[ca.state[2 * s + e]] = cb.state[2 * f.state_map[s] + e];
  for (Index a = 0; a < f.source.action_count(); ++a)
    for (Index e = 0; e < 2; ++e) g.action_map[ca.action[2 * a + e]] = cb.action[2 * f.action_map[a] + e];
  return g;
}

Morphism cylinder_gamma(const TransitionSystem& x) {
  Cylinder c = cylinder(x);
  Diagram d{x.alphabet(), {x, x}, {}};
  Cocone sum = colimit(d, Variant::wts);
  return factor_through(d, sum, Cocone{c.system, {c.gamma0, c.gamma1}});
}

Cocylinder cocylinder(const TransitionSystem& x) {
  SystemBuilder b(x.alphabet());
  const std::size_t ns = x.state_count();
  std::vector<Index> state(ns * ns);
  for (Index s = 0; s < ns; ++s)
    for (Index t = 0; t < ns; ++t)
      state[s * ns + t] = b.add_state("(" + x.state_name(s) + "," + x.state_name(t) + ")");
  std::map<std::pair<Index, Index>, Index> action;
  for (Index u = 0; u < x.action_count(); ++u)
    for (Index v = 0; v < x.action_count(); ++v)
      if (x.action_label(u) == x.action_label(v))
        action[{u, v}] = b.add_action_with_label("(" + x.action_name(u) + "," + x.action_name(v) + ")",
                                                 x.action_label(u));

  std::map<std::vector<Index>, std::vector<const Transition*>> by_word;
  for (const auto& t : x.transitions()) by_word[x.label_word(t)].push_back(&t);
  Transition probe;
  for (const auto& [word, group] : by_word) {
    const std::size_t n = word.size();
    for (const Transition* t0 : group) {
      for (const Transition* t1 : group) {
        const Transition* side[2] = {t0, t1};
        bool all = true;
        for (std::size_t mask = 0; all && mask < (std::size_t{1} << (n + 2)); ++mask) {
          auto bit = [mask](std::size_t i) { return (mask >> i) & 1; };
          probe.source = side[bit(0)]->source;
          probe.target = side[bit(n + 1)]->target;
          probe.actions.resize(n);
          for (std::size_t i = 0; i < n; ++i) probe.actions[i] = side[bit(i + 1)]->actions[i];
          all = x.contains(probe);
        }
        if (!all) continue;
        Transition r{state[t0->source * ns + t1->source], {}, state[t0->target * ns + t1->target]};
        for (std::size_t i = 0; i < n; ++i) r.actions.push_back(action.at({t0->actions[i], t1->actions[i]}));
        b.add_transition(std::move(r));
      }
    }
  }
  auto built = std::move(b).build();
  Cocylinder c{built.system,
               Morphism{built.system, x, std::vector<Index>(built.system.state_count()),
                        std::vector<Index>(built.system.action_count())},
               Morphism{built.system, x, std::vector<Index>(built.system.state_count()),
                        std::vector<Index>(built.system.action_count())},
               {},
               {}};
  for (Index s = 0; s < ns; ++s)
    for (Index t = 0; t < ns; ++t) {
      Index k = built.state_index[state[s * ns + t]];
      c.state.push_back(k);
      c.pi0.state_map[k] = s;
      c.pi1.state_map[k] = t;
    }
  for (const auto& [uv, local] : action) {
    Index k = built.action_index[local];
    c.action[uv] = k;
    c.pi0.action_map[k] = uv.first;
    c.pi1.action_map[k] = uv.second;
  }
  return c;
}

Morphism transpose(const Cylinder& cx, const Cocylinder& cy, const Morphism& f) {
  if (!(f.source == cx.system)) throw ArgumentError("transpose expects a map out of the cylinder");
  if (!(f.target == cy.pi0.target)) throw ArgumentError("transpose target mismatch");
  const TransitionSystem& x = cx.gamma0.source;
  const std::size_t ny = f.target.state_count();
  Morphism g{x, cy.system, {}, {}};
  for (Index s = 0; s < x.state_count(); ++s)
    g.state_map.push_back(cy.state[f.state_map[cx.state[2 * s]] * ny + f.state_map[cx.state[2 * s + 1]]]);
  for (Index a = 0; a < x.action_count(); ++a) {
    auto it = cy.action.find({f.action_map[cx.action[2 * a]], f.action_map[cx.action[2 * a + 1]]});
    if (it == cy.action.end()) throw ArgumentError("transpose of a map that does not preserve labels");
    g.action_map.push_back(it->second);
  }
  return g;
}

Morphism untranspose(const Cylinder& cx, const Cocylinder& cy, const Morphism& g) {
  if (!(g.target == cy.system)) throw ArgumentError("untranspose expects a map into the cocylinder");
  if (!(g.source == cx.gamma0.source)) throw ArgumentError("untranspose source mismatch");
  const TransitionSystem& y = cy.pi0.target;
  Morphism f{cx.system, y, std::vector<Index>(cx.system.state_count()),
             std::vector<Index>(cx.system.action_count())};
  for (Index s = 0; s < g.source.state_count(); ++s) {
    f.state_map[cx.state[2 * s]] = cy.pi0.state_map[g.state_map[s]];
    f.state_map[cx.state[2 * s + 1]] = cy.pi1.state_map[g.state_map[s]];
  }
  for (Index a = 0; a < g.source.action_count(); ++a) {
    f.action_map[cx.action[2 * a]] = cy.pi0.action_map[g.action_map[a]];
    f.action_map[cx.action[2 * a + 1]] = cy.pi1.action_map[g.action_map[a]];
  }
  return f;
}

Morphism transpose(const TransitionSystem& x, const Morphism& f) {
  Cylinder cx = cylinder(x);
  if (!(f.source == cx.system)) throw ArgumentError("transpose expects a map out of the cylinder");
  return transpose(cx, cocylinder(f.target), f);
}

Morphism untranspose(const TransitionSystem& y, const Morphism& g) {
  Cocylinder cy = cocylinder(y);
  if (!(g.target == cy.system)) throw ArgumentError("untranspose expects a map into the cocylinder");
  return untranspose(cylinder(g.source), cy, g);
}

QuotientCylinder quotient_cyl(const TransitionSystem& x, const StateSet& z) {
  for (Index s : z)
    if (s >= x.state_count()) throw ArgumentError("quotient by a state outside the system");
  Cylinder c = cylinder(x);
  StateSet kept;
  for (Index s = 0; s < x.state_count(); ++s) {
    kept.insert(c.state[2 * s]);
    if (!z.contains(s)) kept.insert(c.state[2 * s + 1]);
  }
  TransitionSystem q = restrict(c.system, kept);
  Morphism projection{c.system, q, std::vector<Index>(c.system.state_count()), {}};
  for (Index s = 0; s < x.state_count(); ++s)
    for (Index e = 0; e < 2; ++e) {
      Index side = z.contains(s) ? c.state[2 * s] : c.state[2 * s + e];
      projection.state_map[c.state[2 * s + e]] = q.state_index(c.system.state_name(side));
    }
  for (Index a = 0; a < c.system.action_count(); ++a)
    projection.action_map.push_back(q.action_index(c.system.action_name(a)));
  Morphism section = inclusion(q, c.system);
  if (!(compose(projection, section) == identity(q)))
    throw std::logic_error("cylinder quotient section is not a section");
  return QuotientCylinder{q, std::move(projection), std::move(section)};
}

StateSet internal_states(const TransitionSystem& x) {
  StateSet out;
  DivisionIndex index(x.transitions());
  for (const auto& t : x.transitions())
    for (std::size_t p = 1; p < t.dimension(); ++p)
      for (Index s : index.dividers(t, p)) out.insert(s);
  return out;
}

}  // namespace hdts
