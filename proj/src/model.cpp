#include "hdts/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hdts/cyl.hpp"
#include "hdts/generators.hpp"
#include "hdts/search.hpp"
#include "hdts/subcats.hpp"
#include "union_find.hpp"

namespace hdts {

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

std::vector<std::vector<std::string>> words_upto(const Alphabet& sigma, int d) {
  std::vector<std::vector<std::string>> out, layer{{}};
  for (int len = 1; len <= d; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& w : layer)
      for (const auto& x : sigma.labels()) {
        auto v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string join(const std::vector<std::string>& w) {
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : ",") + x;
  return s;
}

// Element-wise inverse of a map bijective on states and actions; the
// result need not preserve transitions.
Morphism invert_elements(const Morphism& f) {
  Morphism g{f.target, f.source, std::vector<Index>(f.target.state_count()),
             std::vector<Index>(f.target.action_count())};
  for (Index s = 0; s < f.source.state_count(); ++s) g.state_map[f.state_map[s]] = s;
  for (Index a = 0; a < f.source.action_count(); ++a) g.action_map[f.action_map[a]] = a;
  return g;
}

bool bijective(const Morphism& f) {
  return f.source.state_count() == f.target.state_count() &&
         f.source.action_count() == f.target.action_count() && is_mono(f).mono;
}

// Search for a map out of j.target whose restriction along j is `fixed`,
// with the remaining elements restricted by `allowed_state` / `allowed_action`.
template <class StateOk, class ActionOk>
std::optional<Morphism> solve_extension(const Morphism& j, const Morphism& fixed,
                                        const TransitionSystem& into, StateOk allowed_state,
                                        ActionOk allowed_action) {
  const TransitionSystem& b = j.target;
  SearchProblem p = default_problem(b, into);
  std::vector<Index> forced_s(b.state_count(), kUnset), forced_a(b.action_count(), kUnset);
  for (Index s = 0; s < j.source.state_count(); ++s) {
    Index& slot = forced_s[j.state_map[s]];
    if (slot != kUnset && slot != fixed.state_map[s]) return std::nullopt;
    slot = fixed.state_map[s];
  }
  for (Index a = 0; a < j.source.action_count(); ++a) {
    Index& slot = forced_a[j.action_map[a]];
    if (slot != kUnset && slot != fixed.action_map[a]) return std::nullopt;
    slot = fixed.action_map[a];
  }
  for (Index s = 0; s < b.state_count(); ++s) {
    if (forced_s[s] != kUnset) {
      p.state_domains[s] = {forced_s[s]};
    } else {
      auto& dom = p.state_domains[s];
      dom.erase(std::remove_if(dom.begin(), dom.end(), [&](Index x) { return !allowed_state(s, x); }),
                dom.end());
    }
  }
  for (Index a = 0; a < b.action_count(); ++a) {
    if (forced_a[a] != kUnset) {
      if (into.action_label_name(forced_a[a]) != b.action_label_name(a)) return std::nullopt;
      p.action_domains[a] = {forced_a[a]};
    } else {
      auto& dom = p.action_domains[a];
      dom.erase(std::remove_if(dom.begin(), dom.end(), [&](Index x) { return !allowed_action(a, x); }),
                dom.end());
    }
  }
  std::optional<Morphism> found;
  search_morphisms(p, [&](const std::vector<Index>& s, const std::vector<Index>& a) {
    found = Morphism{b, into, s, a};
    return false;
  });
  return found;
}

struct PendingCell {
  Cell cell;
  std::string tag;
};

struct AttachAllResult {
  TransitionSystem system;
  Morphism insertion;
  std::vector<Morphism> cells;
};

// Simultaneous pushout of several cells along the same stage.
AttachAllResult attach_all(const TransitionSystem& stage, const std::vector<PendingCell>& cells) {
  for (const auto& pc : cells) {
    const Cell& c = pc.cell;
    if (!(c.attaching.target == stage)) throw ArgumentError("attaching map does not land in the current stage");
    if (!(c.attaching.source == c.generator.source)) throw ArgumentError("attaching map and generator disagree");
    if (!check_morphism(c.attaching).ok()) throw ArgumentError("attaching map is not a morphism");
    if (!check_morphism(c.generator).ok()) throw ArgumentError("generator is not a morphism");
  }
  std::vector<Index> state_off, action_off;
  std::size_t ns = stage.state_count(), na = stage.action_count();
  for (const auto& pc : cells) {
    state_off.push_back(static_cast<Index>(ns));
    action_off.push_back(static_cast<Index>(na));
    ns += pc.cell.generator.target.state_count();
    na += pc.cell.generator.target.action_count();
  }
  detail::UnionFind su(ns), au(na);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i].cell;
    for (Index u = 0; u < c.generator.source.state_count(); ++u)
      su.unite(c.attaching.state_map[u], state_off[i] + c.generator.state_map[u]);
    for (Index u = 0; u < c.generator.source.action_count(); ++u)
      au.unite(c.attaching.action_map[u], action_off[i] + c.generator.action_map[u]);
  }
  std::set<std::string> taken(stage.state_names().begin(), stage.state_names().end());
  std::set<std::string> taken_actions;
  for (Index a = 0; a < stage.action_count(); ++a) taken_actions.insert(stage.action_name(a));
  auto fresh = [](std::set<std::string>& used, std::string name) {
    while (!used.insert(name).second) name += "'";
    return name;
  };

  SystemBuilder b(stage.alphabet());
  std::vector<Index> sl(ns, kUnset), al(na, kUnset);
  // Roots are least indices, so a class meeting the stage is named after
  // its least-named stage member.
  for (Index s = 0; s < stage.state_count(); ++s)
    if (su.find(s) == s) sl[s] = b.add_state(stage.state_name(s));
  for (Index a = 0; a < stage.action_count(); ++a)
    if (au.find(a) == a) al[a] = b.add_action_with_label(stage.action_name(a), stage.action_label(a));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const TransitionSystem& w = cells[i].cell.generator.target;
    for (Index s = 0; s < w.state_count(); ++s) {
      Index g = state_off[i] + s;
      if (su.find(g) == g) sl[g] = b.add_state(fresh(taken, cells[i].tag + ":" + w.state_name(s)));
    }
    for (Index a = 0; a < w.action_count(); ++a) {
      Index g = action_off[i] + a;
      if (au.find(g) == g)
        al[g] = b.add_action_with_label(fresh(taken_actions, cells[i].tag + ":" + w.action_name(a)),
                                        w.action_label(a));
    }
  }
  auto push = [&](const Transition& t, Index soff, Index aoff) {
    Transition r{sl[su.find(soff + t.source)], {}, sl[su.find(soff + t.target)]};
    for (Index a : t.actions) r.actions.push_back(al[au.find(aoff + a)]);
    b.add_transition(std::move(r));
  };
  for (const auto& t : stage.transitions()) push(t, 0, 0);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const auto& t : cells[i].cell.generator.target.transitions()) push(t, state_off[i], action_off[i]);
  auto built = std::move(b).build(true);

  auto leg = [&](const TransitionSystem& from, Index soff, Index aoff) {
    Morphism m{from, built.system, {}, {}};
    for (Index s = 0; s < from.state_count(); ++s) m.state_map.push_back(built.state_index[sl[su.find(soff + s)]]);
    for (Index a = 0; a < from.action_count(); ++a)
      m.action_map.push_back(built.action_index[al[au.find(aoff + a)]]);
    return m;
  };
  AttachAllResult out{built.system, leg(stage, 0, 0), {}};
  for (std::size_t i = 0; i < cells.size(); ++i)
    out.cells.push_back(leg(cells[i].cell.generator.target, state_off[i], action_off[i]));
  return out;
}

// Re-targets a map into `from` to the system `to` by state and action names.
Morphism retarget_by_name(const Morphism& f, const TransitionSystem& to) {
  Morphism g{f.source, to, {}, {}};
  for (Index s : f.state_map) g.state_map.push_back(to.state_index(f.target.state_name(s)));
  for (Index a : f.action_map) g.action_map.push_back(to.action_index(f.target.action_name(a)));
  return g;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::I_CTS: return "I_CTS";
    case Family::I_RTS: return "I_RTS";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "I") return Family::I;
  if (text == "I_CTS") return Family::I_CTS;
  if (text == "I_RTS") return Family::I_RTS;
  throw ArgumentError("unknown generating set '" + std::string(text) + "' (expected I, I_CTS or I_RTS)");
}

Family family_for(Variant v) { return v == Variant::wts ? Family::I : Family::I_CTS; }

GeneratingSet generating_set(Family family, const Alphabet& sigma, int d) {
  if (d < 1) throw ArgumentError("generating sets need a dimension bound of at least 1");
  GeneratingSet gs{family, {}};
  gs.members.push_back({"point", from_empty(point(sigma))});
  const auto words = words_upto(sigma, d);
  if (family == Family::I) {
    for (const auto& x : sigma.labels()) gs.members.push_back({"action(" + x + ")", from_empty(action_object(sigma, x))});
    for (const auto& w : words) gs.members.push_back({"pure(" + join(w) + ")", pure_cube_inclusion(sigma, w)});
  } else {
    for (const auto& w : words) gs.members.push_back({"boundary(" + join(w) + ")", boundary_inclusion(sigma, w)});
    for (const auto& x : sigma.labels()) gs.members.push_back({"double(" + x + ")", double_inclusion(sigma, x)});
  }
  return gs;
}

namespace {

CofibrationVerdict regular_cofibration(const Morphism& f) {
  CofibrationVerdict v;
  v.procedure =
      "build the largest system W over the target's actions whose states are the source states plus "
      "the target states outside the image and whose transitions are all tuples mapped to target "
      "transitions; take the cubical part Wc; accept when the source embeds in Wc and the regular "
      "reflection of Wc is isomorphic to the target under the source";
  v.note =
      "sound: an accepted map is the regular reflection of a monomorphism of cubical systems, which "
      "is generated by I_CTS; a rejection is not a proof that the map lies outside the class";
  const TransitionSystem& a = f.source;
  const TransitionSystem& b = f.target;
  if (!is_regular(a) || !is_regular(b)) {
    v.witness = "source or target is not regular";
    return v;
  }
  if (auto m = is_mono(f); m.collapsed_actions) {
    v.witness = "actions " + a.action_name(m.collapsed_actions->first) + " and " +
                a.action_name(m.collapsed_actions->second) + " have the same image";
    return v;
  }
  std::vector<bool> hit(b.state_count(), false);
  for (Index s : f.state_map) hit[s] = true;
  SystemBuilder wb(b.alphabet());
  std::vector<std::vector<Index>> pre(b.state_count());
  std::vector<Index> from_source(a.state_count());
  for (Index s = 0; s < a.state_count(); ++s) {
    from_source[s] = wb.add_state("0:" + a.state_name(s));
    pre[f.state_map[s]].push_back(from_source[s]);
  }
  for (Index s = 0; s < b.state_count(); ++s)
    if (!hit[s]) pre[s].push_back(wb.add_state("1:" + b.state_name(s)));
  for (Index u = 0; u < b.action_count(); ++u) wb.add_action_with_label(b.action_name(u), b.action_label(u));
  for (const auto& t : b.transitions())
    for (Index s : pre[t.source])
      for (Index e : pre[t.target]) wb.add_transition(Transition{s, t.actions, e});
  auto built = std::move(wb).build();
  TransitionSystem w = built.system;
  Morphism pi{w, b, std::vector<Index>(w.state_count()), {}};
  for (Index s = 0; s < b.state_count(); ++s)
    for (Index local : pre[s]) pi.state_map[built.state_index[local]] = s;
  for (Index u = 0; u < b.action_count(); ++u) pi.action_map.push_back(built.action_index[u]);

  TransitionSystem wc = is_cubical(w) ? w : cubicalify(w).system;
  Morphism i{a, wc, {}, {}};
  for (Index s = 0; s < a.state_count(); ++s) i.state_map.push_back(wc.state_index(w.state_name(built.state_index[from_source[s]])));
  for (Index u = 0; u < a.action_count(); ++u) {
    auto id = wc.find_action(b.action_name(f.action_map[u]));
    if (!id) {
      v.witness = "action " + a.action_name(u) + " is lost in the cubical part";
      return v;
    }
    i.action_map.push_back(*id);
  }
  if (!check_morphism(i).ok() || !is_mono(i).mono) {
    v.witness = "the source does not embed in the cubical part";
    return v;
  }
  Reflection r = regularize(wc);
  Morphism h{r.system, b, std::vector<Index>(r.system.state_count(), kUnset), {}};
  for (Index s = 0; s < wc.state_count(); ++s) {
    Index image = pi.state_map[w.state_index(wc.state_name(s))];
    Index& slot = h.state_map[r.unit.state_map[s]];
    if (slot != kUnset && slot != image) {
      v.witness = "the regular reflection identifies states that the target keeps apart";
      return v;
    }
    slot = image;
  }
  for (Index u = 0; u < r.system.action_count(); ++u) h.action_map.push_back(b.action_index(r.system.action_name(u)));
  if (!is_isomorphism(h)) {
    v.witness = "the regular reflection of the cubical part is not isomorphic to the target";
    return v;
  }
  if (!(compose(h, compose(r.unit, i)) == f)) {
    v.witness = "the comparison does not commute with the map";
    return v;
  }
  v.cofibration = true;
  return v;
}

}  // namespace

CofibrationVerdict is_cofibration(const Morphism& f, Variant variant) {
  require_well_formed(f);
  if (variant == Variant::rts) return regular_cofibration(f);
  CofibrationVerdict v;
  v.procedure = "injective on states and on actions";
  v.note = "exact: the cofibrations are the monomorphisms";
  auto m = is_mono(f);
  v.cofibration = m.mono;
  if (m.collapsed_states)
    v.witness = "states " + f.source.state_name(m.collapsed_states->first) + " and " +
                f.source.state_name(m.collapsed_states->second) + " have the same image";
  else if (m.collapsed_actions)
    v.witness = "actions " + f.source.action_name(m.collapsed_actions->first) + " and " +
                f.source.action_name(m.collapsed_actions->second) + " have the same image";
  return v;
}

std::optional<Morphism> lift(const LiftingProblem& p) {
  for (const Morphism* m : {&p.f, &p.g, &p.top, &p.bottom})
    if (!check_morphism(*m).ok()) throw ArgumentError("lifting problem contains a map that is not a morphism");
  if (!(compose(p.g, p.top) == compose(p.bottom, p.f))) throw ArgumentError("the lifting square does not commute");
  return solve_extension(
      p.f, p.top, p.g.source,
      [&](Index b, Index x) { return p.g.state_map[x] == p.bottom.state_map[b]; },
      [&](Index b, Index x) { return p.g.action_map[x] == p.bottom.action_map[b]; });
}

std::optional<Morphism> extend(const Morphism& j, const Morphism& top) {
  if (!(j.source == top.source)) throw ArgumentError("extension along a map with another source");
  return solve_extension(
      j, top, top.target, [](Index, Index) { return true; }, [](Index, Index) { return true; });
}

RFactorization factor_R(const Morphism& f) {
  require_well_formed(f);
  const TransitionSystem& a = f.source;
  detail::UnionFind uf(a.state_count());
  std::vector<Index> first(f.target.state_count(), kUnset);
  for (Index s = 0; s < a.state_count(); ++s) {
    Index& slot = first[f.state_map[s]];
    if (slot == kUnset) slot = s;
    else uf.unite(slot, s);
  }
  SystemBuilder b(a.alphabet());
  std::vector<Index> local(a.state_count(), kUnset);
  for (Index s = 0; s < a.state_count(); ++s)
    if (uf.find(s) == s) local[s] = b.add_state(a.state_name(s));
  for (Index u = 0; u < a.action_count(); ++u) b.add_action_with_label(a.action_name(u), a.action_label(u));
  for (const auto& t : a.transitions())
    b.add_transition(Transition{local[uf.find(t.source)], t.actions, local[uf.find(t.target)]});
  auto built = std::move(b).build(true);
  const TransitionSystem& mid = built.system;
  Morphism minus{a, mid, {}, {}};
  for (Index s = 0; s < a.state_count(); ++s) minus.state_map.push_back(built.state_index[local[uf.find(s)]]);
  for (Index u = 0; u < a.action_count(); ++u) minus.action_map.push_back(built.action_index[u]);
  Morphism plus{mid, f.target, std::vector<Index>(mid.state_count()), std::vector<Index>(mid.action_count())};
  for (Index s = 0; s < a.state_count(); ++s) plus.state_map[minus.state_map[s]] = f.state_map[s];
  for (Index u = 0; u < a.action_count(); ++u) plus.action_map[minus.action_map[u]] = f.action_map[u];
  if (!check_morphism(plus).ok()) throw ArgumentError("factor_R expects a morphism");
  return RFactorization{std::move(minus), std::move(plus)};
}

bool is_r_generator(const Morphism& g) {
  return g.source.state_count() == 2 && g.source.action_count() == 0 && g.source.transition_count() == 0 &&
         g.target.state_count() == 1 && g.target.action_count() == 0 && g.target.transition_count() == 0;
}

AttachResult attach(const TransitionSystem& stage, const Cell& cell, const std::string& tag) {
  auto r = attach_all(stage, {PendingCell{cell, tag}});
  return AttachResult{r.system, r.insertion, r.cells.front()};
}

namespace {

struct FullRealization {
  std::vector<TransitionSystem> stages;
  std::vector<Morphism> steps;  // stage k -> stage k+1
  std::vector<Morphism> cells;  // W_k -> stage k+1
};

FullRealization realize_full(const CellularDecomposition& d) {
  FullRealization r;
  r.stages.push_back(d.base);
  for (std::size_t k = 0; k < d.cells.size(); ++k) {
    auto a = attach(r.stages.back(), d.cells[k], std::to_string(k + 1));
    r.stages.push_back(a.system);
    r.steps.push_back(a.insertion);
    r.cells.push_back(a.cell);
  }
  return r;
}

}  // namespace

Realization realize(const CellularDecomposition& d) {
  FullRealization r = realize_full(d);
  Morphism composite = identity(d.base);
  for (const auto& s : r.steps) composite = compose(s, composite);
  return Realization{r.stages, composite};
}

Relocation relocate(const CellularDecomposition& d) {
  for (std::size_t k = 0; k < d.cells.size(); ++k) {
    const Morphism& g = d.cells[k].generator;
    if (!is_r_generator(g) && !is_injective_on_states(g))
      throw PreconditionError("cell " + std::to_string(k + 1) + " is neither R nor injective on states");
  }
  FullRealization x = realize_full(d);
  const std::size_t m = d.cells.size();
  // into_last[k] : stage k -> last stage
  std::vector<Morphism> into_last(m + 1, identity(x.stages.back()));
  for (std::size_t k = m; k-- > 0;) into_last[k] = compose(into_last[k + 1], x.steps[k]);
  const TransitionSystem& last = x.stages.back();
  const Alphabet& sigma = d.base.alphabet();

  CellularDecomposition result{d.base, d.family, {}};
  std::size_t r_cells = 0;
  TransitionSystem y = d.base;
  Morphism base_to_y = identity(d.base);
  auto push_cell = [&](const Cell& c) {
    auto a = attach(y, c, std::to_string(result.cells.size() + 1));
    result.cells.push_back(c);
    y = a.system;
    base_to_y = compose(a.insertion, base_to_y);
    return a;
  };

  // R-cells for the kernel of base -> last stage.
  Morphism r = r_map(sigma);
  {
    std::map<Index, Index> first;  // class -> first base state
    for (Index s = 0; s < d.base.state_count(); ++s) {
      auto [it, fresh] = first.emplace(into_last[0].state_map[s], s);
      if (fresh) continue;
      Morphism at{r.source, y, {base_to_y.state_map[it->second], base_to_y.state_map[s]}, {}};
      if (at.state_map[0] == at.state_map[1]) continue;
      push_cell(Cell{r, at});
      ++r_cells;
    }
  }
  // cls -> state / action of y
  std::vector<Index> phi_s(last.state_count(), kUnset), phi_a(last.action_count(), kUnset);
  auto rebuild = [&](const Morphism& ins) {
    for (auto& v : phi_s)
      if (v != kUnset) v = ins.state_map[v];
    for (auto& v : phi_a)
      if (v != kUnset) v = ins.action_map[v];
  };
  for (Index s = 0; s < d.base.state_count(); ++s) phi_s[into_last[0].state_map[s]] = base_to_y.state_map[s];
  for (Index u = 0; u < d.base.action_count(); ++u) phi_a[into_last[0].action_map[u]] = base_to_y.action_map[u];

  for (std::size_t k = 0; k < m; ++k) {
    const Cell& c = d.cells[k];
    if (is_r_generator(c.generator)) continue;
    const Morphism& g = c.generator;
    const TransitionSystem& w = g.target;
    // classes of W's elements in the last stage
    const Morphism w_last = compose(into_last[k + 1], x.cells[k]);
    std::vector<bool> old_s(w.state_count(), false), old_a(w.action_count(), false);
    for (Index s : g.state_map) old_s[s] = true;
    for (Index u : g.action_map) old_a[u] = true;
    bool clean = true;
    std::set<Index> seen;
    for (Index s = 0; s < w.state_count(); ++s) {
      if (old_s[s]) continue;
      Index cls = w_last.state_map[s];
      if (phi_s[cls] != kUnset || !seen.insert(cls).second) clean = false;
    }
    if (clean) {
      Morphism at{g.source, y, {}, {}};
      for (Index s : c.attaching.state_map) at.state_map.push_back(phi_s[into_last[k].state_map[s]]);
      for (Index u : c.attaching.action_map) at.action_map.push_back(phi_a[into_last[k].action_map[u]]);
      auto a = push_cell(Cell{g, at});
      rebuild(a.insertion);
      for (Index s = 0; s < w.state_count(); ++s)
        if (!old_s[s]) phi_s[w_last.state_map[s]] = a.cell.state_map[s];
      for (Index u = 0; u < w.action_count(); ++u)
        if (!old_a[u]) phi_a[w_last.action_map[u]] = a.cell.action_map[u];
      continue;
    }
    // A new state of this cell is identified later with an existing state:
    // add only the missing states, then the missing transitions.
    for (Index u = 0; u < w.action_count(); ++u)
      if (!old_a[u]) throw std::logic_error("cannot relocate a cell adding actions and merged states");
    for (Index s = 0; s < w.state_count(); ++s) {
      Index cls = w_last.state_map[s];
      if (old_s[s] || phi_s[cls] != kUnset) continue;
      TransitionSystem pt = point(sigma);
      auto a = push_cell(Cell{from_empty(pt), Morphism{TransitionSystem(sigma), y, {}, {}}});
      rebuild(a.insertion);
      phi_s[cls] = a.cell.state_map[0];
    }
    std::vector<const Transition*> ts;
    for (const auto& t : w.transitions()) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* p, auto* q) { return p->dimension() < q->dimension(); });
    for (const Transition* t : ts) {
      Transition image{phi_s[w_last.state_map[t->source]], {}, phi_s[w_last.state_map[t->target]]};
      std::vector<std::string> word;
      for (Index u : t->actions) {
        image.actions.push_back(phi_a[w_last.action_map[u]]);
        word.push_back(w.action_label_name(u));
      }
      if (y.contains(image)) continue;
      Morphism gen = d.family == Family::I ? pure_cube_inclusion(sigma, word) : boundary_inclusion(sigma, word);
      if (!gen.source.transitions().empty())
        throw std::logic_error("cannot relocate: missing transition of dimension above 1");
      const TransitionSystem& frame = gen.source;
      const std::size_t n = word.size();
      Morphism at{frame, y, std::vector<Index>(frame.state_count()), std::vector<Index>(frame.action_count())};
      at.state_map[frame.state_index(std::string(n, '0'))] = image.source;
      at.state_map[frame.state_index(std::string(n, '1'))] = image.target;
      for (Index u = 0; u < frame.action_count(); ++u) {
        const auto& id = frame.action_name(u);
        at.action_map[u] = image.actions[std::stoul(id.substr(id.rfind(',') + 1)) - 1];
      }
      auto a = push_cell(Cell{gen, at});
      rebuild(a.insertion);
    }
  }

  Morphism cmp{y, last, std::vector<Index>(y.state_count(), kUnset), std::vector<Index>(y.action_count(), kUnset)};
  for (Index cls = 0; cls < last.state_count(); ++cls)
    if (phi_s[cls] != kUnset) cmp.state_map[phi_s[cls]] = cls;
  for (Index cls = 0; cls < last.action_count(); ++cls)
    if (phi_a[cls] != kUnset) cmp.action_map[phi_a[cls]] = cls;
  bool total = std::find(cmp.state_map.begin(), cmp.state_map.end(), kUnset) == cmp.state_map.end() &&
               std::find(cmp.action_map.begin(), cmp.action_map.end(), kUnset) == cmp.action_map.end();
  if (!total) {
    std::replace(cmp.state_map.begin(), cmp.state_map.end(), kUnset, Index{0});
    std::replace(cmp.action_map.begin(), cmp.action_map.end(), kUnset, Index{0});
  }
  bool iso = total && is_isomorphism(cmp) && compose(cmp, base_to_y) == into_last[0];
  return Relocation{std::move(result), r_cells, std::move(cmp), iso};
}

Saturation saturate(const TransitionSystem& x, Variant variant, int rounds) {
  if (rounds <= 0) throw ArgumentError("saturation needs a positive number of rounds");
  require_variant(x, variant, "saturate");
  const int d = std::max<int>(1, static_cast<int>(x.max_dimension()));
  GeneratingSet gs = generating_set(family_for(variant), x.alphabet(), d);
  struct Prepared {
    std::string name;
    StarWhich which;
    Morphism j;
    bool bijective;
  };
  std::vector<Prepared> prepared;
  for (const auto& g : gs.members)
    for (StarWhich which : {StarWhich::gamma0, StarWhich::gamma1}) {
      auto sp = star_product(g.map, which);
      prepared.push_back({g.name, which, sp.map, bijective(sp.map)});
    }

  Saturation out{x, identity(x), {}};
  for (int round = 1; round <= rounds; ++round) {
    const TransitionSystem current = out.result;
    std::vector<PendingCell> cells;
    TransitionSet direct;  // defects of bijective j: images of cyl(B)
    for (const auto& p : prepared) {
      SaturationStep step{static_cast<std::size_t>(round), p.name, p.which, 0, 0};
      for_each_hom(p.j.source, current, [&](const Morphism& top) {
        ++step.squares;
        if (p.bijective) {
          // the extension is forced: top after the inverse of j
          Morphism e = compose(top, invert_elements(p.j));
          bool ok = true;
          for (const auto& t : p.j.target.transitions()) {
            Transition image = e.apply(t);
            if (!current.contains(image)) {
              ok = false;
              direct.insert(std::move(image));
            }
          }
          if (!ok) ++step.defects;
        } else if (!extend(p.j, top)) {
          ++step.defects;
          cells.push_back({Cell{p.j, top}, "r" + std::to_string(round) + "." + std::to_string(cells.size() + 1)});
        }
        return true;
      });
      out.trace.push_back(std::move(step));
    }
    if (direct.empty() && cells.empty()) break;

    TransitionSystem next = current;
    Morphism ins = identity(current);
    if (!direct.empty()) {
      SystemBuilder b(current.alphabet());
      for (const auto& s : current.state_names()) b.add_state(s);
      for (Index u = 0; u < current.action_count(); ++u)
        b.add_action_with_label(current.action_name(u), current.action_label(u));
      for (const auto& t : current.transitions()) b.add_transition(t);
      for (const auto& t : direct) b.add_transition(t);
      next = std::move(b).build(true).system;  // same names, same indices
      ins = Morphism{current, next, ins.state_map, ins.action_map};
    }
    if (!cells.empty()) {
      for (auto& pc : cells) pc.cell.attaching = Morphism{pc.cell.attaching.source, next, pc.cell.attaching.state_map,
                                                         pc.cell.attaching.action_map};
      auto a = attach_all(next, cells);
      ins = compose(a.insertion, ins);
      next = a.system;
    }
    if (variant != Variant::wts && !is_cubical(next)) {
      TransitionSystem c = cubicalify(next).system;
      ins = retarget_by_name(ins, c);
      next = c;
    }
    if (variant == Variant::rts) {
      Reflection r = regularize(next);
      ins = compose(r.unit, ins);
      next = r.system;
    }
    out.insertion = compose(ins, out.insertion);
    out.result = next;
  }
  return out;
}

CollapseReport causal_collapse_check(const TransitionSystem& x0, const TransitionSystem& xsat,
                                     const Morphism& insertion) {
  if (!(insertion.source == x0) || !(insertion.target == xsat))
    throw ArgumentError("insertion does not map the original system into the saturated one");
  if (!check_morphism(insertion).ok()) throw ArgumentError("insertion is not a morphism");
  std::set<std::vector<Index>> words;
  for (const auto& t : x0.transitions()) words.insert(x0.label_word(t));
  std::set<std::tuple<Index, Index, std::vector<Index>>> present;
  for (const auto& t : xsat.transitions()) present.emplace(t.source, t.target, xsat.label_word(t));
  CollapseReport r;
  for (const auto& w : words)
    for (Index g = 0; g < x0.state_count(); ++g)
      for (Index h = 0; h < x0.state_count(); ++h) {
        ++r.obligations;
        if (!present.contains({insertion.state_map[g], insertion.state_map[h], w}))
          r.missing.push_back({g, h, w});
      }
  r.collapsed = r.missing.empty();
  return r;
}

}  // namespace hdts
