#include "hdts/subcats.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hdts/cyl.hpp"
#include "hdts/generators.hpp"
#include "hdts/search.hpp"
#include "union_find.hpp"

namespace hdts {

ClassificationReport classify(const TransitionSystem& x) {
  ClassificationReport r;
  r.weak = validate(x);
  r.is_weak = r.weak.ok();
  std::vector<bool> used(x.action_count(), false);
  for (const auto& t : x.transitions())
    if (t.dimension() == 1) used[t.actions[0]] = true;
  for (Index a = 0; a < x.action_count(); ++a)
    if (!used[a]) r.unused_actions.push_back(a);
  r.all_actions_used = r.unused_actions.empty();
  DivisionIndex index(x.transitions());
  for (const auto& t : x.transitions()) {
    for (std::size_t p = 1; p < t.dimension(); ++p) {
      auto div = index.dividers(t, p);
      if (div.empty())
        r.missing_dividers.push_back({t, p, {}});
      else if (div.size() > 1)
        r.ambiguous_dividers.push_back({t, p, std::move(div)});
    }
  }
  r.intermediate_state = r.missing_dividers.empty();
  r.unique_intermediate_state = r.ambiguous_dividers.empty();
  return r;
}

bool is_cubical(const TransitionSystem& x) { return classify(x).is_cubical(); }
bool is_regular(const TransitionSystem& x) { return classify(x).is_regular(); }

void require_variant(const TransitionSystem& x, Variant variant, const char* what) {
  auto r = classify(x);
  bool ok = variant == Variant::wts ? r.is_weak : variant == Variant::cts ? r.is_cubical() : r.is_regular();
  if (!ok) {
    const char* kind = variant == Variant::wts ? "a weak" : variant == Variant::cts ? "a cubical" : "a regular";
    throw ArgumentError(std::string(what) + " expects " + kind + " transition system");
  }
}

bool has_cube_filler(const TransitionSystem& x, const Transition& t) {
  const std::size_t n = t.dimension();
  if (n == 1) return x.contains(t);
  std::vector<std::string> labels;
  for (Index a : t.actions) labels.push_back(x.action_label_name(a));
  TransitionSystem c = cube(x.alphabet(), labels);
  SearchProblem p = default_problem(c, x);
  // Cube actions are "(x_i,i)", sorted by id; recover i from the id.
  for (Index a = 0; a < c.action_count(); ++a) {
    const auto& id = c.action_name(a);
    std::size_t i = std::stoul(id.substr(id.rfind(',') + 1)) - 1;
    p.action_domains[a] = {t.actions[i]};
  }
  p.state_domains[c.state_index(std::string(n, '0'))] = {t.source};
  p.state_domains[c.state_index(std::string(n, '1'))] = {t.target};
  return search_morphisms(p, [](const std::vector<Index>&, const std::vector<Index>&) { return false; }) > 0;
}

Coreflection cubicalify(const TransitionSystem& x) {
  std::vector<bool> used(x.action_count(), false);
  for (const auto& t : x.transitions())
    if (t.dimension() == 1) used[t.actions[0]] = true;

  SystemBuilder b(x.alphabet());
  for (const auto& s : x.state_names()) b.add_state(s);
  std::vector<Index> local(x.action_count(), static_cast<Index>(-1));
  for (Index a = 0; a < x.action_count(); ++a)
    if (used[a]) local[a] = b.add_action_with_label(x.action_name(a), x.action_label(a));

  // Fillability is invariant under permuting the action sequence, so one
  // search per permutation class.
  TransitionSet decided;
  for (const auto& t : x.transitions()) {
    Transition rep{t.source, t.actions, t.target};
    std::sort(rep.actions.begin(), rep.actions.end());
    if (!decided.insert(rep).second) continue;
    if (!std::all_of(rep.actions.begin(), rep.actions.end(), [&](Index a) { return used[a]; })) continue;
    if (!has_cube_filler(x, rep)) continue;
    for (auto& perm : permutations(rep.actions)) {
      Transition r{rep.source, {}, rep.target};
      for (Index a : perm) r.actions.push_back(local[a]);
      if (x.contains(Transition{rep.source, perm, rep.target})) b.add_transition(std::move(r));
    }
  }
  TransitionSystem c = std::move(b).build(true).system;
  Morphism counit = inclusion(c, x);
  if (!check_morphism(counit).ok()) throw std::logic_error("cubical part is not a subsystem");
  if (!is_cubical(c)) throw std::logic_error("cubical part is not cubical");
  return Coreflection{c, std::move(counit)};
}

Reflection regularize(const TransitionSystem& x) {
  if (!is_cubical(x)) throw ArgumentError("regularize expects a cubical transition system");
  TransitionSystem current = x;
  Morphism unit = identity(x);
  for (;;) {
    DivisionIndex index(current.transitions());
    detail::UnionFind uf(current.state_count());
    bool merged = false;
    for (const auto& t : current.transitions())
      for (std::size_t p = 1; p < t.dimension(); ++p) {
        auto div = index.dividers(t, p);
        for (std::size_t i = 1; i < div.size(); ++i) merged |= uf.unite(div[0], div[i]);
      }
    if (!merged) break;

    SystemBuilder b(current.alphabet());
    std::vector<Index> local(current.state_count());
    for (Index s = 0; s < current.state_count(); ++s)
      if (uf.find(s) == s) local[s] = b.add_state(current.state_name(s));
    for (Index a = 0; a < current.action_count(); ++a)
      b.add_action_with_label(current.action_name(a), current.action_label(a));
    for (const auto& t : current.transitions())
      b.add_transition(Transition{local[uf.find(t.source)], t.actions, local[uf.find(t.target)]});
    auto built = std::move(b).build(true);
    Morphism q{current, built.system, {}, {}};
    for (Index s = 0; s < current.state_count(); ++s) q.state_map.push_back(built.state_index[local[uf.find(s)]]);
    for (Index a = 0; a < current.action_count(); ++a) q.action_map.push_back(built.action_index[a]);
    unit = compose(q, unit);
    current = built.system;
    if (!is_cubical(current)) throw std::logic_error("state merge left the cubical subcategory");
  }
  if (!is_regular(current)) throw std::logic_error("regularization did not reach a regular system");
  return Reflection{current, std::move(unit)};
}

TransitionSystem path_space(const TransitionSystem& x, Variant variant) {
  require_variant(x, variant, "path_space");
  TransitionSystem p = cocylinder(x).system;
  if (variant == Variant::wts) return p;
  TransitionSystem c = cubicalify(p).system;
  if (variant == Variant::rts && !is_regular(c))
    throw std::logic_error("path space of a regular system is not regular");
  return c;
}

StateSet reachable(const PointedSystem& p) {
  if (p.base >= p.system.state_count()) throw ArgumentError("base point outside the system");
  std::vector<std::vector<Index>> next(p.system.state_count());
  for (const auto& t : p.system.transitions()) next[t.source].push_back(t.target);
  StateSet seen{p.base};
  std::deque<Index> work{p.base};
  while (!work.empty()) {
    Index s = work.front();
    work.pop_front();
    for (Index t : next[s])
      if (seen.insert(t).second) work.push_back(t);
  }
  return seen;
}

StarCoreflection star_coreflect(const PointedSystem& p, Variant variant) {
  require_variant(p.system, variant, "star_coreflect");
  const TransitionSystem& x = p.system;
  StateSet keep = reachable(p);
  std::vector<bool> used(x.action_count(), false);
  for (const auto& t : x.transitions())
    if (keep.contains(t.source))
      for (Index a : t.actions) used[a] = true;
  SystemBuilder b(x.alphabet());
  std::vector<Index> ls(x.state_count()), la(x.action_count());
  for (Index s : keep) ls[s] = b.add_state(x.state_name(s));
  for (Index a = 0; a < x.action_count(); ++a)
    if (used[a]) la[a] = b.add_action_with_label(x.action_name(a), x.action_label(a));
  for (const auto& t : x.transitions()) {
    if (!keep.contains(t.source)) continue;
    Transition r{ls[t.source], {}, ls[t.target]};
    for (Index a : t.actions) r.actions.push_back(la[a]);
    b.add_transition(std::move(r));
  }
  TransitionSystem y = std::move(b).build().system;
  StarCoreflection out{PointedSystem{y, y.state_index(x.state_name(p.base))}, inclusion(y, x)};
  if (variant != Variant::wts) require_variant(y, variant, "star_coreflect result");
  return out;
}

PointedSystem star_cylinder(const PointedSystem& p, Variant variant) {
  require_variant(p.system, variant, "star_cylinder");
  if (p.base >= p.system.state_count()) throw ArgumentError("base point outside the system");
  StateSet z{p.base};
  if (variant == Variant::rts) {
    StateSet internal = internal_states(p.system);
    z.insert(internal.begin(), internal.end());
  }
  QuotientCylinder q = quotient_cyl(p.system, z);
  PointedSystem out{q.system, q.system.state_index("(" + p.system.state_name(p.base) + ",0)")};
  if (variant == Variant::rts && !is_regular(out.system))
    throw std::logic_error("star cylinder of a regular system is not regular");
  return out;
}

std::set<std::pair<Index, Index>> same_past_pairs(const PointedSystem& p, Variant variant) {
  require_variant(p.system, variant, "same_past_pairs");
  if (p.base >= p.system.state_count()) throw ArgumentError("base point outside the system");
  Cocylinder c = cocylinder(p.system);
  // The cubical part keeps every state under the same name and index.
  TransitionSystem space = variant == Variant::wts ? c.system : cubicalify(c.system).system;
  const std::size_t n = p.system.state_count();
  StateSet r = reachable(PointedSystem{space, c.state[p.base * n + p.base]});
  std::set<std::pair<Index, Index>> out;
  for (Index s : r) out.emplace(c.pi0.state_map[s], c.pi1.state_map[s]);
  return out;
}

}  // namespace hdts
