#include "hdts/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hdts/search.hpp"

namespace hdts {

namespace {

constexpr Index kNoState = static_cast<Index>(-1);

// Closed under permutations iff closed under adjacent swaps.
bool check_multiset_closed(const std::vector<Transition>& ts, const TransitionSet& lookup) {
  Transition probe;
  for (const auto& t : ts) {
    probe.source = t.source;
    probe.target = t.target;
    for (std::size_t i = 0; i + 1 < t.actions.size(); ++i) {
      if (t.actions[i] == t.actions[i + 1]) continue;
      probe.actions = t.actions;
      std::swap(probe.actions[i], probe.actions[i + 1]);
      if (!lookup.contains(probe)) return false;
    }
  }
  return true;
}

struct PatchWitness {
  Transition whole, first_head, first_tail, second_head, second_tail, consequence;
};

// Enumerates every instance of the patching configuration on t.
template <class F>
void for_each_patch(const Transition& t, const DivisionIndex& splits, F&& f) {
  const std::size_t n = t.dimension();
  if (n < 3) return;
  std::vector<std::vector<Index>> div(n);
  for (std::size_t k = 1; k < n; ++k) div[k] = splits.dividers(t, k);
  auto slice = [&](std::size_t from, std::size_t to) {
    return std::vector<Index>(t.actions.begin() + static_cast<std::ptrdiff_t>(from),
                              t.actions.begin() + static_cast<std::ptrdiff_t>(to));
  };
  for (std::size_t p = 1; p + 1 < n; ++p) {
    for (std::size_t q = 1; p + q < n; ++q) {
      for (Index nu1 : div[p]) {
        for (Index nu2 : div[p + q]) {
          PatchWitness w{t,
                         {t.source, slice(0, p), nu1},
                         {nu1, slice(p, n), t.target},
                         {t.source, slice(0, p + q), nu2},
                         {nu2, slice(p + q, n), t.target},
                         {nu1, slice(p, p + q), nu2}};
          f(w);
        }
      }
    }
  }
}

void add_with_permutations(TransitionSet& set, const Transition& t, std::vector<Transition>& added) {
  for (auto& perm : permutations(t.actions)) {
    Transition u{t.source, std::move(perm), t.target};
    if (set.insert(u).second) added.push_back(std::move(u));
  }
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::wts: return "wts";
    case Variant::cts: return "cts";
    case Variant::rts: return "rts";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "wts") return Variant::wts;
  if (text == "cts") return Variant::cts;
  if (text == "rts") return Variant::rts;
  throw ArgumentError("unknown variant '" + std::string(text) + "' (expected wts, cts or rts)");
}

// prefix: (src, acts, -) -> targets; suffix: (-, acts, tgt) -> sources.
DivisionIndex::DivisionIndex(std::span<const Transition> transitions) {
  for (const auto& t : transitions) add(t);
  finish();
}

DivisionIndex::DivisionIndex(const TransitionSet& transitions) {
  for (const auto& t : transitions) add(t);
  finish();
}

void DivisionIndex::add(const Transition& t) {
  prefix_[Transition{t.source, t.actions, kNoState}].push_back(t.target);
  suffix_[Transition{kNoState, t.actions, t.target}].push_back(t.source);
}

void DivisionIndex::finish() {
  for (auto& [k, v] : prefix_) std::sort(v.begin(), v.end());
  for (auto& [k, v] : suffix_) std::sort(v.begin(), v.end());
}

std::vector<Index> DivisionIndex::dividers(const Transition& t, std::size_t k) const {
  std::vector<Index> out;
  Transition key{t.source,
                 std::vector<Index>(t.actions.begin(), t.actions.begin() + static_cast<std::ptrdiff_t>(k)),
                 kNoState};
  auto p = prefix_.find(key);
  if (p == prefix_.end()) return out;
  key.source = kNoState;
  key.target = t.target;
  key.actions.assign(t.actions.begin() + static_cast<std::ptrdiff_t>(k), t.actions.end());
  auto s = suffix_.find(key);
  if (s == suffix_.end()) return out;
  std::set_intersection(p->second.begin(), p->second.end(), s->second.begin(), s->second.end(),
                        std::back_inserter(out));
  return out;
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ArgumentError("alphabet must be nonempty");
  std::sort(labels_.begin(), labels_.end());
  auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) throw ArgumentError("duplicate label '" + *dup + "'");
}

std::optional<Index> Alphabet::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index Alphabet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ArgumentError("unknown label '" + std::string(label) + "'");
}

std::size_t TransitionHash::operator()(const Transition& t) const noexcept {
  std::size_t h = std::hash<Index>{}(t.source) * 0x9e3779b97f4a7c15ULL;
  for (Index a : t.actions) h = (h ^ a) * 0x100000001b3ULL + 0x7f4a7c15;
  h ^= std::hash<Index>{}(t.target) + (h << 6) + (h >> 2);
  return h;
}

std::shared_ptr<const TransitionSystem::Data> TransitionSystem::finish(Data data) {
  std::sort(data.transitions.begin(), data.transitions.end());
  data.transitions.erase(std::unique(data.transitions.begin(), data.transitions.end()),
                         data.transitions.end());
  data.lookup = TransitionSet(data.transitions.begin(), data.transitions.end());
  data.max_dimension = 0;
  for (const auto& t : data.transitions)
    data.max_dimension = std::max(data.max_dimension, t.dimension());
  data.multiset_closed = check_multiset_closed(data.transitions, data.lookup);
  data.state_by_name.clear();
  for (Index i = 0; i < data.states.size(); ++i) data.state_by_name.emplace(data.states[i], i);
  data.action_by_name.clear();
  for (Index i = 0; i < data.action_ids.size(); ++i)
    data.action_by_name.emplace(data.action_ids[i], i);
  return std::make_shared<const Data>(std::move(data));
}

TransitionSystem::TransitionSystem(Alphabet alphabet)
    : TransitionSystem(alphabet, {}, {}, {}) {}

TransitionSystem::TransitionSystem(Alphabet alphabet, std::vector<std::string> states,
                                   std::vector<ActionDecl> actions,
                                   const std::vector<TransitionDecl>& transitions) {
  Data d;
  d.alphabet = std::move(alphabet);
  std::sort(states.begin(), states.end());
  if (auto dup = std::adjacent_find(states.begin(), states.end()); dup != states.end())
    throw StructuralError("duplicate state '" + *dup + "'");
  std::sort(actions.begin(), actions.end(),
            [](const ActionDecl& a, const ActionDecl& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < actions.size(); ++i)
    if (actions[i].id == actions[i + 1].id)
      throw StructuralError("duplicate action '" + actions[i].id + "'");
  d.states = std::move(states);
  for (auto& a : actions) {
    auto label = d.alphabet.find(a.label);
    if (!label)
      throw StructuralError("action '" + a.id + "' has unknown label '" + a.label + "'");
    d.action_ids.push_back(std::move(a.id));
    d.action_labels.push_back(*label);
  }
  auto state_of = [&](const std::string& name) {
    auto it = std::lower_bound(d.states.begin(), d.states.end(), name);
    if (it == d.states.end() || *it != name)
      throw StructuralError("unknown state '" + name + "'");
    return static_cast<Index>(it - d.states.begin());
  };
  auto action_of = [&](const std::string& id) {
    auto it = std::lower_bound(d.action_ids.begin(), d.action_ids.end(), id);
    if (it == d.action_ids.end() || *it != id)
      throw StructuralError("unknown action '" + id + "'");
    return static_cast<Index>(it - d.action_ids.begin());
  };
  for (const auto& t : transitions) {
    if (t.actions.empty())
      throw StructuralError("transition from '" + t.source + "' to '" + t.target +
                            "' has no actions");
    Transition r{state_of(t.source), {}, state_of(t.target)};
    for (const auto& a : t.actions) r.actions.push_back(action_of(a));
    d.transitions.push_back(std::move(r));
  }
  data_ = finish(std::move(d));
}

std::optional<Index> TransitionSystem::find_state(std::string_view name) const {
  auto it = data_->state_by_name.find(std::string(name));
  if (it == data_->state_by_name.end()) return std::nullopt;
  return it->second;
}

Index TransitionSystem::state_index(std::string_view name) const {
  if (auto i = find_state(name)) return *i;
  throw StructuralError("unknown state '" + std::string(name) + "'");
}

std::optional<Index> TransitionSystem::find_action(std::string_view id) const {
  auto it = data_->action_by_name.find(std::string(id));
  if (it == data_->action_by_name.end()) return std::nullopt;
  return it->second;
}

Index TransitionSystem::action_index(std::string_view id) const {
  if (auto i = find_action(id)) return *i;
  throw StructuralError("unknown action '" + std::string(id) + "'");
}

std::size_t TransitionSystem::count_of_dimension(std::size_t n) const {
  return static_cast<std::size_t>(
      std::count_if(data_->transitions.begin(), data_->transitions.end(),
                    [n](const Transition& t) { return t.dimension() == n; }));
}

std::vector<Index> TransitionSystem::label_word(const Transition& t) const {
  std::vector<Index> w;
  w.reserve(t.actions.size());
  for (Index a : t.actions) w.push_back(action_label(a));
  return w;
}

std::string TransitionSystem::format(const Transition& t) const {
  std::string s = "(" + state_name(t.source);
  for (Index a : t.actions) s += "," + action_name(a);
  return s + "," + state_name(t.target) + ")";
}

bool TransitionSystem::operator==(const TransitionSystem& other) const {
  if (data_ == other.data_) return true;
  const Data& a = *data_;
  const Data& b = *other.data_;
  return a.alphabet == b.alphabet && a.states == b.states && a.action_ids == b.action_ids &&
         a.action_labels == b.action_labels && a.transitions == b.transitions;
}

SystemBuilder::SystemBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Index SystemBuilder::add_state(std::string name) {
  auto [it, fresh] = state_lookup_.emplace(name, static_cast<Index>(states_.size()));
  if (fresh) states_.push_back(std::move(name));
  return it->second;
}

Index SystemBuilder::add_action(std::string id, std::string_view label) {
  return add_action_with_label(std::move(id), alphabet_.index_of(label));
}

Index SystemBuilder::add_action_with_label(std::string id, Index label) {
  if (label >= alphabet_.size()) throw ArgumentError("label index out of range");
  auto [it, fresh] = action_lookup_.emplace(id, static_cast<Index>(actions_.size()));
  if (fresh) {
    actions_.emplace_back(std::move(id), label);
  } else if (actions_[it->second].second != label) {
    throw StructuralError("action '" + id + "' declared with two labels");
  }
  return it->second;
}

void SystemBuilder::add_transition(Transition t) {
  if (t.actions.empty()) throw StructuralError("transition without actions");
  if (t.source >= states_.size() || t.target >= states_.size())
    throw StructuralError("transition endpoint out of range");
  for (Index a : t.actions)
    if (a >= actions_.size()) throw StructuralError("transition action out of range");
  transitions_.push_back(std::move(t));
}

SystemBuilder::Result SystemBuilder::build(bool close) && {
  std::vector<Index> state_order(states_.size());
  std::iota(state_order.begin(), state_order.end(), 0);
  std::sort(state_order.begin(), state_order.end(),
            [&](Index a, Index b) { return states_[a] < states_[b]; });
  std::vector<Index> action_order(actions_.size());
  std::iota(action_order.begin(), action_order.end(), 0);
  std::sort(action_order.begin(), action_order.end(),
            [&](Index a, Index b) { return actions_[a].first < actions_[b].first; });

  std::vector<Index> state_index(states_.size());
  std::vector<Index> action_index(actions_.size());
  TransitionSystem::Data d;
  d.alphabet = alphabet_;
  for (Index i = 0; i < state_order.size(); ++i) {
    state_index[state_order[i]] = i;
    d.states.push_back(std::move(states_[state_order[i]]));
  }
  for (Index i = 0; i < action_order.size(); ++i) {
    action_index[action_order[i]] = i;
    d.action_ids.push_back(std::move(actions_[action_order[i]].first));
    d.action_labels.push_back(actions_[action_order[i]].second);
  }
  for (auto& t : transitions_) {
    t.source = state_index[t.source];
    t.target = state_index[t.target];
    for (auto& a : t.actions) a = action_index[a];
  }
  if (close) {
    TransitionSet set(transitions_.begin(), transitions_.end());
    close_transitions(set);
    d.transitions.assign(set.begin(), set.end());
  } else {
    d.transitions = std::move(transitions_);
  }
  return Result{TransitionSystem(TransitionSystem::finish(std::move(d))), std::move(state_index),
                std::move(action_index)};
}

Transition Morphism::apply(const Transition& t) const {
  Transition r{state_map.at(t.source), {}, state_map.at(t.target)};
  r.actions.reserve(t.actions.size());
  for (Index a : t.actions) r.actions.push_back(action_map.at(a));
  return r;
}

std::vector<std::vector<Index>> permutations(std::vector<Index> actions) {
  std::vector<std::vector<Index>> out;
  std::sort(actions.begin(), actions.end());
  do {
    out.push_back(actions);
  } while (std::next_permutation(actions.begin(), actions.end()));
  return out;
}

ValidationReport validate(const TransitionSystem& x) {
  ValidationReport report;
  TransitionSet reported;
  for (const auto& t : x.transitions()) {
    for (auto& perm : permutations(t.actions)) {
      Transition p{t.source, std::move(perm), t.target};
      if (x.contains(p) || !reported.insert(p).second) continue;
      report.violations.push_back(
          Violation{"multiset", "permutation " + x.format(p) + " of " + x.format(t) + " is missing",
                    {t}, p});
    }
  }
  DivisionIndex splits(x.transitions());
  for (const auto& t : x.transitions()) {
    for_each_patch(t, splits, [&](const PatchWitness& w) {
      if (x.contains(w.consequence) || !reported.insert(w.consequence).second) return;
      report.violations.push_back(Violation{
          "patching",
          "patching consequence " + x.format(w.consequence) + " of " + x.format(t) + " is missing",
          {w.whole, w.first_head, w.first_tail, w.second_head, w.second_tail},
          w.consequence});
    });
  }
  return report;
}

void close_transitions(TransitionSet& transitions) {
  std::vector<Transition> added;
  std::vector<Transition> seed(transitions.begin(), transitions.end());
  for (const auto& t : seed) add_with_permutations(transitions, t, added);
  for (;;) {
    added.clear();
    DivisionIndex splits(transitions);
    std::vector<Transition> pending;
    for (const auto& t : transitions) {
      if (t.dimension() < 3) continue;
      for_each_patch(t, splits, [&](const PatchWitness& w) {
        if (!transitions.contains(w.consequence)) pending.push_back(w.consequence);
      });
    }
    for (const auto& t : pending) add_with_permutations(transitions, t, added);
    if (added.empty()) break;
  }
}

TransitionSystem closure(const TransitionSystem& x) {
  SystemBuilder b(x.alphabet());
  for (const auto& s : x.state_names()) b.add_state(s);
  for (Index a = 0; a < x.action_count(); ++a) b.add_action_with_label(x.action_name(a), x.action_label(a));
  for (const auto& t : x.transitions()) b.add_transition(t);
  return std::move(b).build(true).system;
}

TransitionSystem restrict(const TransitionSystem& x, const StateSet& states) {
  for (Index s : states)
    if (s >= x.state_count()) throw ArgumentError("restriction to a state outside the system");
  SystemBuilder b(x.alphabet());
  std::vector<Index> local(x.state_count(), kNoState);
  for (Index s : states) local[s] = b.add_state(x.state_name(s));
  for (Index a = 0; a < x.action_count(); ++a) b.add_action_with_label(x.action_name(a), x.action_label(a));
  for (const auto& t : x.transitions()) {
    if (local[t.source] == kNoState || local[t.target] == kNoState) continue;
    b.add_transition(Transition{local[t.source], t.actions, local[t.target]});
  }
  return std::move(b).build().system;
}

Morphism resolve_morphism(const TransitionSystem& source, const TransitionSystem& target,
                          const std::map<std::string, std::string>& states,
                          const std::map<std::string, std::string>& actions) {
  Morphism f{source, target, std::vector<Index>(source.state_count()),
             std::vector<Index>(source.action_count())};
  for (const auto& [from, to] : states) source.state_index(from);
  for (const auto& [from, to] : actions) source.action_index(from);
  for (Index s = 0; s < source.state_count(); ++s) {
    auto it = states.find(source.state_name(s));
    if (it == states.end())
      throw StructuralError("state map is undefined on '" + source.state_name(s) + "'");
    f.state_map[s] = target.state_index(it->second);
  }
  for (Index a = 0; a < source.action_count(); ++a) {
    auto it = actions.find(source.action_name(a));
    if (it == actions.end())
      throw StructuralError("action map is undefined on '" + source.action_name(a) + "'");
    f.action_map[a] = target.action_index(it->second);
  }
  return f;
}

void require_well_formed(const Morphism& f) {
  if (f.state_map.size() != f.source.state_count() ||
      f.action_map.size() != f.source.action_count())
    throw StructuralError("morphism maps do not cover the source");
  for (Index s : f.state_map)
    if (s >= f.target.state_count()) throw StructuralError("state image outside the target");
  for (Index a : f.action_map)
    if (a >= f.target.action_count()) throw StructuralError("action image outside the target");
}

ValidationReport check_morphism(const Morphism& f) {
  require_well_formed(f);
  ValidationReport report;
  for (Index a = 0; a < f.source.action_count(); ++a) {
    const auto& from = f.source.action_label_name(a);
    const auto& to = f.target.action_label_name(f.action_map[a]);
    if (from != to)
      report.violations.push_back(
          Violation{"label preservation",
                    "action " + f.source.action_name(a) + " labelled " + from + " is sent to " +
                        f.target.action_name(f.action_map[a]) + " labelled " + to,
                    {},
                    std::nullopt});
  }
  for (const auto& t : f.source.transitions()) {
    Transition image = f.apply(t);
    if (!f.target.contains(image))
      report.violations.push_back(Violation{
          "transition preservation",
          "image " + f.target.format(image) + " of " + f.source.format(t) + " is not a transition",
          {t},
          image});
  }
  return report;
}

Morphism identity(const TransitionSystem& x) {
  Morphism f{x, x, std::vector<Index>(x.state_count()), std::vector<Index>(x.action_count())};
  std::iota(f.state_map.begin(), f.state_map.end(), 0);
  std::iota(f.action_map.begin(), f.action_map.end(), 0);
  return f;
}

Morphism inclusion(const TransitionSystem& sub, const TransitionSystem& super) {
  Morphism f{sub, super, {}, {}};
  for (const auto& s : sub.state_names()) f.state_map.push_back(super.state_index(s));
  for (Index a = 0; a < sub.action_count(); ++a)
    f.action_map.push_back(super.action_index(sub.action_name(a)));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target == g.source)) throw ArgumentError("composite of non-composable morphisms");
  Morphism h{f.source, g.target, {}, {}};
  for (Index s : f.state_map) h.state_map.push_back(g.state_map.at(s));
  for (Index a : f.action_map) h.action_map.push_back(g.action_map.at(a));
  return h;
}

namespace {
std::optional<std::pair<Index, Index>> collision(const std::vector<Index>& map, std::size_t codomain) {
  std::vector<Index> seen(codomain, kNoState);
  for (Index i = 0; i < map.size(); ++i) {
    Index& slot = seen.at(map[i]);
    if (slot != kNoState) return std::pair{slot, i};
    slot = i;
  }
  return std::nullopt;
}
}  // namespace

MonoVerdict is_mono(const Morphism& f) {
  require_well_formed(f);
  MonoVerdict v;
  v.collapsed_states = collision(f.state_map, f.target.state_count());
  v.collapsed_actions = collision(f.action_map, f.target.action_count());
  v.mono = !v.collapsed_states && !v.collapsed_actions;
  return v;
}

bool is_injective_on_states(const Morphism& f) {
  return !collision(f.state_map, f.target.state_count());
}

bool is_surjective_on_states(const Morphism& f) {
  std::vector<bool> hit(f.target.state_count(), false);
  for (Index s : f.state_map) hit.at(s) = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_isomorphism(const Morphism& f) {
  if (f.source.state_count() != f.target.state_count() ||
      f.source.action_count() != f.target.action_count() ||
      f.source.transition_count() != f.target.transition_count())
    return false;
  if (!is_mono(f).mono) return false;
  return check_morphism(f).ok();
}

Morphism inverse(const Morphism& f) {
  if (!is_isomorphism(f)) throw ArgumentError("inverse of a non-isomorphism");
  Morphism g{f.target, f.source, std::vector<Index>(f.target.state_count()),
             std::vector<Index>(f.target.action_count())};
  for (Index s = 0; s < f.state_map.size(); ++s) g.state_map[f.state_map[s]] = s;
  for (Index a = 0; a < f.action_map.size(); ++a) g.action_map[f.action_map[a]] = a;
  return g;
}

namespace {

using Signature = std::vector<std::vector<Index>>;

// Invariants preserved by isomorphisms, used to prune candidates.
std::vector<Signature> state_signatures(const TransitionSystem& x) {
  std::vector<Signature> sig(x.state_count());
  for (const auto& t : x.transitions()) {
    auto word = x.label_word(t);
    std::sort(word.begin(), word.end());
    Index role = t.source == t.target ? 2 : 0;
    auto with_role = [&](Index r) {
      std::vector<Index> e{r};
      e.insert(e.end(), word.begin(), word.end());
      return e;
    };
    sig[t.source].push_back(with_role(role));
    if (t.source != t.target) sig[t.target].push_back(with_role(1));
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

std::vector<Signature> action_signatures(const TransitionSystem& x) {
  std::vector<Signature> sig(x.action_count());
  for (Index a = 0; a < x.action_count(); ++a) sig[a].push_back({x.action_label(a)});
  for (const auto& t : x.transitions())
    for (Index a : t.actions) sig[a].push_back({static_cast<Index>(t.dimension())});
  for (auto& s : sig) std::sort(s.begin() + 1, s.end());
  return sig;
}

std::vector<std::size_t> dimension_profile(const TransitionSystem& x) {
  std::vector<std::size_t> p(x.max_dimension() + 1, 0);
  for (const auto& t : x.transitions()) ++p[t.dimension()];
  return p;
}

}  // namespace

std::optional<Morphism> find_isomorphism(const TransitionSystem& x, const TransitionSystem& y) {
  if (x.alphabet().labels() != y.alphabet().labels()) return std::nullopt;
  if (x.state_count() != y.state_count() || x.action_count() != y.action_count() ||
      x.transition_count() != y.transition_count() || dimension_profile(x) != dimension_profile(y))
    return std::nullopt;
  auto xs = state_signatures(x), ys = state_signatures(y);
  auto xa = action_signatures(x), ya = action_signatures(y);
  SearchProblem problem{&x, &y, {}, {}, true};
  for (Index s = 0; s < x.state_count(); ++s) {
    std::vector<Index> dom;
    for (Index t = 0; t < y.state_count(); ++t)
      if (xs[s] == ys[t]) dom.push_back(t);
    if (dom.empty()) return std::nullopt;
    problem.state_domains.push_back(std::move(dom));
  }
  for (Index a = 0; a < x.action_count(); ++a) {
    std::vector<Index> dom;
    for (Index b = 0; b < y.action_count(); ++b)
      if (xa[a] == ya[b]) dom.push_back(b);
    if (dom.empty()) return std::nullopt;
    problem.action_domains.push_back(std::move(dom));
  }
  std::optional<Morphism> found;
  search_morphisms(problem, [&](const std::vector<Index>& s, const std::vector<Index>& a) {
    // Injective, equal sizes and transition-preserving with equal counts.
    found = Morphism{x, y, s, a};
    return false;
  });
  return found;
}

std::string format_report(const ValidationReport& report, const TransitionSystem& x) {
  std::ostringstream out;
  if (report.ok()) {
    out << "ok\n";
    return out.str();
  }
  for (const auto& v : report.violations) {
    out << v.axiom << ": " << v.detail << "\n";
    for (const auto& w : v.witnesses) out << "  witness " << x.format(w) << "\n";
  }
  return out.str();
}

}  // namespace hdts
