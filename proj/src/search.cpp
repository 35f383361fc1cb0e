#include "hdts/search.hpp"

#include <algorithm>

namespace hdts {

SearchProblem default_problem(const TransitionSystem& source, const TransitionSystem& target) {
  SearchProblem p{&source, &target, {}, {}, false};
  std::vector<Index> all(target.state_count());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  p.state_domains.assign(source.state_count(), all);
  for (Index a = 0; a < source.action_count(); ++a) {
    std::vector<Index> dom;
    for (Index b = 0; b < target.action_count(); ++b)
      if (target.action_label_name(b) == source.action_label_name(a)) dom.push_back(b);
    p.action_domains.push_back(std::move(dom));
  }
  return p;
}

namespace {

class Searcher {
 public:
  Searcher(const SearchProblem& p, const SearchVisitor& visit) : p_(p), visit_(visit) {
    const auto& src = *p.source;
    n_states_ = src.state_count();
    const std::size_t vars = n_states_ + src.action_count();
    domains_.reserve(vars);
    for (const auto& d : p.state_domains) domains_.push_back(&d);
    for (const auto& d : p.action_domains) domains_.push_back(&d);

    // Forced variables first, then in order of appearance along
    // transitions of increasing dimension, then whatever is left.
    std::vector<bool> placed(vars, false);
    auto place = [&](Index v) {
      if (!placed[v]) {
        placed[v] = true;
        order_.push_back(v);
      }
    };
    for (Index v = 0; v < vars; ++v)
      if (domains_[v]->size() == 1) place(v);
    std::vector<const Transition*> ts;
    for (const auto& t : src.transitions()) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](const Transition* a, const Transition* b) {
      return a->dimension() < b->dimension();
    });
    for (const Transition* t : ts) {
      place(t->source);
      for (Index a : t->actions) place(static_cast<Index>(n_states_ + a));
      place(t->target);
    }
    for (Index v = 0; v < vars; ++v) place(v);

    std::vector<std::size_t> position(vars);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;

    // With both sides permutation-closed one representative per
    // permutation class suffices.
    const bool reps_only = src.multiset_closed() && p.target->multiset_closed();
    checks_.resize(vars + 1);
    for (const Transition* t : ts) {
      if (reps_only && !std::is_sorted(t->actions.begin(), t->actions.end())) continue;
      std::size_t depth = std::max(position[t->source], position[t->target]);
      for (Index a : t->actions) depth = std::max(depth, position[n_states_ + a]);
      checks_[depth].push_back(t);
    }

    value_.assign(vars, 0);
    if (p.injective) {
      used_states_.assign(p.target->state_count(), false);
      used_actions_.assign(p.target->action_count(), false);
    }
  }

  std::size_t run() {
    for (const auto* d : domains_)
      if (d->empty()) return 0;
    recurse(0);
    return found_;
  }

 private:
  bool consistent(std::size_t depth) {
    for (const Transition* t : checks_[depth]) {
      scratch_.source = value_[t->source];
      scratch_.target = value_[t->target];
      scratch_.actions.resize(t->actions.size());
      for (std::size_t i = 0; i < t->actions.size(); ++i)
        scratch_.actions[i] = value_[n_states_ + t->actions[i]];
      if (!p_.target->contains(scratch_)) return false;
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool recurse(std::size_t depth) {
    if (depth == order_.size()) {
      ++found_;
      std::vector<Index> states(value_.begin(), value_.begin() + static_cast<std::ptrdiff_t>(n_states_));
      std::vector<Index> actions(value_.begin() + static_cast<std::ptrdiff_t>(n_states_), value_.end());
      return visit_(states, actions);
    }
    const Index v = order_[depth];
    const bool is_state = v < n_states_;
    auto& used = is_state ? used_states_ : used_actions_;
    for (Index candidate : *domains_[v]) {
      if (p_.injective && used[candidate]) continue;
      value_[v] = candidate;
      if (!consistent(depth)) continue;
      if (p_.injective) used[candidate] = true;
      const bool go_on = recurse(depth + 1);
      if (p_.injective) used[candidate] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const SearchProblem& p_;
  const SearchVisitor& visit_;
  std::size_t n_states_ = 0;
  std::vector<const std::vector<Index>*> domains_;
  std::vector<Index> order_;
  std::vector<std::vector<const Transition*>> checks_;
  std::vector<Index> value_;
  std::vector<bool> used_states_, used_actions_;
  Transition scratch_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t search_morphisms(const SearchProblem& problem, const SearchVisitor& visit) {
  if (!problem.source || !problem.target) throw ArgumentError("search without systems");
  if (problem.state_domains.size() != problem.source->state_count() ||
      problem.action_domains.size() != problem.source->action_count())
    throw ArgumentError("search domains do not match the source");
  Searcher s(problem, visit);
  return s.run();
}

}  // namespace hdts
