#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

std::set<Tuple> tuples(const TransitionSystem& x) {
  std::set<Tuple> out;
  for (const auto& t : x.transitions()) out.emplace(t.source, t.actions, t.target);
  return out;
}

std::set<Tuple> patching_consequences(const std::set<Tuple>& t, std::size_t states) {
  std::set<Tuple> out;
  for (const auto& [a, u, b] : t) {
    const std::size_t n = u.size();
    if (n < 3) continue;
    for (std::size_t p = 1; p < n; ++p)
      for (std::size_t q = 1; p + q < n; ++q)
        for (Index v1 = 0; v1 < states; ++v1) {
          if (!t.contains({a, {u.begin(), u.begin() + p}, v1})) continue;
          if (!t.contains({v1, {u.begin() + p, u.end()}, b})) continue;
          for (Index v2 = 0; v2 < states; ++v2) {
            if (!t.contains({a, {u.begin(), u.begin() + p + q}, v2})) continue;
            if (!t.contains({v2, {u.begin() + p + q, u.end()}, b})) continue;
            out.emplace(v1, std::vector<Index>(u.begin() + p, u.begin() + p + q), v2);
          }
        }
  }
  return out;
}

std::set<Tuple> closure(std::set<Tuple> t, std::size_t states) {
  for (;;) {
    std::set<Tuple> next = t;
    for (const auto& [a, u, b] : t) {
      auto w = u;
      std::sort(w.begin(), w.end());
      do next.emplace(a, w, b);
      while (std::next_permutation(w.begin(), w.end()));
    }
    for (auto& c : patching_consequences(next, states)) next.insert(c);
    if (next == t) return t;
    t = std::move(next);
  }
}

std::set<Tuple> closure(const TransitionSystem& x) { return closure(tuples(x), x.state_count()); }

bool is_weak(const TransitionSystem& x) { return oracle::closure(x) == tuples(x); }

namespace {

std::vector<Index> dividers(const std::set<Tuple>& t, std::size_t states, const Tuple& tr, std::size_t p) {
  const auto& [a, u, b] = tr;
  std::vector<Index> out;
  for (Index v = 0; v < states; ++v)
    if (t.contains({a, {u.begin(), u.begin() + p}, v}) && t.contains({v, {u.begin() + p, u.end()}, b}))
      out.push_back(v);
  return out;
}

}  // namespace

bool intermediate_state(const TransitionSystem& x) {
  auto t = tuples(x);
  for (const auto& tr : t)
    for (std::size_t p = 1; p < std::get<1>(tr).size(); ++p)
      if (dividers(t, x.state_count(), tr, p).empty()) return false;
  return true;
}

bool unique_intermediate_state(const TransitionSystem& x) {
  auto t = tuples(x);
  for (const auto& tr : t)
    for (std::size_t p = 1; p < std::get<1>(tr).size(); ++p)
      if (dividers(t, x.state_count(), tr, p).size() > 1) return false;
  return true;
}

bool all_actions_used(const TransitionSystem& x) {
  std::set<Index> used;
  for (const auto& [a, u, b] : tuples(x))
    if (u.size() == 1) used.insert(u[0]);
  return used.size() == x.action_count();
}

bool is_cubical(const TransitionSystem& x) { return is_weak(x) && all_actions_used(x) && intermediate_state(x); }
bool is_regular(const TransitionSystem& x) { return is_cubical(x) && unique_intermediate_state(x); }

bool preserves(const Morphism& f) {
  for (Index a = 0; a < f.source.action_count(); ++a)
    if (f.source.action_label(a) != f.target.action_label(f.action_map[a])) return false;
  auto target = tuples(f.target);
  for (const auto& [a, u, b] : tuples(f.source)) {
    std::vector<Index> v;
    for (Index i : u) v.push_back(f.action_map[i]);
    if (!target.contains({f.state_map[a], v, f.state_map[b]})) return false;
  }
  return true;
}

std::vector<Morphism> all_maps(const TransitionSystem& x, const TransitionSystem& y) {
  std::vector<Morphism> out;
  const std::size_t ns = x.state_count(), na = x.action_count();
  std::vector<Index> s(ns, 0), a(na, 0);
  // odometer over states then actions
  if (ns > 0 && y.state_count() == 0) return out;
  if (na > 0 && y.action_count() == 0) return out;
  for (;;) {
    Morphism f{x, y, s, a};
    if (preserves(f)) out.push_back(f);
    std::size_t i = 0;
    for (; i < ns + na; ++i) {
      if (i < ns) {
        if (++s[i] < y.state_count()) break;
        s[i] = 0;
      } else {
        if (++a[i - ns] < y.action_count()) break;
        a[i - ns] = 0;
      }
    }
    if (i == ns + na) return out;
  }
}

bool cancels(const Morphism& f, const std::vector<TransitionSystem>& probes) {
  for (const auto& z : probes) {
    auto maps = all_maps(z, f.source);
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = i + 1; j < maps.size(); ++j) {
        bool same_after = true;
        for (Index s = 0; s < z.state_count(); ++s)
          same_after &= f.state_map[maps[i].state_map[s]] == f.state_map[maps[j].state_map[s]];
        for (Index u = 0; u < z.action_count(); ++u)
          same_after &= f.action_map[maps[i].action_map[u]] == f.action_map[maps[j].action_map[u]];
        if (same_after) return false;
      }
  }
  return true;
}

std::set<Index> internal_states(const TransitionSystem& x) {
  auto t = tuples(x);
  std::set<Index> out;
  for (Index v = 0; v < x.state_count(); ++v)
    for (const auto& [a, u, b] : t)
      for (std::size_t p = 1; p < u.size(); ++p)
        if (t.contains({a, {u.begin(), u.begin() + p}, v}) && t.contains({v, {u.begin() + p, u.end()}, b}))
          out.insert(v);
  return out;
}

PathSpace path_space(const TransitionSystem& x) {
  PathSpace p;
  const std::size_t n = x.state_count();
  p.states = n * n;
  std::map<std::pair<Index, Index>, Index> action;
  for (Index u = 0; u < x.action_count(); ++u)
    for (Index v = 0; v < x.action_count(); ++v)
      if (x.action_label(u) == x.action_label(v)) {
        action[{u, v}] = static_cast<Index>(p.actions.size());
        p.actions.emplace_back(u, v);
      }
  auto t = tuples(x);
  for (const auto& [a0, u0, b0] : t)
    for (const auto& [a1, u1, b1] : t) {
      if (u0.size() != u1.size()) continue;
      const std::size_t k = u0.size();
      bool ok = true;
      for (std::size_t i = 0; ok && i < k; ++i) ok = x.action_label(u0[i]) == x.action_label(u1[i]);
      // every choice of side for source, each action and target
      for (std::size_t m = 0; ok && m < (std::size_t{1} << (k + 2)); ++m) {
        Index src = (m & 1) ? a1 : a0;
        Index tgt = (m >> (k + 1) & 1) ? b1 : b0;
        std::vector<Index> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = (m >> (i + 1) & 1) ? u1[i] : u0[i];
        ok = t.contains({src, w, tgt});
      }
      if (!ok) continue;
      std::vector<Index> w;
      for (std::size_t i = 0; i < k; ++i) w.push_back(action.at({u0[i], u1[i]}));
      p.transitions.emplace(a0 * n + a1, w, b0 * n + b1);
    }
  return p;
}

namespace {

// Is there a cube C_k whose top is tr, inside t? Vertices are bit masks,
// assigned by increasing popcount and checked on every edge-sequence.
bool filled(const std::set<Tuple>& t, std::size_t states, const Tuple& tr) {
  const auto& [src, u, tgt] = tr;
  const std::size_t k = u.size();
  const std::size_t corners = std::size_t{1} << k;
  std::vector<std::size_t> order(corners);
  for (std::size_t m = 0; m < corners; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(),
                   [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  std::vector<Index> at(corners, 0);
  std::vector<bool> set(corners, false);
  at[0] = src;
  at[corners - 1] = tgt;
  set[0] = set[corners - 1] = true;
  // every pair m < m' (as sets) with both assigned: all orderings of the
  // differing coordinates must be transitions
  auto consistent = [&](std::size_t m) {
    for (std::size_t o = 0; o < corners; ++o) {
      if (!set[o] || o == m) continue;
      std::size_t lo = m, hi = o;
      if ((lo & hi) != lo) std::swap(lo, hi);
      if ((lo & hi) != lo) continue;
      std::vector<Index> w;
      for (std::size_t i = 0; i < k; ++i)
        if ((hi >> i & 1) && !(lo >> i & 1)) w.push_back(u[i]);
      std::sort(w.begin(), w.end());
      do
        if (!t.contains({at[lo], w, at[hi]})) return false;
      while (std::next_permutation(w.begin(), w.end()));
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == corners) return consistent(corners - 1);
    std::size_t m = order[i];
    if (set[m]) return go(i + 1);
    for (Index s = 0; s < states; ++s) {
      at[m] = s;
      set[m] = true;
      if (consistent(m) && go(i + 1)) return true;
      set[m] = false;
    }
    return false;
  };
  return go(1);
}

}  // namespace

PathSpace cubical_part(const PathSpace& p) {
  std::set<Index> used;
  for (const auto& [a, u, b] : p.transitions)
    if (u.size() == 1) used.insert(u[0]);
  PathSpace out{p.states, p.actions, {}};
  for (const auto& tr : p.transitions) {
    const auto& u = std::get<1>(tr);
    if (!std::all_of(u.begin(), u.end(), [&](Index a) { return used.contains(a); })) continue;
    if (filled(p.transitions, p.states, tr)) out.transitions.insert(tr);
  }
  out.transitions = closure(out.transitions, out.states);
  return out;
}

std::set<std::pair<Index, Index>> reachable_pairs(const PathSpace& p, std::size_t n, Index base) {
  std::set<Index> seen{static_cast<Index>(base * n + base)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [a, u, b] : p.transitions)
      if (seen.contains(a) && seen.insert(b).second) grew = true;
  }
  std::set<std::pair<Index, Index>> out;
  for (Index s : seen) out.emplace(s / n, s % n);
  return out;
}

std::set<Index> reachable(const TransitionSystem& x, Index base) {
  std::set<Index> seen{base};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& t : x.transitions())
      if (seen.contains(t.source) && seen.insert(t.target).second) grew = true;
  }
  return seen;
}

}  // namespace oracle
