#include "hdts/generators.hpp"

#include <algorithm>

#include "hdts/catops.hpp"

namespace hdts {

namespace {

void require_labels(const Alphabet& sigma, const std::vector<std::string>& xs) {
  for (const auto& x : xs) sigma.index_of(x);
}

std::string corner(std::size_t n, char bit) { return std::string(n, bit); }

std::string cube_action(const std::string& x, std::size_t i) {
  return "(" + x + "," + std::to_string(i + 1) + ")";
}

// Appends every word of length 1..d over `letters` to `out`.
void all_words(const std::vector<Index>& letters, int d, std::vector<std::vector<Index>>& out) {
  std::vector<std::vector<Index>> layer{{}};
  for (int len = 1; len <= d; ++len) {
    std::vector<std::vector<Index>> next;
    for (const auto& w : layer)
      for (Index l : letters) {
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

TransitionSystem cube_upto(const Alphabet& sigma, const std::vector<std::string>& xs,
                           std::size_t max_dim) {
  require_labels(sigma, xs);
  const std::size_t n = xs.size();
  if (n == 0) throw ArgumentError("cubes need at least one label");
  SystemBuilder b(sigma);
  const std::size_t corners = std::size_t{1} << n;
  auto name = [n](std::size_t mask) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s[i] = '1';
    return s;
  };
  std::vector<Index> state(corners);
  for (std::size_t m = 0; m < corners; ++m) state[m] = b.add_state(name(m));
  std::vector<Index> action(n);
  for (std::size_t i = 0; i < n; ++i) action[i] = b.add_action(cube_action(xs[i], i), xs[i]);
  for (std::size_t from = 0; from < corners; ++from) {
    for (std::size_t to = 0; to < corners; ++to) {
      if ((from & to) != from || from == to) continue;
      std::vector<Index> moved;
      for (std::size_t i = 0; i < n; ++i)
        if ((to ^ from) & (std::size_t{1} << i)) moved.push_back(action[i]);
      if (moved.size() > max_dim) continue;
      for (auto& perm : permutations(moved))
        b.add_transition(Transition{state[from], std::move(perm), state[to]});
    }
  }
  return std::move(b).build().system;
}

}  // namespace

TransitionSystem point(const Alphabet& sigma) {
  return TransitionSystem(sigma, {"0"}, {}, {});
}

TransitionSystem action_object(const Alphabet& sigma, const std::string& x) {
  require_labels(sigma, {x});
  return TransitionSystem(sigma, {}, {{x, x}}, {});
}

TransitionSystem pure_cube_frame(const Alphabet& sigma, const std::vector<std::string>& xs) {
  require_labels(sigma, xs);
  if (xs.empty()) throw ArgumentError("cubes need at least one label");
  std::vector<ActionDecl> actions;
  for (std::size_t i = 0; i < xs.size(); ++i) actions.push_back({cube_action(xs[i], i), xs[i]});
  return TransitionSystem(sigma, {corner(xs.size(), '0'), corner(xs.size(), '1')},
                          std::move(actions), {});
}

TransitionSystem pure_cube(const Alphabet& sigma, const std::vector<std::string>& xs) {
  require_labels(sigma, xs);
  if (xs.empty()) throw ArgumentError("cubes need at least one label");
  SystemBuilder b(sigma);
  Index lo = b.add_state(corner(xs.size(), '0'));
  Index hi = b.add_state(corner(xs.size(), '1'));
  std::vector<Index> top;
  for (std::size_t i = 0; i < xs.size(); ++i) top.push_back(b.add_action(cube_action(xs[i], i), xs[i]));
  for (auto& perm : permutations(top)) b.add_transition(Transition{lo, std::move(perm), hi});
  return std::move(b).build().system;
}

TransitionSystem cube(const Alphabet& sigma, const std::vector<std::string>& xs) {
  return cube_upto(sigma, xs, xs.size());
}

TransitionSystem boundary_cube(const Alphabet& sigma, const std::vector<std::string>& xs) {
  if (xs.empty()) throw ArgumentError("cubes need at least one label");
  return cube_upto(sigma, xs, xs.size() - 1);
}

TransitionSystem double_transition(const Alphabet& sigma, const std::string& x) {
  require_labels(sigma, {x});
  return TransitionSystem(sigma, {"1", "2", "3", "4"}, {{x, x}},
                          {{"1", {x}, "2"}, {"3", {x}, "4"}});
}

TransitionSystem interval(const Alphabet& sigma, int dimension) {
  if (dimension < 0) throw ArgumentError("negative dimension bound");
  SystemBuilder b(sigma);
  Index s[2] = {b.add_state("0"), b.add_state("1")};
  std::vector<Index> letters;
  for (const auto& x : sigma.labels())
    for (int e = 0; e < 2; ++e)
      letters.push_back(b.add_action("(" + x + "," + std::to_string(e) + ")", x));
  std::vector<std::vector<Index>> words;
  all_words(letters, dimension, words);
  for (Index from : s)
    for (Index to : s)
      for (const auto& w : words) b.add_transition(Transition{from, w, to});
  return std::move(b).build().system;
}

TransitionSystem terminal(const Alphabet& sigma, int dimension) {
  if (dimension < 0) throw ArgumentError("negative dimension bound");
  SystemBuilder b(sigma);
  Index s = b.add_state("0");
  std::vector<Index> letters;
  for (const auto& x : sigma.labels()) letters.push_back(b.add_action(x, x));
  std::vector<std::vector<Index>> words;
  all_words(letters, dimension, words);
  for (const auto& w : words) b.add_transition(Transition{s, w, s});
  return std::move(b).build().system;
}

TransitionSystem fig1(const Alphabet& sigma, const std::string& a, const std::string& b) {
  require_labels(sigma, {a, b});
  if (a == b) throw ArgumentError("the a||b square needs two distinct labels");
  return TransitionSystem(sigma, {"alpha", "beta", "gamma", "delta"}, {{a, a}, {b, b}},
                          {{"alpha", {a}, "beta"},
                           {"beta", {b}, "delta"},
                           {"alpha", {b}, "gamma"},
                           {"gamma", {a}, "delta"},
                           {"alpha", {a, b}, "delta"},
                           {"alpha", {b, a}, "delta"}});
}

TransitionSystem make(const GeneratorSpec& spec, const Alphabet& sigma) {
  auto one = [&]() -> const std::string& {
    if (spec.labels.size() != 1) throw ArgumentError("generator expects exactly one label");
    return spec.labels.front();
  };
  switch (spec.kind) {
    case GeneratorKind::point: return point(sigma);
    case GeneratorKind::action: return action_object(sigma, one());
    case GeneratorKind::pure_cube: return pure_cube(sigma, spec.labels);
    case GeneratorKind::cube: return cube(sigma, spec.labels);
    case GeneratorKind::boundary_cube: return boundary_cube(sigma, spec.labels);
    case GeneratorKind::double_transition: return double_transition(sigma, one());
    case GeneratorKind::interval: return interval(sigma, spec.dimension);
    case GeneratorKind::terminal: return terminal(sigma, spec.dimension);
    case GeneratorKind::fig1:
      if (spec.labels.size() != 2) throw ArgumentError("fig1 expects two labels");
      return fig1(sigma, spec.labels[0], spec.labels[1]);
  }
  throw ArgumentError("unknown generator");
}

Morphism pure_cube_inclusion(const Alphabet& sigma, const std::vector<std::string>& xs) {
  return inclusion(pure_cube_frame(sigma, xs), pure_cube(sigma, xs));
}

Morphism boundary_inclusion(const Alphabet& sigma, const std::vector<std::string>& xs) {
  return inclusion(boundary_cube(sigma, xs), cube(sigma, xs));
}

Morphism double_inclusion(const Alphabet& sigma, const std::string& x) {
  TransitionSystem edge = cube(sigma, {x});
  TransitionSystem twice = double_transition(sigma, x);
  return resolve_morphism(edge, twice, {{"0", "1"}, {"1", "2"}}, {{cube_action(x, 0), x}});
}

Morphism from_empty(const TransitionSystem& y) {
  return Morphism{TransitionSystem(y.alphabet()), y, {}, {}};
}

Morphism to_terminal(const TransitionSystem& x, int dimension) {
  if (static_cast<int>(x.max_dimension()) > dimension)
    throw ArgumentError("system exceeds the terminal object's dimension bound");
  TransitionSystem one = terminal(x.alphabet(), dimension);
  Morphism f{x, one, std::vector<Index>(x.state_count(), 0), {}};
  for (Index a = 0; a < x.action_count(); ++a)
    f.action_map.push_back(one.action_index(x.action_label_name(a)));
  return f;
}

Morphism r_map(const Alphabet& sigma) {
  TransitionSystem two(sigma, {"0", "1"}, {}, {});
  return Morphism{two, point(sigma), {0, 0}, {}};
}

HomCount hom_characterization_check(ProbeKind kind, const std::vector<std::string>& labels,
                                    const TransitionSystem& x) {
  HomCount c;
  switch (kind) {
    case ProbeKind::point:
      c.enumerated = count_hom(point(x.alphabet()), x);
      c.direct = x.state_count();
      break;
    case ProbeKind::action: {
      if (labels.size() != 1) throw ArgumentError("action probe expects one label");
      c.enumerated = count_hom(action_object(x.alphabet(), labels[0]), x);
      for (Index a = 0; a < x.action_count(); ++a)
        if (x.action_label_name(a) == labels[0]) ++c.direct;
      break;
    }
    case ProbeKind::pure_cube: {
      c.enumerated = count_hom(pure_cube(x.alphabet(), labels), x);
      std::vector<Index> word;
      for (const auto& l : labels) word.push_back(x.alphabet().index_of(l));
      for (const auto& t : x.transitions())
        if (x.label_word(t) == word) ++c.direct;
      break;
    }
  }
  return c;
}

}  // namespace hdts
