#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hdts/catops.hpp"
#include "hdts/cyl.hpp"
#include "hdts/generators.hpp"
#include "oracles.hpp"

using namespace hdts;

namespace {

const Alphabet sigma = corpus::ab();

TransitionSystem with(std::vector<std::string> states, std::vector<ActionDecl> actions,
                      std::vector<TransitionDecl> ts) {
  return TransitionSystem(sigma, std::move(states), std::move(actions), ts);
}

}  // namespace

TEST(Alphabet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Alphabet(std::vector<std::string>{}), ArgumentError);
  EXPECT_THROW(Alphabet({"a", "a"}), ArgumentError);
  EXPECT_EQ(Alphabet({"b", "a"}).labels(), (std::vector<std::string>{"a", "b"}));
}

TEST(TransitionSystem, StructuralErrorsNameTheIdentifier) {
  try {
    with({"p"}, {{"u", "a"}}, {{"p", {"v"}, "p"}});
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("'v'"), std::string::npos);
  }
  EXPECT_THROW(with({"p"}, {{"u", "c"}}, {}), StructuralError);
  EXPECT_THROW(with({"p", "p"}, {}, {}), StructuralError);
  EXPECT_THROW(with({"p"}, {{"u", "a"}}, {{"q", {"u"}, "p"}}), StructuralError);
}

TEST(Validate, Fig1IsWeak) { EXPECT_TRUE(validate(fig1(sigma, "a", "b")).ok()); }

TEST(Validate, MissingPermutation) {
  auto x = with({"p", "q"}, {{"u", "a"}, {"v", "b"}}, {{"p", {"u", "v"}, "q"}});
  auto r = validate(x);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, "multiset");
  ASSERT_TRUE(r.violations[0].missing);
  EXPECT_EQ(*r.violations[0].missing, (Transition{0, {1, 0}, 1}));
  EXPECT_EQ(r.violations[0].witnesses, (std::vector<Transition>{{0, {0, 1}, 1}}));
}

TEST(Validate, MinimalPatchingInstance) {
  // n = 3, p = q = 1: the middle segment (n1, v, n2) is missing
  auto base = with({"a", "b", "n1", "n2"}, {{"u", "a"}, {"v", "b"}, {"w", "a"}},
                   {{"a", {"u", "v", "w"}, "b"},
                    {"a", {"u"}, "n1"},
                    {"n1", {"v", "w"}, "b"},
                    {"a", {"u", "v"}, "n2"},
                    {"n2", {"w"}, "b"}});
  // close under permutations only, so the patching gap is the only defect
  SystemBuilder bld(sigma);
  for (const auto& s : base.state_names()) bld.add_state(s);
  for (Index a = 0; a < base.action_count(); ++a) bld.add_action(base.action_name(a), base.action_label_name(a));
  for (const auto& t : base.transitions())
    for (auto& p : permutations(t.actions)) bld.add_transition(Transition{t.source, p, t.target});
  auto x = std::move(bld).build().system;
  auto r = validate(x);
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.violations) {
    EXPECT_EQ(v.axiom, "patching");
    if (v.missing == Transition{x.state_index("n1"), {x.action_index("v")}, x.state_index("n2")}) found = true;
    for (const auto& w : v.witnesses) EXPECT_TRUE(x.contains(w));
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(oracle::tuples(closure(x)), oracle::closure(x));
}

TEST(Closure, CubesAreFixed) {
  for (auto w : std::vector<std::vector<std::string>>{{"a"}, {"a", "b"}, {"a", "b", "a"}}) {
    auto c = cube(sigma, w);
    EXPECT_EQ(closure(c), c);
  }
}

TEST(Closure, LowDimensionUnchanged) {
  auto x = fig1(sigma, "a", "b");
  EXPECT_EQ(closure(x), x);
}

TEST(Closure, ExtensiveIdempotentAndMatchesOracle) {
  for (const auto& e : corpus::all()) {
    auto c = closure(e.system);
    EXPECT_EQ(closure(c), c) << e.name;
    EXPECT_TRUE(validate(c).ok()) << e.name;
    EXPECT_EQ(oracle::tuples(c), oracle::closure(e.system)) << e.name;
  }
}

TEST(Closure, RandomCandidatesMatchOracle) {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    SystemBuilder b(sigma);
    std::uniform_int_distribution<int> st(0, 3), ac(0, 2), dim(1, 4);
    for (int s = 0; s < 4; ++s) b.add_state("s" + std::to_string(s));
    for (int a = 0; a < 3; ++a) b.add_action("u" + std::to_string(a), a % 2 ? "b" : "a");
    for (int k = 0; k < 8; ++k) {
      Transition t{static_cast<Index>(st(rng)), {}, static_cast<Index>(st(rng))};
      for (int n = dim(rng); n > 0; --n) t.actions.push_back(static_cast<Index>(ac(rng)));
      b.add_transition(t);
    }
    auto x = std::move(b).build().system;
    EXPECT_EQ(oracle::tuples(closure(x)), oracle::closure(x));
    EXPECT_EQ(validate(x).ok(), oracle::is_weak(x));
  }
}

TEST(Restrict, Examples) {
  auto c2 = cube(sigma, {"a", "b"});
  EXPECT_EQ(restrict(c2, {0, 1, 2, 3}), c2);
  auto corners = restrict(c2, {c2.state_index("00"), c2.state_index("11")});
  EXPECT_EQ(corners.state_count(), 2u);
  EXPECT_EQ(corners.action_count(), 2u);
  EXPECT_EQ(corners.transition_count(), 2u);
  EXPECT_EQ(corners.count_of_dimension(2), 2u);
  auto none = restrict(c2, {});
  EXPECT_EQ(none.state_count(), 0u);
  EXPECT_EQ(none.action_count(), 2u);
  EXPECT_EQ(none.transition_count(), 0u);
  EXPECT_THROW(restrict(c2, {9}), ArgumentError);
}

TEST(Restrict, StaysWeakAndNeverAddsTransitions) {
  for (const auto& e : corpus::with_at_most(5)) {
    const auto& x = e.system;
    for (std::size_t mask = 0; mask < (std::size_t{1} << x.state_count()); ++mask) {
      StateSet keep;
      for (Index s = 0; s < x.state_count(); ++s)
        if (mask >> s & 1) keep.insert(s);
      auto r = restrict(x, keep);
      EXPECT_TRUE(validate(r).ok()) << e.name;
      EXPECT_LE(r.transition_count(), x.transition_count());
      for (const auto& t : r.transitions())
        EXPECT_TRUE(x.contains(Transition{x.state_index(r.state_name(t.source)), t.actions,
                                          x.state_index(r.state_name(t.target))}));
    }
  }
}

TEST(CheckMorphism, Examples) {
  auto c1 = cube(sigma, {"a"});
  EXPECT_TRUE(check_morphism(identity(c1)).ok());
  EXPECT_TRUE(check_morphism(cylinder(c1).gamma0).ok());
  auto b1 = cube(sigma, {"b"});
  Morphism bad{c1, b1, {0, 1}, {0}};
  auto r = check_morphism(bad);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].axiom, "label preservation");
}

TEST(ResolveMorphism, PartialMapsAreStructuralErrors) {
  auto c1 = cube(sigma, {"a"});
  EXPECT_THROW(resolve_morphism(c1, c1, {{"0", "0"}}, {{"(a,1)", "(a,1)"}}), StructuralError);
  EXPECT_THROW(resolve_morphism(c1, c1, {{"0", "0"}, {"1", "x"}}, {{"(a,1)", "(a,1)"}}), StructuralError);
}

TEST(IsMono, Examples) {
  auto c1 = cube(sigma, {"a"});
  auto cy = cylinder(c1);
  EXPECT_TRUE(is_mono(cy.gamma0).mono);
  auto v = is_mono(cy.sigma);
  EXPECT_FALSE(v.mono);
  ASSERT_TRUE(v.collapsed_states);
  EXPECT_EQ(cy.sigma.state_map[v.collapsed_states->first], cy.sigma.state_map[v.collapsed_states->second]);
  EXPECT_FALSE(is_mono(r_map(sigma)).mono);
}

TEST(IsMono, AgreesWithCancellation) {
  std::vector<TransitionSystem> probes{point(sigma), action_object(sigma, "a"), action_object(sigma, "b")};
  auto small = corpus::with_at_most(3);
  for (const auto& x : small)
    for (const auto& y : small) {
      if (x.system.transition_count() > 6 || y.system.transition_count() > 6) continue;
      for (const auto& f : hom(x.system, y.system)) EXPECT_EQ(is_mono(f).mono, oracle::cancels(f, probes));
    }
}

TEST(Compose, AssociativeAndValid) {
  auto c1 = cube(sigma, {"a"});
  auto cy = cylinder(c1);
  auto f = cy.gamma0, g = cylinder_map(cy.gamma1), h = cylinder(cy.system).sigma;
  EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
  EXPECT_TRUE(check_morphism(compose(h, compose(g, f))).ok());
}

TEST(FindIsomorphism, Examples) {
  auto fig = fig1(sigma, "a", "b");
  auto iso = find_isomorphism(fig, fig);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_isomorphism(*iso));
  EXPECT_FALSE(find_isomorphism(cube(sigma, {"a"}), cube(sigma, {"b"})));

  // cyl(C_1[a]) written out by hand
  std::vector<TransitionDecl> ts;
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 2; ++u)
      for (int t = 0; t < 2; ++t)
        ts.push_back({"p" + std::to_string(s), {"x" + std::to_string(u)}, "q" + std::to_string(t)});
  auto hand = with({"p0", "p1", "q0", "q1"}, {{"x0", "a"}, {"x1", "a"}}, ts);
  EXPECT_EQ(hand.transition_count(), 8u);
  auto found = find_isomorphism(cylinder(cube(sigma, {"a"})).system, hand);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_isomorphism(*found));
}

TEST(FindIsomorphism, RelabelledCopies) {
  for (const auto& e : corpus::all()) {
    if (e.system.state_count() > 8) continue;
    // rename every state and action; the result must be found isomorphic
    std::vector<std::string> states;
    for (const auto& s : e.system.state_names()) states.push_back("z" + s);
    std::vector<ActionDecl> acts;
    for (Index a = 0; a < e.system.action_count(); ++a)
      acts.push_back({"y" + e.system.action_name(a), e.system.action_label_name(a)});
    std::vector<TransitionDecl> ts;
    for (const auto& t : e.system.transitions()) {
      TransitionDecl d{"z" + e.system.state_name(t.source), {}, "z" + e.system.state_name(t.target)};
      for (Index a : t.actions) d.actions.push_back("y" + e.system.action_name(a));
      ts.push_back(d);
    }
    TransitionSystem copy(sigma, states, acts, ts);
    auto iso = find_isomorphism(e.system, copy);
    ASSERT_TRUE(iso) << e.name;
    EXPECT_TRUE(is_isomorphism(*iso)) << e.name;
  }
}

TEST(Inverse, RejectsNonIsomorphisms) {
  EXPECT_THROW(inverse(r_map(sigma)), ArgumentError);
  auto c = cube(sigma, {"a", "b"});
  EXPECT_EQ(inverse(identity(c)), identity(c));
}
