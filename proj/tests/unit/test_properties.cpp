// Randomized properties over small closed systems. The generator is seeded
// per test so failures reproduce; the failing seed is printed.

#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "hdts/catops.hpp"
#include "hdts/cyl.hpp"
#include "hdts/document.hpp"
#include "hdts/model.hpp"
#include "hdts/subcats.hpp"
#include "oracles.hpp"

using namespace hdts;

namespace {

const Alphabet sigma = corpus::ab();
constexpr int kTrials = 40;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  TransitionSystem system(int states = 4, int actions = 3, int dim = 2) {
    return corpus::random_system(rng, sigma, states, actions, dim);
  }

  // Transitions as given, with no closure applied.
  TransitionSystem raw(int states, int actions, int count, int dim) {
    std::uniform_int_distribution<int> ns(1, states), na(1, actions);
    int n = ns(rng), m = na(rng);
    std::vector<std::string> st;
    for (int i = 0; i < n; ++i) st.push_back("s" + std::to_string(i));
    std::vector<ActionDecl> ac;
    for (int i = 0; i < m; ++i) ac.push_back({"u" + std::to_string(i), sigma.label(rng() % sigma.size())});
    std::vector<TransitionDecl> ts;
    for (int k = 0; k < count; ++k) {
      TransitionDecl t{st[rng() % n], {}, st[rng() % n]};
      int d = 1 + static_cast<int>(rng() % dim);
      for (int i = 0; i < d; ++i) t.actions.push_back(ac[rng() % m].id);
      ts.push_back(t);
    }
    return TransitionSystem(sigma, st, ac, ts);
  }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[rng() % xs.size()];
  }
};

}  // namespace

TEST(Properties, ClosureMatchesOracle) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(1000 + i);
    auto x = g.raw(5, 3, 5, 3);
    auto c = closure(x);
    EXPECT_EQ(oracle::tuples(c), oracle::closure(x)) << "seed " << 1000 + i;
    EXPECT_TRUE(validate(c).ok()) << "seed " << 1000 + i;
    EXPECT_EQ(closure(c), c);
    EXPECT_EQ(validate(x).ok(), oracle::is_weak(x)) << "seed " << 1000 + i;
  }
}

TEST(Properties, HomMatchesRawMaps) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(2000 + i);
    auto x = g.system(3, 2, 2), y = g.system(3, 3, 2);
    auto h = hom(x, y);
    auto o = oracle::all_maps(x, y);
    EXPECT_EQ(h.size(), o.size()) << "seed " << 2000 + i;
    for (const auto& f : h) EXPECT_TRUE(check_morphism(f).ok());
    EXPECT_EQ(count_hom(x, y), h.size());
  }
}

TEST(Properties, CompositionPreserves) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(3000 + i);
    auto x = g.system(3, 2, 2), y = g.system(3, 2, 2), z = g.system(3, 2, 2);
    auto f = hom(x, y), h = hom(y, z);
    if (f.empty() || h.empty()) continue;
    auto c = compose(g.pick(h), g.pick(f));
    EXPECT_TRUE(oracle::preserves(c)) << "seed " << 3000 + i;
    EXPECT_EQ(compose(c, identity(x)), c);
  }
}

TEST(Properties, CylinderRetractionAndAdjunction) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(4000 + i);
    auto x = g.system(3, 2, 2), y = g.system(3, 2, 2);
    auto cy = cylinder(x);
    EXPECT_TRUE(validate(cy.system).ok());
    EXPECT_EQ(cy.system.state_count(), 2 * x.state_count());
    EXPECT_EQ(compose(cy.sigma, cy.gamma0), identity(x));
    EXPECT_EQ(compose(cy.sigma, cy.gamma1), identity(x));
    auto fs = hom(cy.system, y);
    if (fs.empty()) continue;
    auto f = g.pick(fs);
    auto t = transpose(x, f);
    EXPECT_TRUE(check_morphism(t).ok()) << "seed " << 4000 + i;
    EXPECT_EQ(untranspose(y, t), f) << "seed " << 4000 + i;
  }
}

TEST(Properties, ProductAndCoproductCounts) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(5000 + i);
    auto x = g.system(3, 2, 2), y = g.system(3, 2, 2);
    auto p = product(x, y);
    EXPECT_EQ(p.system.state_count(), x.state_count() * y.state_count());
    EXPECT_TRUE(validate(p.system).ok());
    auto s = coproduct(sigma, {x, y});
    EXPECT_EQ(s.apex.state_count(), x.state_count() + y.state_count());
    EXPECT_EQ(s.apex.transition_count(), x.transition_count() + y.transition_count());
    EXPECT_TRUE(is_mono(s.legs[0]).mono);
  }
}

TEST(Properties, ReflectionsLandInSubcategories) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(6000 + i);
    auto x = g.system(4, 3, 2);
    auto k = cubicalify(x);
    EXPECT_TRUE(oracle::is_cubical(k.system)) << "seed " << 6000 + i;
    EXPECT_TRUE(check_morphism(k.counit).ok());
    auto r = regularize(k.system);
    EXPECT_TRUE(oracle::is_regular(r.system)) << "seed " << 6000 + i;
    EXPECT_TRUE(check_morphism(r.unit).ok());
    EXPECT_TRUE(is_surjective_on_states(r.unit));
    if (is_regular(k.system)) EXPECT_TRUE(is_isomorphism(r.unit));
  }
}

TEST(Properties, FactorR) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(7000 + i);
    auto x = g.system(4, 2, 2), y = g.system(3, 3, 2);
    auto fs = hom(x, y);
    if (fs.empty()) continue;
    auto f = g.pick(fs);
    auto r = factor_R(f);
    EXPECT_EQ(compose(r.plus, r.minus), f) << "seed " << 7000 + i;
    EXPECT_TRUE(is_injective_on_states(r.plus));
    EXPECT_TRUE(is_surjective_on_states(r.minus));
    EXPECT_TRUE(validate(r.minus.target).ok());
  }
}

TEST(Properties, DocumentRoundTrip) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(8000 + i);
    Document d;
    d.sigma = sigma;
    d.put("X", g.system(5, 4, 3));
    d.put("Y", g.system(3, 2, 2));
    auto fs = hom(d.system("X"), d.system("Y"));
    if (!fs.empty()) d.put("f", "X", "Y", g.pick(fs));
    std::string text = emit_document(d);
    auto back = parse_document(text);
    EXPECT_EQ(back.system("X"), d.system("X"));
    EXPECT_EQ(emit_document(back), text) << "seed " << 8000 + i;
  }
}

TEST(Properties, IsomorphismUnderRenaming) {
  for (int i = 0; i < kTrials; ++i) {
    Gen g(9000 + i);
    auto x = g.system(5, 3, 2);
    // rename states by a random permutation
    std::vector<std::string> names(x.state_names());
    std::shuffle(names.begin(), names.end(), g.rng);
    std::vector<ActionDecl> acts;
    for (Index a = 0; a < x.action_count(); ++a) acts.push_back({x.action_name(a), x.action_label_name(a)});
    std::vector<TransitionDecl> ts;
    for (const auto& t : x.transitions()) {
      TransitionDecl d{names[t.source], {}, names[t.target]};
      for (Index a : t.actions) d.actions.push_back(x.action_name(a));
      ts.push_back(d);
    }
    TransitionSystem y(sigma, x.state_names(), acts, ts);
    auto iso = find_isomorphism(x, y);
    ASSERT_TRUE(iso) << "seed " << 9000 + i;
    EXPECT_TRUE(is_isomorphism(*iso));
    EXPECT_EQ(compose(inverse(*iso), *iso), identity(x));
  }
}
