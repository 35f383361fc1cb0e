#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hdts/catops.hpp"
#include "hdts/cyl.hpp"
#include "hdts/generators.hpp"
#include "hdts/subcats.hpp"
#include "oracles.hpp"

using namespace hdts;

namespace {
const Alphabet sigma = corpus::ab();
}

TEST(Hom, Examples) {
  auto c1 = cube(sigma, {"a"});
  EXPECT_EQ(count_hom(point(sigma), c1), 2u);
  EXPECT_EQ(count_hom(action_object(sigma, "a"), c1), 1u);
  EXPECT_EQ(count_hom(cylinder(c1).system, c1), 1u);
}

TEST(Hom, CompleteAgainstRawMaps) {
  auto small = corpus::with_at_most(3);
  for (const auto& x : small)
    for (const auto& y : small) {
      if (x.system.action_count() > 2 || y.system.action_count() > 4) continue;
      auto got = hom(x.system, y.system);
      auto want = oracle::all_maps(x.system, y.system);
      ASSERT_EQ(got.size(), want.size()) << x.name << " -> " << y.name;
      std::set<std::pair<std::vector<Index>, std::vector<Index>>> a, b;
      for (const auto& f : got) a.emplace(f.state_map, f.action_map);
      for (const auto& f : want) b.emplace(f.state_map, f.action_map);
      EXPECT_EQ(a, b);
    }
}

TEST(Product, Examples) {
  auto p = product(cube(sigma, {"a"}), cube(sigma, {"b"}));
  EXPECT_EQ(p.system.state_count(), 4u);
  EXPECT_EQ(p.system.action_count(), 0u);
  EXPECT_EQ(p.system.transition_count(), 0u);

  for (auto w : std::vector<std::vector<std::string>>{{"a"}, {"a", "b"}}) {
    auto x = cube(sigma, w);
    EXPECT_TRUE(find_isomorphism(product(x, terminal(sigma, 2)).system, x));
  }
  auto c1 = cube(sigma, {"a"});
  auto pv = product(c1, interval(sigma, 2));
  EXPECT_EQ(pv.system.count_of_dimension(1), 8u);
  EXPECT_TRUE(find_isomorphism(pv.system, cylinder(c1).system));
}

TEST(Product, CylinderAgreesWithProductWithInterval) {
  for (const auto& e : corpus::all()) {
    if (e.system.max_dimension() > 2 || e.system.state_count() > 4) continue;
    auto pv = product(e.system, interval(sigma, 2));
    EXPECT_TRUE(find_isomorphism(pv.system, cylinder(e.system).system)) << e.name;
  }
}

TEST(Product, UniversalProperty) {
  auto x = fig1(sigma, "a", "b"), y = cube(sigma, {"a"});
  auto p = product(x, y);
  EXPECT_TRUE(validate(p.system).ok());
  for (const auto& w : {point(sigma), cube(sigma, {"a"}), action_object(sigma, "a")})
    for (const auto& f : hom(w, x))
      for (const auto& g : hom(w, y)) {
        auto h = pairing(p, f, g);
        EXPECT_TRUE(check_morphism(h).ok());
        EXPECT_EQ(compose(p.first, h), f);
        EXPECT_EQ(compose(p.second, h), g);
        std::size_t factoring = 0;
        for (const auto& k : hom(w, p.system))
          if (compose(p.first, k) == f && compose(p.second, k) == g) ++factoring;
        EXPECT_EQ(factoring, 1u);
      }
}

TEST(Coproduct, Examples) {
  EXPECT_EQ(coproduct(sigma, {point(sigma), point(sigma)}).apex.state_count(), 2u);
  auto s = coproduct(sigma, {cube(sigma, {"a"}), cube(sigma, {"b"})}).apex;
  EXPECT_EQ(s.state_count(), 4u);
  EXPECT_EQ(s.action_count(), 2u);
  EXPECT_EQ(s.transition_count(), 2u);
  auto empty = coproduct(sigma, {}).apex;
  EXPECT_EQ(empty.state_count(), 0u);
  for (const auto& leg : coproduct(sigma, {cube(sigma, {"a"}), fig1(sigma, "a", "b")}).legs)
    EXPECT_TRUE(is_mono(leg).mono);
}

TEST(Colimit, AmalgamatedSum) {
  auto p = point(sigma);
  auto ca = cube(sigma, {"a"}), cb = cube(sigma, {"b"});
  auto po = pushout(Morphism{p, ca, {1}, {}}, Morphism{p, cb, {0}, {}});
  EXPECT_EQ(po.apex.state_count(), 3u);
  EXPECT_EQ(po.apex.action_count(), 2u);
  EXPECT_EQ(po.apex.transition_count(), 2u);
}

TEST(Colimit, EmptySpanGivesCoproduct) {
  auto x = fig1(sigma, "a", "b"), y = cube(sigma, {"a", "b"});
  auto po = pushout(from_empty(x), from_empty(y));
  EXPECT_TRUE(find_isomorphism(po.apex, coproduct(sigma, {x, y}).apex));
}

TEST(Colimit, Coequalizer) {
  auto p = point(sigma), c1 = cube(sigma, {"a"});
  Diagram d{sigma, {p, c1}, {{0, 1, Morphism{p, c1, {0}, {}}}, {0, 1, Morphism{p, c1, {1}, {}}}}};
  auto col = colimit(d);
  EXPECT_EQ(col.apex.state_count(), 1u);
  EXPECT_EQ(col.apex.action_count(), 1u);
  EXPECT_TRUE(col.apex.contains(Transition{0, {0}, 0}));
  EXPECT_TRUE(validate(col.apex).ok());
  EXPECT_TRUE(is_cocone(d, col));
}

TEST(Colimit, MixedAlphabets) {
  Alphabet other({"a"});
  Diagram d{sigma, {point(sigma), point(other)}, {}};
  EXPECT_THROW(colimit(d), ArgumentError);
}

TEST(Colimit, UniversalPropertyAgainstCocones) {
  auto p = point(sigma), c1 = cube(sigma, {"a"});
  Diagram d{sigma, {p, c1, c1}, {{0, 1, Morphism{p, c1, {1}, {}}}, {0, 2, Morphism{p, c1, {0}, {}}}}};
  auto col = colimit(d);
  for (const auto& target : {fig1(sigma, "a", "b"), cube(sigma, {"a", "a"}), terminal(sigma, 1)}) {
    for (const auto& f1 : hom(c1, target))
      for (const auto& f2 : hom(c1, target)) {
        Cocone other{target, {compose(f1, d.arrows[0].map), f1, f2}};
        if (!is_cocone(d, other)) continue;
        std::size_t factoring = 0;
        for (const auto& k : hom(col.apex, target)) {
          bool ok = true;
          for (std::size_t i = 0; i < 3; ++i) ok &= compose(k, col.legs[i]) == other.legs[i];
          factoring += ok;
        }
        EXPECT_EQ(factoring, 1u);
        EXPECT_EQ(compose(factor_through(d, col, other), col.legs[1]), f1);
      }
  }
}

TEST(Colimit, CubicalAndRegularVariants) {
  auto c1 = cube(sigma, {"a"}), c2 = cube(sigma, {"a", "b"});
  auto face = Morphism{c1, c2, {c2.state_index("00"), c2.state_index("10")}, {c2.action_index("(a,1)")}};
  auto cts = pushout(face, face, Variant::cts);
  EXPECT_TRUE(is_cubical(cts.apex));
  auto rts = pushout(face, face, Variant::rts);
  EXPECT_TRUE(is_regular(rts.apex));
  EXPECT_THROW(pushout(from_empty(pure_cube(sigma, {"a", "b"})), from_empty(c1), Variant::cts), ArgumentError);
}

TEST(StarProduct, Examples) {
  auto p = point(sigma);
  auto sp = star_product(from_empty(p), StarWhich::gamma0);
  EXPECT_EQ(sp.map.source.state_count(), 1u);
  EXPECT_EQ(sp.map.target.state_count(), 2u);
  EXPECT_TRUE(is_mono(sp.map).mono);

  auto f = pure_cube_inclusion(sigma, {"a"});
  auto s = star_product(f, StarWhich::gamma0);
  EXPECT_TRUE(is_mono(s.map).mono);
  EXPECT_EQ(s.map.target.transition_count(), 8u);

  for (auto which : {StarWhich::gamma0, StarWhich::gamma1, StarWhich::gamma}) {
    auto id = identity(fig1(sigma, "a", "b"));
    auto si = star_product(id, which);
    EXPECT_TRUE(is_mono(si.map).mono);
    EXPECT_TRUE(check_morphism(si.map).ok());
  }
}

TEST(StarProduct, MonosGiveMonos) {
  for (const auto& f : {boundary_inclusion(sigma, {"a", "b"}), double_inclusion(sigma, "b"),
                        pure_cube_inclusion(sigma, {"b", "a"}), cylinder_gamma(cube(sigma, {"a"}))})
    for (auto which : {StarWhich::gamma0, StarWhich::gamma1, StarWhich::gamma}) {
      auto s = star_product(f, which);
      EXPECT_TRUE(check_morphism(s.map).ok());
      EXPECT_TRUE(is_mono(s.map).mono);
      EXPECT_TRUE(validate(s.map.source).ok());
    }
}
