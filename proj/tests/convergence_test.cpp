#include <gtest/gtest.h>

#include "finconv/enumerate.hpp"
#include "finconv/spaces.hpp"

namespace {

using namespace finconv;

constexpr mask_t a = 0b001, b = 0b010, c = 0b100;

TEST(Convergence, AxiomViolationsAreReported) {
  const auto x = std::make_shared<const Carrier>(Carrier::alphabetic(2));
  // Not centered: {a}↑ does not converge to a.
  EXPECT_THROW(Convergence(x, {0, 0, 0b10, 0b10}), axiom_violation);
  // Not antitone: b is a limit of {a,b}↑ but not of the finer {a}↑.
  EXPECT_THROW(Convergence(x, {0, 0b01, 0b10, 0b11}), axiom_violation);
  EXPECT_THROW(Convergence(x, {0, 1, 2}), invalid_input);
  EXPECT_NO_THROW(Convergence(x, {0, 0b11, 0b10, 0b10}));
}

TEST(Convergence, P3OpenSetsAndAdherences) {
  const auto p3 = spaces::p3();
  EXPECT_EQ(open_masks(p3), (std::vector<mask_t>{0, c, b | c, a | b | c}));
  EXPECT_EQ(adherence(p3, Subset(3, c)).bits(), b | c);
  EXPECT_EQ(adherence(p3, Subset(3, b | c)).bits(), a | b | c);
  EXPECT_EQ(closure(p3, Subset(3, c)).bits(), a | b | c);
  EXPECT_EQ(interior(p3, Subset(3, b | c)).bits(), b | c);
  EXPECT_FALSE(spaces::p3() == apply(Functor::T, p3));
}

TEST(Convergence, SierpinskiLimits) {
  const auto s = spaces::sierpinski();
  EXPECT_EQ(s.lim(0b01), 0b11u);
  EXPECT_EQ(s.lim(0b10), 0b10u);
  EXPECT_EQ(open_masks(s), (std::vector<mask_t>{0, 0b01, 0b11}));
  EXPECT_FALSE(is_closed(s, Subset(2, 0b01)));
}

TEST(Convergence, AdherenceTableMatchesDirectScan) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& x : universe(n)) {
      const auto t = adherence_table(x);
      for (mask_t h = 1; h <= x.full(); ++h) ASSERT_EQ(t[h], adherence_mask(x, SetFamily(n, {h})));
    }
}

TEST(Convergence, CoverFormsAgreeOnTwoPoints) {
  for (const auto& x : universe(2))
    for (unsigned pick = 0; pick < 16; ++pick) {
      std::vector<mask_t> m;
      for (mask_t s = 0; s < 4; ++s)
        if ((pick >> s) & 1u) m.push_back(s);
      const SetFamily fam(2, m);
      for (mask_t s = 0; s < 4; ++s) EXPECT_TRUE(cover_forms(x, fam, Subset(2, s)).agree());
    }
}

TEST(Convergence, ClosureIsAKuratowskiOperator) {
  for (const auto& x : universe(3)) {
    EXPECT_EQ(closure_mask(x, 0), 0u);
    for (mask_t s = 0; s <= x.full(); ++s) {
      const mask_t cs = closure_mask(x, s);
      ASSERT_TRUE(subset_of(s, cs));
      ASSERT_EQ(closure_mask(x, cs), cs);
      for (mask_t t = 0; t <= x.full(); ++t) ASSERT_EQ(closure_mask(x, s | t), cs | closure_mask(x, t));
    }
  }
}

TEST(Convergence, OpenSetsByDefinitionMatchVicinityScan) {
  for (const auto& x : universe(3)) {
    std::vector<mask_t> by_def;
    for (mask_t o = 0; o <= x.full(); ++o)
      if (is_open(x, Subset(3, o))) by_def.push_back(o);
    EXPECT_EQ(open_masks(x), by_def);
  }
}

TEST(Convergence, SupAndInfFormALattice) {
  const auto& u = universe(2);
  for (const auto& p : u)
    for (const auto& q : u) {
      const auto s = sup(p, q), i = inf(p, q);
      EXPECT_TRUE(finer(s, p) && finer(s, q));
      EXPECT_TRUE(finer(p, i) && finer(q, i));
      EXPECT_EQ(sup(p, i), p);
      EXPECT_EQ(inf(p, s), p);
      for (const auto& r : u) {
        if (finer(r, p) && finer(r, q)) {
          EXPECT_TRUE(finer(r, s));
        }
        EXPECT_EQ(sup(sup(p, q), r), sup(p, sup(q, r)));
      }
    }
  EXPECT_THROW(sup(std::span<const Convergence>()), invalid_input);
}

TEST(Convergence, ProductProjectionsAreContinuous) {
  const auto& u = universe(2);
  const CarrierMap p1(2, {0, 0, 1, 1}), p2(2, {0, 1, 0, 1});
  for (const auto& x : u)
    for (const auto& y : u) {
      const auto prod = product(x, y);
      EXPECT_TRUE(continuous(p1, prod, x));
      EXPECT_TRUE(continuous(p2, prod, y));
    }
  EXPECT_THROW(product(spaces::discrete(5), spaces::discrete(4)), size_cap_exceeded);
}

TEST(Convergence, HausdorffOnlyForDiscreteAmongTopologies) {
  for (const auto& t : universe(3, SpaceClass::topology))
    EXPECT_EQ(is_hausdorff(t), t == Convergence::discrete(t.carrier_ptr()));
}

}  // namespace
