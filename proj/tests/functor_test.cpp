#include <gtest/gtest.h>

#include "finconv/enumerate.hpp"
#include "finconv/spaces.hpp"

namespace {

using namespace finconv;

// x ∈ lim ↑A iff every ξ-open set containing x contains A.
Convergence topological_modification(const Convergence& xi) {
  std::vector<mask_t> opens;
  for (mask_t o = 0; o <= xi.full(); ++o)
    if (is_open(xi, Subset(xi.size(), o))) opens.push_back(o);
  std::vector<mask_t> t(std::size_t{xi.full()} + 1, 0);
  for (mask_t a = 1; a <= xi.full(); ++a)
    for (unsigned x = 0; x < xi.size(); ++x) {
      bool ok = true;
      for (mask_t o : opens)
        if (has_point(o, x) && !subset_of(a, o)) ok = false;
      if (ok) t[a] |= point_mask(x);
    }
  return {xi.carrier_ptr(), std::move(t)};
}

// lim ↑A = ⋂_{a∈A} lim ↑{a}.
Convergence pointwise(const Convergence& xi) {
  std::vector<mask_t> t(std::size_t{xi.full()} + 1, 0);
  for (mask_t a = 1; a <= xi.full(); ++a) {
    mask_t l = xi.full();
    for (unsigned x = 0; x < xi.size(); ++x)
      if (has_point(a, x)) l &= xi.lim(point_mask(x));
    t[a] = l;
  }
  return {xi.carrier_ptr(), std::move(t)};
}

TEST(Reflectors, TopologizerMatchesOpenSetOracle) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& x : universe(n)) {
      ASSERT_EQ(apply(Functor::T, x), topological_modification(x)) << detail::table_string(x);
      ASSERT_EQ(topologize(x), apply(Functor::T, x));
    }
}

TEST(Reflectors, FiniteCollapseOfPretopologicalAndPseudotopological) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& x : universe(n)) {
      const auto s = pointwise(x);
      ASSERT_EQ(apply(Functor::S0, x), s);
      ASSERT_EQ(apply(Functor::S1, x), s);
      ASSERT_EQ(apply(Functor::S, x), s);
    }
}

TEST(Reflectors, OrderedFromCoarsestToFinest) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& x : universe(n)) {
      const auto t = apply(Functor::T, x), s0 = apply(Functor::S0, x), s1 = apply(Functor::S1, x),
                 s = apply(Functor::S, x);
      ASSERT_TRUE(finer(s0, t) && finer(s1, s0) && finer(s, s1) && finer(x, s));
    }
}

TEST(Coreflectors, IdentityOnFiniteCarriers) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& x : universe(n))
      for (auto e : {Functor::Seq, Functor::I1, Functor::K}) ASSERT_EQ(apply(e, x), x);
}

TEST(Functors, LawsOnEveryPairOfTwoPointConvergences) {
  std::vector<std::pair<Convergence, Convergence>> pairs;
  for (const auto& p : universe(2))
    for (const auto& q : universe(2)) pairs.emplace_back(p, q);
  ASSERT_EQ(pairs.size(), 81u);
  for (Functor h : all_functors) {
    const auto rep = check_functor_laws(h, pairs);
    EXPECT_TRUE(rep.passed()) << functor_name(h);
    for (const auto& c : rep.checks)
      if (c.law != "isotone") {
        EXPECT_GT(c.instances, 0u) << c.law;
      }
  }
}

TEST(Functors, ParseAndKinds) {
  EXPECT_EQ(parse_functor("S0"), Functor::S0);
  EXPECT_FALSE(parse_functor("X").has_value());
  EXPECT_EQ(kind(Functor::K), FunctorKind::coreflector);
  EXPECT_EQ(reflector_for(FilterClass::closed_principal), Functor::T);
  EXPECT_EQ(reflector_class(Functor::S1), FilterClass::countably_based);
  EXPECT_THROW(apply_coreflector(Functor::T, spaces::p3()), invalid_input);
}

TEST(Functors, ClassPredicates) {
  EXPECT_TRUE(is_pretopology(spaces::p3()));
  EXPECT_FALSE(is_topology(spaces::p3()));
  EXPECT_TRUE(is_topology(spaces::sierpinski()));
  EXPECT_TRUE(is_pseudotopology(spaces::p3()));
}

TEST(FilterClasses, BasesOnThreePoints) {
  EXPECT_EQ(principal_filter_bases(3).size(), 7u);
  EXPECT_EQ(countably_based_filter_bases(3).size(), 7u);
  EXPECT_EQ(all_filter_bases(3).size(), 7u);
  // ∅, {c}, {b,c}, X open in P3: the nonempty closed sets are X, {a,b}, {a}.
  EXPECT_EQ(class_filter_bases(FilterClass::closed_principal, spaces::p3()), (std::vector<mask_t>{0b001, 0b011, 0b111}));
  EXPECT_FALSE(transferable(FilterClass::closed_principal));
}

}  // namespace
