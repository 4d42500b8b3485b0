#include <gtest/gtest.h>

#include "finconv/compact.hpp"
#include "finconv/enumerate.hpp"
#include "finconv/spaces.hpp"

namespace {

using namespace finconv;

TEST(Compact, SierpinskiZeroIsCompactAtItselfButNotClosed) {
  const auto s = spaces::sierpinski();
  const Subset zero(2, 0b01);
  for (auto cls : all_classes) EXPECT_TRUE(is_compact_at(s, zero, zero, cls)) << class_name(cls);
  EXPECT_FALSE(is_closed(s, zero));
}

TEST(Compact, SingleSetMatchesPointUltrafilters) {
  // A is compact at B iff lim ↑{x} meets B for every x ∈ A.
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& c : universe(n))
      for (mask_t a = 1; a <= c.full(); ++a)
        for (mask_t b = 1; b <= c.full(); ++b) {
          bool ok = true;
          for (unsigned x = 0; x < n; ++x)
            if (has_point(a, x) && !meets(c.lim(point_mask(x)), b)) ok = false;
          for (auto cls : {FilterClass::principal, FilterClass::countably_based, FilterClass::all})
            ASSERT_EQ(is_compact_at(c, Subset(n, a), Subset(n, b), cls), ok);
        }
}

TEST(Compact, CompactoidThroughCharacteristicConvergence) {
  for (const auto& c : universe(3)) {
    const auto chi = characteristic(c);
    for (mask_t h = 1; h <= c.full(); ++h)
      for (auto cls : all_classes)
        ASSERT_EQ(is_compactoid(c, SetFamily(3, {h}), cls), apply(reflector_for(cls), chi).lim(h) != 0);
  }
}

TEST(Compact, FiniteConvergencesHaveCompletenessNumberZero) {
  for (const auto& c : universe(3)) EXPECT_EQ(completeness_number_finite(c), 0u);
}

TEST(RelationCompact, PerfectMapsHaveCompactInverses) {
  for (const auto& f : surjections(3, 2))
    for (const auto& xi : universe(3))
      for (const auto& tau : universe(2)) {
        const MapContext ctx(f, xi, tau);
        const auto inv = f.as_relation().inverse();
        for (auto cls : all_classes)
          ASSERT_EQ(is_perfect_like(ctx, cls), is_relation_compact(inv, tau, xi, cls));
      }
}

TEST(RelationCompact, ImagesOfCompactFamiliesNeedATransferableClass) {
  const auto s = spaces::sierpinski();
  const auto id = FiniteRelation::identity(2);
  EXPECT_THROW(image_of_compact(id, s, s, SetFamily(2, {1}), Subset(2, 1), FilterClass::closed_principal),
               invalid_input);
  const auto r = image_of_compact(id, s, s, SetFamily(2, {1}), Subset(2, 1), FilterClass::all);
  EXPECT_TRUE(r.relation_compact && r.family_compact && r.image_compact);
}

}  // namespace
