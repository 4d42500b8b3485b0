#include <gtest/gtest.h>

#include "finconv/family.hpp"

namespace {

using namespace finconv;

// Every family of subsets of an n-point carrier, ∅ included as a possible member.
std::vector<SetFamily> every_family(unsigned n) {
  const unsigned subsets = 1u << n;
  std::vector<SetFamily> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
    std::vector<mask_t> m;
    for (mask_t s = 0; s < subsets; ++s)
      if ((pick >> s) & 1u) m.push_back(s);
    out.emplace_back(n, std::move(m));
  }
  return out;
}

TEST(Carrier, RejectsBadLabels) {
  EXPECT_THROW(Carrier({}), invalid_input);
  EXPECT_THROW(Carrier({"a", "a"}), invalid_input);
  EXPECT_THROW(Carrier({"a,b"}), invalid_input);
  EXPECT_THROW(Carrier(std::vector<std::string>(17, "x")), size_cap_exceeded);
  EXPECT_EQ(Carrier::alphabetic(3).labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(Carrier::numbered(2).find("1"), 1u);
}

TEST(Subset, WidthChecks) {
  EXPECT_THROW(Subset(2, 0b100), invalid_input);
  EXPECT_THROW(Subset(2, 1).meets(Subset(3, 1)), carrier_mismatch);
  EXPECT_EQ(Subset(3, 0b101).complement().bits(), 0b010u);
  EXPECT_EQ(Subset(3, 0b101).size(), 2u);
}

TEST(SetFamily, GrillOfGrillIsIsotoneHull) {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& f : every_family(n)) EXPECT_EQ(grill(grill(f)), isotonize(f));
}

TEST(SetFamily, MeshMeansInsideTheGrill) {
  const auto fams = every_family(2);
  for (const auto& a : fams)
    for (const auto& b : fams) {
      bool inside = true;
      for (mask_t x : a.members()) inside = inside && grill(b).contains(x);
      EXPECT_EQ(mesh(a, b), inside);
      EXPECT_EQ(mesh(a, b), mesh(b, a));
    }
}

TEST(SetFamily, CoarserIsAPreorderMatchingIsotoneHulls) {
  const auto fams = every_family(2);
  for (const auto& a : fams) {
    EXPECT_TRUE(coarser(a, a));
    for (const auto& b : fams) {
      // a ≤ b iff every member of a lies in the isotone hull of b.
      bool hull = true;
      for (mask_t x : a.members()) hull = hull && isotonize(b).contains(x);
      EXPECT_EQ(coarser(a, b), hull);
    }
  }
}

TEST(SetFamily, ComplementIsAnInvolution) {
  for (const auto& f : every_family(3)) EXPECT_EQ(complement_family(complement_family(f)), f);
}

TEST(FiniteFilter, CanonicalFromMembers) {
  const auto f = FiniteFilter::principal(3, 0b011);
  EXPECT_EQ(f.members().size(), 2u);
  EXPECT_EQ(FiniteFilter::from_members(f.members()), f);
  EXPECT_THROW(FiniteFilter::from_members(SetFamily(3, {0b001, 0b010})), invalid_input);
  EXPECT_TRUE(FiniteFilter::degenerate(2).is_degenerate());
  EXPECT_TRUE(FiniteFilter::degenerate(2).grill().empty());
}

TEST(FiniteFilter, MeetAndJoinAreUnionAndIntersectionOfMembers) {
  for (mask_t a = 0; a < 8; ++a)
    for (mask_t b = 0; b < 8; ++b) {
      const auto fa = FiniteFilter::principal(3, a), fb = FiniteFilter::principal(3, b);
      const auto m = filter_meet(fa, fb), j = filter_join(fa, fb);
      for (mask_t s = 0; s < 8; ++s) {
        EXPECT_EQ(m.contains(s), fa.contains(s) && fb.contains(s));
        // The join is generated by intersections of members.
        bool gen = false;
        for (mask_t x = 0; x < 8; ++x)
          for (mask_t y = 0; y < 8; ++y) gen = gen || (fa.contains(x) && fb.contains(y) && subset_of(x & y, s));
        EXPECT_EQ(j.contains(s), gen);
      }
    }
}

TEST(FiniteFilter, UltrafiltersArePointFilters) {
  const auto f = FiniteFilter::principal(4, 0b1010);
  const auto us = ultrafilters_of(f);
  ASSERT_EQ(us.size(), 2u);
  EXPECT_EQ(us[0].base(), 0b0010u);
  EXPECT_EQ(us[1].base(), 0b1000u);
  EXPECT_THROW(ultrafilters_of(FiniteFilter::degenerate(3)), degenerate_filter);
}

TEST(FiniteFilter, SelectionOfUltrafilterMembersHasSmallUnionInTheFilter) {
  const auto f = FiniteFilter::principal(3, 0b011);
  const std::vector<UltrafilterChoice> sel = {{FiniteFilter::principal(3, 0b001), Subset(3, 0b101)},
                                              {FiniteFilter::principal(3, 0b010), Subset(3, 0b010)}};
  const auto w = check_ultrafilter_selection(f, sel);
  EXPECT_EQ(w.points, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(w.union_set.bits(), 0b111u);
  EXPECT_THROW(check_ultrafilter_selection(f, {sel[0]}), invalid_input);
}

TEST(Relation, InverseAndMaps) {
  const FiniteRelation r(2, 3, {0b011, 0b110});
  EXPECT_EQ(r.inverse().inverse(), r);
  EXPECT_EQ(r.image(0b01), 0b011u);
  EXPECT_EQ(r.preimage(0b100), 0b10u);
  EXPECT_FALSE(r.is_map());
  const CarrierMap f(2, {0, 1, 1});
  EXPECT_FALSE(f.as_relation().inverse().is_map());
  EXPECT_EQ(CarrierMap::from_relation(f.as_relation()), f);
  EXPECT_EQ(f.small_image(0b011), 0b01u);
  EXPECT_EQ(f.small_image(0b110), 0b10u);
}

TEST(Relation, ImageAndPreimageFamiliesAreAdjoint) {
  // R(A) meets B iff A meets R⁻(B), for every relation between 2-point carriers.
  for (unsigned bits = 0; bits < 16; ++bits) {
    const FiniteRelation r(2, 2, {mask_t(bits & 3), mask_t(bits >> 2)});
    for (mask_t a = 0; a < 4; ++a)
      for (mask_t b = 0; b < 4; ++b) EXPECT_EQ(meets(r.image(a), b), meets(a, r.preimage(b)));
  }
}

}  // namespace
