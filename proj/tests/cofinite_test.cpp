#include <gtest/gtest.h>

#include "finconv/cofinite.hpp"

namespace {

using namespace finconv::symbolic;

constexpr std::uint64_t horizon = 60;

std::vector<bool> read(const NatSet& s) {
  std::vector<bool> v(horizon);
  for (std::uint64_t n = 0; n < horizon; ++n) v[n] = s.contains(n);
  return v;
}

std::vector<NatSet> samples() {
  return {NatSet{},           NatSet::all(),          NatSet::of({0, 3}),   NatSet::all_but({1}),
          NatSet::residue(0, 2), NatSet::residue(1, 3), NatSet({true, false}, {false, true, true}),
          NatSet({false, false, true}, {true, false})};
}

TEST(NatSet, BooleanOperationsMatchPointwiseReadout) {
  for (const auto& a : samples())
    for (const auto& b : samples()) {
      const auto va = read(a), vb = read(b), u = read(a | b), i = read(a & b), d = read(a - b);
      for (std::uint64_t n = 0; n < horizon; ++n) {
        ASSERT_EQ(u[n], va[n] || vb[n]);
        ASSERT_EQ(i[n], va[n] && vb[n]);
        ASSERT_EQ(d[n], va[n] && !vb[n]);
      }
      EXPECT_EQ(a.complement().complement(), a);
      EXPECT_EQ((a | b).complement(), a.complement() & b.complement());
    }
}

TEST(NatSet, CanonicalFormMakesEqualSetsEqual) {
  EXPECT_EQ(NatSet({true, false}, {true, false, true, false}), NatSet::residue(0, 2));
  EXPECT_EQ(NatSet({false, true}, {true}), NatSet::all_but({0}));
  EXPECT_EQ(NatSet::residue(0, 2).period(), 2u);
  EXPECT_TRUE(NatSet::of({5}).finite());
  EXPECT_FALSE(NatSet::all_but({5}).finite());
  EXPECT_THROW(NatSet({}, {}), finconv::invalid_input);
}

TEST(NatSet, SplitGivesTwoInfiniteHalves) {
  for (const auto& s : samples()) {
    if (s.finite()) {
      EXPECT_THROW(s.split(), finconv::invalid_input);
      continue;
    }
    const auto h = s.split();
    EXPECT_TRUE(h.subset_of(s));
    EXPECT_FALSE(h.finite());
    EXPECT_FALSE((s - h).finite());
  }
}

TEST(CofiniteFilter, PrincipalAndFreeParts) {
  const auto row0 = SymbolicSet::row(0);
  const auto x = SymbolicSet::point(Exemplar::fan, 0, 0);
  const CofiniteFilter f(row0, x);
  EXPECT_FALSE(f.is_degenerate());
  EXPECT_FALSE(f.is_free());
  EXPECT_FALSE(f.is_principal());
  const auto d = decompose(f);
  EXPECT_TRUE(d.free_part.is_free());
  EXPECT_TRUE(equivalent(meet(d.free_part, d.principal_part), f));
  EXPECT_TRUE(CofiniteFilter::degenerate(Exemplar::fan).is_degenerate());
  EXPECT_TRUE(CofiniteFilter::cofinite(SymbolicSet::in_row(Exemplar::fan, 0, NatSet::of({1, 2}))).is_degenerate());
}

TEST(CofiniteFilter, MeshOfDisjointInfiniteSetsFails) {
  const auto evens = SymbolicSet::in_row(Exemplar::prime, 0, NatSet::residue(0, 2));
  const auto odds = SymbolicSet::in_row(Exemplar::prime, 0, NatSet::residue(1, 2));
  const auto all = SymbolicSet::whole(Exemplar::prime);
  EXPECT_FALSE(mesh(CofiniteFilter::cofinite(evens), CofiniteFilter::cofinite(odds)));
  EXPECT_TRUE(mesh(CofiniteFilter::cofinite(evens), CofiniteFilter::cofinite(all)));
  EXPECT_TRUE(leq(CofiniteFilter::cofinite(all), CofiniteFilter::cofinite(evens)));
  EXPECT_FALSE(leq(CofiniteFilter::cofinite(evens), CofiniteFilter::cofinite(all)));
  // The meet of two free sequential filters is again of the form (B/A)0.
  const auto m = meet(CofiniteFilter::cofinite(evens), CofiniteFilter::cofinite(odds));
  EXPECT_TRUE(equivalent(m, CofiniteFilter::cofinite(all)));
  EXPECT_TRUE(is_sequential(m));
  EXPECT_TRUE(join(CofiniteFilter::cofinite(evens), CofiniteFilter::cofinite(odds)).is_degenerate());
}

TEST(Truncation, SymbolicDecisionsMatchFiniteTruncations) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto rep = truncation_crosscheck(seed, 3000);
    EXPECT_TRUE(rep.passed()) << rep.first_disagreement;
    EXPECT_GT(rep.queries, rep.skipped);
  }
  EXPECT_THROW(truncate(SymbolicSet::spine(), 7), finconv::size_cap_exceeded);
}

TEST(Truncation, BitLayout) {
  EXPECT_EQ(truncate(SymbolicSet::infinity_point(Exemplar::fan), 3), 1u);
  EXPECT_EQ(truncate(SymbolicSet::point(Exemplar::fan, 1, 2), 3), std::uint64_t{1} << 10);
  EXPECT_EQ(__builtin_popcountll(truncation_universe(Exemplar::fan, 6)), 50);
  EXPECT_EQ(__builtin_popcountll(truncation_universe(Exemplar::prime, 6)), 8);
}

TEST(Fan, SpineIsAVicinityButNoOpenSetFitsInside) {
  const auto rep = fan_check();
  for (const auto& l : rep.lines) EXPECT_TRUE(l.holds) << l.claim;
  EXPECT_TRUE(fan_vicinity(std::nullopt).contains(SymbolicSet::spine()));
  EXPECT_FALSE(fan_is_open(SymbolicSet::spine()));
  EXPECT_TRUE(fan_is_open(SymbolicSet::whole(Exemplar::fan)));
  EXPECT_EQ(fan_catalogue().size(), 1110u);
}

TEST(Prime, CofiniteFilterOfNaturalsHasNoLimitBelowItsPseudotopologicalHull) {
  const auto rep = prime_check();
  for (const auto& l : rep.lines) EXPECT_TRUE(l.holds) << l.claim;
  const auto x0 = CofiniteFilter::cofinite(SymbolicSet::whole(Exemplar::prime));
  EXPECT_TRUE(prime_limit(x0).empty());
  const auto at3 = prime_limit(CofiniteFilter::principal(SymbolicSet::point(Exemplar::prime, 0, 3)));
  EXPECT_EQ(at3.point, 3u);
  EXPECT_TRUE(prime_limit(CofiniteFilter::principal(SymbolicSet::infinity_point(Exemplar::prime))).infinity);
}

}  // namespace
