#include <gtest/gtest.h>

#include <set>

#include "finconv/enumerate.hpp"

namespace {

using namespace finconv;

// Every limit table on n points passing the axioms, by scanning all tables.
std::vector<std::vector<mask_t>> brute_force_tables(unsigned n) {
  const mask_t full = full_mask(n);
  const unsigned entries = full;  // nonempty subsets
  std::vector<std::vector<mask_t>> out;
  const std::uint64_t total = std::uint64_t{1} << (n * entries);
  std::vector<mask_t> t(std::size_t{full} + 1, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (mask_t a = 1; a <= full; ++a) t[a] = (code >> (n * (a - 1))) & full;
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) ok = has_point(t[point_mask(x)], x);
    for (mask_t a = 1; a <= full && ok; ++a)
      for (mask_t b = a; b <= full && ok; ++b)
        if (subset_of(a, b)) ok = subset_of(t[b], t[a]);
    if (ok) out.push_back(t);
  }
  return out;
}

// Reflexive transitive relations on n points.
std::size_t preorders(unsigned n) {
  std::size_t count = 0;
  for (std::uint32_t r = 0; r < (1u << (n * n)); ++r) {
    auto rel = [&](unsigned i, unsigned j) { return (r >> (i * n + j)) & 1u; };
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) ok = rel(i, i);
    for (unsigned i = 0; i < n && ok; ++i)
      for (unsigned j = 0; j < n && ok; ++j)
        for (unsigned k = 0; k < n && ok; ++k)
          if (rel(i, j) && rel(j, k)) ok = rel(i, k);
    count += ok;
  }
  return count;
}

std::set<std::vector<mask_t>> tables(const std::vector<Convergence>& cs) {
  std::set<std::vector<mask_t>> out;
  for (const auto& c : cs) out.insert(c.table());
  return out;
}

TEST(Enumeration, ConvergencesMatchTableScan) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto oracle = brute_force_tables(n);
    const auto got = enumerate({n, SpaceClass::convergence});
    EXPECT_EQ(got.size(), oracle.size());
    EXPECT_EQ(tables(got), std::set<std::vector<mask_t>>(oracle.begin(), oracle.end()));
  }
  EXPECT_EQ(universe(2).size(), 9u);
  EXPECT_EQ(universe(3).size(), 2744u);
}

TEST(Enumeration, PretopologiesAndPseudotopologiesAreThePointwiseTables) {
  for (unsigned n = 1; n <= 3; ++n) {
    std::set<std::vector<mask_t>> pointwise;
    for (const auto& t : brute_force_tables(n)) {
      bool ok = true;
      for (mask_t a = 1; a <= full_mask(n); ++a) {
        mask_t l = full_mask(n);
        for_each_point(a, [&](unsigned x) { l &= t[point_mask(x)]; });
        ok = ok && l == t[a];
      }
      if (ok) pointwise.insert(t);
    }
    EXPECT_EQ(tables(enumerate({n, SpaceClass::pretopology})), pointwise);
    EXPECT_EQ(tables(enumerate({n, SpaceClass::pseudotopology})), pointwise);
  }
  EXPECT_EQ(enumerate({3, SpaceClass::pretopology}).size(), 64u);
}

TEST(Enumeration, TopologiesCountPreorders) {
  for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(enumerate({n, SpaceClass::topology}).size(), preorders(n)) << n;
  EXPECT_EQ(enumerate({3, SpaceClass::topology}).size(), 29u);
  for (const auto& t : enumerate({3, SpaceClass::topology})) EXPECT_TRUE(is_topology(t));
}

TEST(Enumeration, DeterministicAcrossWorkerCounts) {
  for (auto cls : {SpaceClass::convergence, SpaceClass::topology}) {
    const auto one = enumerate({3, cls}, 1), four = enumerate({3, cls}, 4);
    EXPECT_TRUE(one == four);
  }
  const EnumerationSpec sample{3, SpaceClass::convergence, 42, 50};
  EXPECT_TRUE(enumerate(sample, 1) == enumerate(sample, 3));
  EXPECT_FALSE(enumerate(sample) == enumerate({3, SpaceClass::convergence, 43, 50}));
}

TEST(Enumeration, SizeCaps) {
  EXPECT_THROW(enumerate({4, SpaceClass::convergence}), size_cap_exceeded);
  EXPECT_THROW(enumerate({5, SpaceClass::topology}), size_cap_exceeded);
  EXPECT_EQ(enumerate({6, SpaceClass::topology, 1, 5}).size(), 5u);
}

TEST(Enumeration, MapsAndSurjections) {
  EXPECT_EQ(all_maps(3, 2).size(), 8u);
  EXPECT_EQ(surjections(3, 2).size(), 6u);
  EXPECT_EQ(surjections(3, 3).size(), 6u);
  for (const auto& f : surjections(3, 2)) EXPECT_TRUE(f.is_surjective());
}

TEST(Search, FirstWitnessIsIndependentOfWorkers) {
  const SearchTask task{"closed-not-adherent"};
  const auto one = search(task, 1), many = search(task, 4);
  ASSERT_TRUE(one.found());
  EXPECT_EQ(one.examined, many.examined);
  EXPECT_EQ(one.witness->map, many.witness->map);
  EXPECT_EQ(one.witness->source, many.witness->source);
  EXPECT_EQ(one.witness->target, many.witness->target);
  EXPECT_TRUE(find_predicate("closed-not-adherent").test(*one.witness));
}

TEST(Search, ArrowsThatCollapseFindNothing) {
  for (const char* p : {"countably-biquotient-not-biquotient", "countably-perfect-not-perfect", "adherent-not-closed"})
    EXPECT_FALSE(search({p, 3, 2}).found()) << p;
  EXPECT_THROW(find_predicate("no-such"), invalid_input);
}

TEST(Search, QuotientNotHereditarilyQuotientNeedsABijection) {
  EXPECT_FALSE(search({"quotient-not-hereditarily-quotient", 3, 2}).found());
  const auto r = search({"quotient-not-hereditarily-quotient", 3, 3, MapDomain::identity});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.examined, 43988u);
}

}  // namespace
