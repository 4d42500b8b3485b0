#include <gtest/gtest.h>

#include "finconv/laws.hpp"

namespace {

using namespace finconv;

TEST(Laws, EverySuitePassesOnTwoPoints) {
  const auto suites = run_laws({2, 100, 1, 2});
  EXPECT_EQ(suites.size(), 20u);
  for (const auto& s : suites) {
    EXPECT_TRUE(s.passed()) << s.name << ": " << s.first_failure;
    EXPECT_GT(s.instances, 0u) << s.name;
  }
}

TEST(Laws, SuiteResultKeepsTheFirstFailure) {
  SuiteResult r{"x"};
  r.check(true, [] { return std::string("a"); });
  r.check(false, [] { return std::string("b"); });
  r.check(false, [] { return std::string("c"); });
  EXPECT_EQ(r.instances, 3u);
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.first_failure, "b");
}

TEST(Laws, UserSuppliedSpaces) {
  const auto& u = universe(2);
  for (const auto& s : run_laws_on(u)) EXPECT_TRUE(s.passed()) << s.name << ": " << s.first_failure;
}

TEST(Tables, ImplicationsHoldAndOnlyTheLadderCollapses) {
  const auto rows = implication_table(3, 2, 2);
  ASSERT_EQ(rows.size(), report_implications().size());
  std::size_t collapsing = 0;
  for (const auto& r : rows) {
    EXPECT_EQ(r.violations, 0u) << r.arrow.premise;
    EXPECT_GT(r.instances, 0u) << r.arrow.premise;
    EXPECT_EQ(r.collapses(), collapses_on_finite_carriers(r.arrow)) << r.arrow.premise << " => " << r.arrow.conclusion;
    if (r.witness) {
      const auto rep = classify(*r.witness);
      EXPECT_TRUE(report_flag(rep, r.arrow.conclusion));
      EXPECT_FALSE(report_flag(rep, r.arrow.premise));
    }
    collapsing += r.collapses();
  }
  EXPECT_EQ(collapsing, 4u);
}

TEST(Tables, PreservationHasNoViolations) {
  const auto cells = preservation_table(3, 2, 2);
  EXPECT_EQ(cells.size(), 15u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.violations, 0u) << c.quotient_type << " / " << c.property;
    EXPECT_GT(c.instances, 0u);
  }
}

TEST(Laws, SizeCap) { EXPECT_THROW(run_laws({4}), size_cap_exceeded); }

}  // namespace
