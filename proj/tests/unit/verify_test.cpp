#include <gtest/gtest.h>

#include "bnchain/verify.hpp"

using namespace bnchain;

TEST(Verify, SmallGenusPasses) {
  VerifyOptions options;
  options.g_max = 4;
  const VerifyReport report = run_verify(options);
  EXPECT_TRUE(report.passed) << report.failure;
  EXPECT_GT(report.checks, 1000);
}

TEST(Verify, DeterministicForASeed) {
  VerifyOptions options;
  options.g_max = 3;
  options.seed = 42;
  EXPECT_EQ(run_verify(options).checks, run_verify(options).checks);
}

TEST(Verify, TamperedClosedFormIsCaughtWithLocus) {
  VerifyOptions options;
  options.g_max = 4;
  options.closed_form = [](const Tableau& t, int i) {
    auto orders = effective_vanishing_from_tableau(t, i).orders();
    if (i == 3 && t.params().r >= 1) orders[0] += 1;
    return VanishingSequence(orders);
  };
  const VerifyReport report = run_verify(options);
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.reproducer.at("i"), 3);
  EXPECT_EQ(report.reproducer.at("s"), 0);
  EXPECT_NE(report.failure.find("(i, s) = (3, 0)"), std::string::npos) << report.failure;
  EXPECT_TRUE(report.reproducer.contains("tableau"));
  EXPECT_TRUE(report.reproducer.contains("geometry"));
}

TEST(Verify, NonGenericGeometryIsSkippedWithNotice) {
  VerifyOptions options;
  options.g_max = 3;
  options.injected_geometries.push_back(ChainGeometry(std::vector<LoopLengths>(3, {Rational(1), Rational(3)})));
  const VerifyReport report = run_verify(options);
  EXPECT_TRUE(report.passed) << report.failure;
  ASSERT_FALSE(report.notices.empty());
  EXPECT_NE(report.notices.front().find("non-generic"), std::string::npos);
}

TEST(Verify, ComponentParamsCoverEveryNonEmptyLocus) {
  for (const BNParams& p : component_params(5)) {
    EXPECT_GE(p.kbar(), 0);
    EXPECT_GE(rho(p), 0);
  }
  std::size_t n = 0;
  for (int g = 1; g <= 5; ++g)
    for (int r = 0; r <= g; ++r)
      for (int d = 0; d <= 2 * g + 1; ++d)
        if (BNParams p{g, d, r}; p.kbar() >= 0 && rho(p) >= 0) ++n;
  EXPECT_EQ(component_params(5).size(), n);
}
