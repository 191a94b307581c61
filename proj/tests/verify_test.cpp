#include <gtest/gtest.h>

#include "exjordan/verify.hpp"

using namespace exj;

namespace {
nlohmann::json strip_millis(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("millis");
  return j;
}
}  // namespace

TEST(Suites, KnownNamesOnly) {
  CheckContext ctx;
  ctx.samples = 2;
  EXPECT_THROW(run_suite("nonsense", ctx), std::invalid_argument);
  for (const auto& name : suite_names()) {
    if (name == "liealg" || name == "e6" || name == "orbits") continue;  // covered below
    SuiteReport r = run_suite(name, ctx);
    EXPECT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) EXPECT_EQ(c.suite, name);
  }
}

TEST(Suites, DeterministicReportsModuloTiming) {
  CheckContext ctx;
  ctx.seed = 1;
  ctx.samples = 3;
  auto a = strip_millis(report_to_json(run_suite("octonion", ctx)));
  auto b = strip_millis(report_to_json(run_suite("octonion", ctx)));
  EXPECT_EQ(a, b);
  ctx.seed = 2;
  auto c = strip_millis(report_to_json(run_suite("octonion", ctx)));
  EXPECT_EQ(c["all_pass"], true);
}

TEST(Suites, ConcurrentExecutionMatchesSequential) {
  // independent checks on several workers produce the same report (up to
  // timing) as the sequential run
  CheckContext seq;
  seq.seed = 5;
  seq.samples = 3;
  seq.workers = 1;
  CheckContext par = seq;
  par.workers = 4;
  for (const std::string suite : {"octonion", "rootdata"}) {
    auto a = strip_millis(report_to_json(run_suite(suite, seq)));
    auto b = strip_millis(report_to_json(run_suite(suite, par)));
    EXPECT_EQ(a, b) << suite;
  }
}

TEST(Suites, CanonicalOrdering) {
  CheckContext ctx;
  ctx.samples = 2;
  SuiteReport r = run_suite("rootdata", ctx);
  for (size_t i = 1; i < r.checks.size(); ++i)
    EXPECT_LT(r.checks[i - 1].name, r.checks[i].name);
}

TEST(Suites, FailuresCarryWitnesses) {
  // a synthetic failing checker records expected, actual and witness
  Checker c;
  c.expect(false, "lhs = rhs", "lhs != rhs", "the failing input");
  EXPECT_FALSE(c.pass());
  EXPECT_EQ(c.expected(), "lhs = rhs");
  EXPECT_EQ(c.actual(), "lhs != rhs");
  ASSERT_TRUE(c.witness().has_value());
  EXPECT_EQ(*c.witness(), "the failing input");
}

TEST(Suites, TextReportShape) {
  CheckContext ctx;
  ctx.samples = 2;
  SuiteReport r = run_suite("rootdata", ctx);
  std::string text = report_to_text(r);
  EXPECT_NE(text.find("rootdata/e6_rho"), std::string::npos);
  EXPECT_NE(text.find("0 failures"), std::string::npos);
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
