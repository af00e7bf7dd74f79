#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "qva/suites.hpp"

using namespace qva;

TEST(Suites, EverySuitePassesWithDefaults) {
  for (const auto &name : suite_names()) {
    const auto results = run_suite(name, SuiteConfig{});
    EXPECT_FALSE(results.empty()) << name;
    for (const auto &r : results) {
      EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
      EXPECT_TRUE(r.witness.empty()) << r.name;
      EXPECT_EQ(r.name.rfind(name + ".", 0), 0u) << r.name;
    }
  }
}

TEST(Suites, AllConcatenatesTheSuites) {
  SuiteConfig cfg;
  cfg.degree = 5;
  cfg.pmax = 2;
  std::size_t total = 0;
  for (const auto &name : suite_names())
    total += run_suite(name, cfg).size();
  EXPECT_EQ(run_suite("all", cfg).size(), total);
}

TEST(Suites, TZeroSkipsTheDerivativeRelations) {
  SuiteConfig cfg;
  cfg.t = 0;
  cfg.pmax = 2;
  std::set<std::string> names;
  for (const auto &r : run_suite("relations", cfg)) {
    names.insert(r.name);
    EXPECT_TRUE(r.passed) << r.name;
  }
  EXPECT_EQ(names, (std::set<std::string>{"relations.exchange"}));
}

TEST(Suites, HOrderOverride) {
  SuiteConfig cfg;
  cfg.h_order = 7;
  for (const auto &r : run_suite("g", cfg))
    EXPECT_EQ(r.params.front(), (std::pair<std::string, std::string>{"h_order", "7"}));
}

TEST(Suites, TooSmallOrderReportsFailure) {
  SuiteConfig cfg;
  cfg.h_order = 1;
  bool found = false;
  for (const auto &r : run_suite("g", cfg))
    if (r.name == "g.first_coefficient") {
      found = true;
      EXPECT_FALSE(r.passed);
      EXPECT_FALSE(r.witness.empty());
    }
  EXPECT_TRUE(found);
}

TEST(Suites, SeedsAreReproducible) {
  SuiteConfig cfg;
  cfg.seed = 12345;
  const auto a = run_suite("basis", cfg);
  const auto b = run_suite("basis", cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].params, b[i].params);
  }
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nope", SuiteConfig{}), std::invalid_argument); }
