#include <catch_amalgamated.hpp>

#include "forge/suites.hpp"
#include "forge/verify.hpp"

using namespace forge;

TEST_CASE("linear-order checking accepts real orders") {
  SuiteReport r = check_linear_order(*canonical_order(6), 100);
  CHECK(r.passed());
  CHECK(r.checks > 0);
}

TEST_CASE("linear-order checking catches broken relations") {
  // 0 < 1 and 1 < 0 at once: trichotomy fails
  OrderPtr cyc = explicit_order({0, 1}, {{0, 1}, {1, 0}});
  CHECK_FALSE(check_linear_order(*cyc, 10).passed());
  // missing transitivity: 0 < 1 < 2 but not 0 < 2
  OrderPtr intrans = explicit_order({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(check_linear_order(*intrans, 10).passed());
}

TEST_CASE("longest descending subsequence") {
  std::vector<int> v{5, 1, 4, 3, 9, 2};
  auto chain = longest_descending_subsequence(v.size(), [&](std::size_t i, std::size_t j) {
    return v[i] < v[j];
  });
  // 5 > 4 > 3 > 2 is the longest
  REQUIRE(chain.size() == 4);
  CHECK(v[chain[0]] == 5);
  CHECK(v[chain[3]] == 2);
  CHECK(longest_descending_subsequence(0, [](std::size_t, std::size_t) { return false; }).empty());
}

TEST_CASE("bounded well-foundedness search") {
  // the naturals restricted below 30: no long descending chain among an
  // ascending stream
  std::vector<Code> ascending;
  for (Code c = 0; c < 30; ++c) ascending.push_back(c);
  CHECK(check_wf_stream(*nat_order(), ascending, 5).passed());
  // a reversed stream is one long descending chain
  std::vector<Code> descending(ascending.rbegin(), ascending.rend());
  SuiteReport r = check_wf_stream(*nat_order(), descending, 5);
  CHECK_FALSE(r.passed());
  CHECK(r.violations[0].law.find("30") != std::string::npos);
}

TEST_CASE("suite registry") {
  CHECK(suite_registry().size() == 11);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteConfig{}), UnknownSuite);
  // a cheap suite runs clean end to end
  SuiteReport r = run_suite("coding-laws", SuiteConfig{});
  CHECK(r.passed());
  CHECK(r.checks > 0);
}
