#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace spinorlab;

TEST_CASE("counter streams are deterministic and independent") {
  CounterRng a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    CHECK(x != d.next());
  }
  CounterRng e(42, 3);
  CHECK(e.word(5) == CounterRng(42, 3).word(5));
  for (int i = 0; i < 1000; ++i) {
    const double u = e.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("SplitMix64 finalizer reference values") {
  // splitmix64 sequence from state 0: first output is mix64(0x9E3779B97F4A7C15)
  CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("each suite passes at a small trial count") {
  const verify::Config cfg{200, 42, kDefaultTol};
  for (const auto& name : verify::suite_names()) {
    const verify::SuiteReport r = verify::run_suite(name, cfg);
    CHECK(r.name == name);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      INFO(name << "/" << c.name << " value " << c.value << " threshold " << c.threshold);
      CHECK(c.passed());
    }
  }
}

TEST_CASE("all is the union of the individual suites") {
  const verify::Config cfg{100, 7, kDefaultTol};
  const auto all = verify::run("all", cfg);
  REQUIRE(all.size() == verify::suite_names().size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto alone = verify::run(verify::suite_names()[i], cfg);
    CHECK(verify::to_json(alone.front()).dump() == verify::to_json(all[i]).dump());
  }
}

TEST_CASE("reports are reproducible") {
  const verify::Config cfg{100, 42, kDefaultTol};
  const std::string one = verify::report_json("all", cfg, verify::run("all", cfg)).dump(2);
  const std::string two = verify::report_json("all", cfg, verify::run("all", cfg)).dump(2);
  CHECK(one == two);
  const verify::Config other{100, 43, kDefaultTol};
  CHECK(verify::report_json("all", other, verify::run("all", other)).dump(2) != one);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(verify::run("nope", {}), Error);
}

TEST_CASE("a NaN value fails its check") {
  verify::Check c{"x", 1, std::nan(""), 1.0, verify::Bound::AtMost};
  CHECK_FALSE(c.passed());
  c.value = 2.0;
  c.bound = verify::Bound::AtLeast;
  CHECK(c.passed());
}
