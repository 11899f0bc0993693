#include <doctest.h>

#include "fsig/laws.hpp"

using namespace fsig;

TEST_CASE("law suite bookkeeping") {
  LawSuite suite("demo");
  suite.at("instance 0");
  suite.check("a", true);
  suite.check("b", false);
  suite.at("instance 1");
  suite.check("b", false);
  suite.error("c", "boom");
  CHECK(suite.checked() == 4);
  CHECK(suite.failures() == 3);
  CHECK_FALSE(suite.passed());
  const auto laws = suite.laws();
  REQUIRE(laws.size() == 3);
  CHECK(laws[0].name == "a");
  CHECK(laws[1].failed == 2);
  CHECK(laws[1].first_failure == "instance 0");
  CHECK(laws[2].first_failure == "instance 1: boom");
}

TEST_CASE("every suite passes on a fixed seed") {
  for (const auto& suite : run_all_laws(99, 60)) {
    INFO(suite.name());
    for (const auto& law : suite.laws()) {
      INFO(law.name, " ", law.first_failure);
      CHECK(law.passed());
    }
    CHECK(suite.checked() > 0);
  }
}
