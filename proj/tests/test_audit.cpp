#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsa/audit.hpp"
#include "nsa/error.hpp"

#include <algorithm>

using namespace nsa;

TEST_CASE("audit counts spaces per size") {
  auto r = audit::run_audit(3);
  CHECK(r.spaces_by_size == std::vector<std::size_t>{1, 4, 29});
  CHECK(r.spaces.size() == 34);
}

TEST_CASE("every asserted theorem holds up to four points") {
  auto r = audit::run_audit(4);
  CHECK(r.spaces.size() == 1 + 4 + 29 + 355);
  for (const auto& t : r.theorems) {
    CAPTURE(t.name);
    CHECK(t.checked == r.spaces.size());
    if (t.asserted) CHECK(t.counterexamples.empty());
  }
  CHECK(r.passed());
}

TEST_CASE("finite_implies_t0 lists the non-T0 spaces") {
  auto r = audit::run_audit(2);
  auto it = std::find_if(r.theorems.begin(), r.theorems.end(),
                         [](const audit::TheoremResult& t) { return t.name == "finite_implies_t0"; });
  REQUIRE(it != r.theorems.end());
  CHECK_FALSE(it->asserted);
  // Only the indiscrete pair fails T0 on two points.
  REQUIRE(it->counterexamples.size() == 1);
  const auto& s = r.spaces[it->counterexamples[0]];
  CHECK(s.size() == 2);
  CHECK(s.opens().size() == 2);
}

TEST_CASE("parallel and serial audits agree") {
  auto p = audit::run_audit(4, 7), s = audit::run_audit_serial(4, 7);
  REQUIRE(p.theorems.size() == s.theorems.size());
  CHECK(p.spaces_by_size == s.spaces_by_size);
  for (std::size_t i = 0; i < p.spaces.size(); ++i) CHECK(p.spaces[i].opens() == s.spaces[i].opens());
  for (std::size_t t = 0; t < p.theorems.size(); ++t) {
    CHECK(p.theorems[t].name == s.theorems[t].name);
    CHECK(p.theorems[t].counterexamples == s.theorems[t].counterexamples);
  }
}

TEST_CASE("audit limits") {
  CHECK_THROWS_AS(audit::run_audit(5), Error);
  CHECK_THROWS_AS(audit::run_audit(0), Error);
  try {
    audit::run_audit(5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}
