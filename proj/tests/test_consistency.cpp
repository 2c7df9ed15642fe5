#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qda/catalog.hpp"

using namespace qda;

TEST_CASE("catalog loads all eight families") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 8);
  for (const char* id : {"harmonic-canonical", "pt-canonical", "A-harmonic",
                         "B-radial-osc", "C-pt2", "D-pt1", "E-radial-coulomb",
                         "F-radial-l"})
    CHECK_NOTHROW(family(id));
  CHECK_THROWS(family("no-such-family"));
}

TEST_CASE("defining relations hold symbolically for every family") {
  for (const auto& f : catalog()) {
    CAPTURE(f.id);
    ParamSet ps = resolve_params(f, {});
    REQUIRE_NOTHROW(check_constraints(f, ps));
    auto results = check_consistency(consistency_input(f, ps));
    REQUIRE(results.size() == 5);
    for (const auto& r : results) {
      CAPTURE(r.id);
      CAPTURE(r.residual.str());
      // literal zero expression, not merely numerically small
      REQUIRE(r.pass);
      REQUIRE(r.residual.is_zero());
    }
  }
}

TEST_CASE("tau is derivable from the structure relations") {
  for (const char* id : {"harmonic-canonical", "A-harmonic", "B-radial-osc"}) {
    const auto& f = family(id);
    ParamSet ps = resolve_params(f, {});
    auto tau = derive_tau(consistency_input(f, ps));
    REQUIRE(tau.has_value());
    CHECK(std::abs(*tau - ps.get(Param::tau)) <= 1e-10 * (1 + std::abs(*tau)));
  }
}

TEST_CASE("violated parameter constraint is rejected by name") {
  // family D requires c1 + alpha*c2 = 0
  const auto& f = family("D-pt1");
  std::vector<ParamOverride> ov = {{"c1", 1.0}, {"alpha", 0.0}, {"c2", 0.0}};
  ParamSet ps = resolve_params(f, ov);
  try {
    check_constraints(f, ps);
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.predicate.find("c1") != std::string::npos);
  }
}

TEST_CASE("overrides propagate into the relation check") {
  const auto& f = family("harmonic-canonical");
  // an inconsistent tau must surface as a nonzero residual
  ParamSet ps = resolve_params(f, {{"tau", 17.0}});
  auto results = check_consistency(consistency_input(f, ps));
  bool any_fail = false;
  for (const auto& r : results) any_fail = any_fail || !r.pass;
  CHECK(any_fail);
}
