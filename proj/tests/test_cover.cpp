#include "doctest.h"
#include "oracles.hpp"

#include "flatknot/bracket.hpp"
#include "flatknot/cover.hpp"
#include "flatknot/errors.hpp"
#include "flatknot/json_io.hpp"

using namespace flatknot;

namespace {
AnnularCurve curve(const std::string& rel) { return annular_from_json(parse_json_text(oracle::read_fixture(rel))); }
}  // namespace

TEST_CASE("whitehead curve under phi_2") {
  const GaussCode g = phi_d_gauss(curve("annular/whitehead.json"), 2);
  CHECK(g.classical_count() == 2);
  CHECK(g.flat_count() == 2);
  const BracketValue j = jones(g);
  CHECK(j.terms.size() == 2);
  CHECK(j.coefficient("()") == LaurentPoly::parse("a^-8"));
  CHECK(j.coefficient("F1.1+ F1.1+ ; F1.2+ F1.2+") == LaurentPoly::parse("a^-6 - a^-2"));
}

TEST_CASE("phi_d is planar and round trips") {
  for (int s = 0; s < 5; ++s) {
    const AnnularCurve c = curve("annular/seed" + std::to_string(s) + ".json");
    const PlanarCode p = phi_d(c, 2);
    CHECK_NOTHROW(validate_planar(p));
    CHECK(planar_to_gauss(p).to_string() == phi_d_gauss(c, 2).to_string());
  }
}

TEST_CASE("non-generic angle coincidences are rejected") {
  CHECK_THROWS_AS(phi_d_gauss(curve("annular/whitehead.json"), 4), PreconditionError);
}

TEST_CASE("a crossing table that disagrees with the geometry is rejected") {
  AnnularCurve c = curve("annular/whitehead.json");
  REQUIRE_FALSE(c.crossings.empty());
  c.crossings.pop_back();
  CHECK_THROWS_AS(validate_curve(c), ValidationError);
}

TEST_CASE("perturbation keeps the curve valid and refinement keeps phi") {
  const AnnularCurve c = curve("annular/seed1.json");
  for (std::uint64_t k = 0; k < 5; ++k) CHECK_NOTHROW(validate_curve(perturb(c, 2, k, Rational(1, 10))));
  const AnnularCurve r = refine(c);
  CHECK(r.segment_count() > c.segment_count());
  CHECK(phi_d_gauss(r, 2).to_string() == phi_d_gauss(c, 2).to_string());
}

TEST_CASE("covering projection adds a fresh flat type") {
  const CoverResult r = covering_project(curve("annular/whitehead.json"), 2, MoveSystem::classical());
  CHECK(r.new_type == 1);
  CHECK(r.ms.k == 1);
  CHECK(r.gauss.classical_count() == 2);
  CHECK_NOTHROW(validate_planar(r.planar));
}
