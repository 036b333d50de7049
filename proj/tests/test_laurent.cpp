#include "doctest.h"
#include "oracles.hpp"

#include "flatknot/errors.hpp"
#include "flatknot/laurent.hpp"

using namespace flatknot;

TEST_CASE("laurent parse and print round trip") {
  for (const char* text : {"1", "0", "t^2 - t + 1", "-a^-3", "s2 - s1 - t*s2 + t*s1", "u^-1*v^2 + 3"}) {
    const LaurentPoly p = LaurentPoly::parse(text);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK(LaurentPoly::parse("t - t").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse("(t+1)"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("t^"), ParseError);
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly t = LaurentPoly::variable("t");
  const LaurentPoly p = LaurentPoly(1) - t;
  CHECK(p * p == LaurentPoly::parse("1 - 2*t + t^2"));
  CHECK(t.pow(-2) * t.pow(2) == LaurentPoly(1));
  CHECK(exact_divide(p * LaurentPoly::parse("t^2 + s1"), p) == LaurentPoly::parse("t^2 + s1"));
  CHECK_THROWS(exact_divide(LaurentPoly::parse("t + 2"), LaurentPoly::parse("t - 1")));
  CHECK(LaurentPoly::parse("a^2 + a^-2").substitute(variable_index("a"), -1) == LaurentPoly(2));
}

TEST_CASE("similarity normalization ignores signed unit monomials") {
  const auto units = unit_variables({"t"});
  const LaurentPoly p = LaurentPoly::parse("t^2 - t + 1");
  CHECK(lp_similar_eq(p, -p * LaurentPoly::variable("t", -5), units));
  CHECK_FALSE(lp_similar_eq(p, LaurentPoly::parse("t^2 + t + 1"), units));
  CHECK(lp_similar_normalize(p * LaurentPoly::variable("t", 3), units) == lp_similar_normalize(p, units));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      const PolyMatrix m = oracle::random_matrix(rng, n);
      CHECK(lp_det(m) == oracle::cofactor_det(m));
    }
  CHECK(lp_det(PolyMatrix{}) == LaurentPoly(1));
}

TEST_CASE("determinant of a singular matrix is zero") {
  const LaurentPoly t = LaurentPoly::variable("t");
  const PolyMatrix m = {{t, LaurentPoly(1)}, {t * t, t}};
  CHECK(lp_det(m).is_zero());
}
