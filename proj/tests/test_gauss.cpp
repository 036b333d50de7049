#include "doctest.h"
#include "oracles.hpp"

#include "flatknot/errors.hpp"
#include "flatknot/gauss_code.hpp"
#include "flatknot/planar_code.hpp"

using namespace flatknot;

TEST_CASE("gauss text round trip") {
  for (const char* text : {"O1+ U2+ O3+ U1+ O2+ U3+", "F1.1+ U2+ O3+ F1.4+ F1.4+ U3+ O2+ F1.1+",
                           "O1- U2- ; U1- O2-"}) {
    const GaussCode g = parse_gauss(text);
    CHECK(parse_gauss(g.to_string()) == g);
  }
}

TEST_CASE("gauss code counts and writhe") {
  const GaussCode g = parse_gauss(oracle::read_fixture("classical/3_1.gauss"));
  CHECK(g.crossing_count() == 3);
  CHECK(g.classical_count() == 3);
  CHECK(g.flat_count() == 0);
  CHECK(writhe(g) == 3);
  CHECK(writhe(parse_gauss(oracle::read_fixture("classical/3_1m.gauss"))) == -3);
}

TEST_CASE("malformed gauss codes are rejected") {
  CHECK_THROWS_AS(parse_gauss("O1+"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("O1+ O1+"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("O1+ U1-"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("X1+ U1+"), ParseError);
}

TEST_CASE("gauss to planar and back") {
  std::vector<std::string> files;
  for (const char* k : {"3_1", "4_1", "6_2", "hopf", "unknot_curl"}) files.push_back(std::string("classical/") + k + ".gauss");
  for (int s = 0; s < 10; ++s) files.push_back("seeds/seed0" + std::to_string(s) + ".gauss");
  files.push_back("eight2flat.gauss");
  for (const auto& f : files) {
    CAPTURE(f);
    const GaussCode g = parse_gauss(oracle::read_fixture(f));
    const PlanarCode p = gauss_to_planar(g);
    CHECK_NOTHROW(validate_planar(p));
    CHECK(planar_to_gauss(p).to_string() == g.to_string());
  }
}

TEST_CASE("classical braid closures embed without virtual crossings") {
  const PlanarCode p = gauss_to_planar(parse_gauss(oracle::read_fixture("classical/5_2.gauss")));
  for (const auto& v : p.vertices) CHECK(v.kind != VertexKind::Virtual);
}

TEST_CASE("corrupted rotation systems fail validation") {
  PlanarCode p = gauss_to_planar(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"));
  std::swap(p.vertices[0].ccw[0], p.vertices[0].ccw[1]);
  CHECK_THROWS_AS(validate_planar(p), ValidationError);
}
