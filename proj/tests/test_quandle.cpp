#include "doctest.h"
#include "oracles.hpp"

#include "flatknot/errors.hpp"
#include "flatknot/json_io.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/quandle.hpp"

using namespace flatknot;

namespace {
GaussCode fixture(const std::string& rel) { return parse_gauss(oracle::read_fixture(rel)); }
FiniteKFlatBiquandle table(const std::string& rel) {
  return biquandle_from_json(parse_json_text(oracle::read_fixture(rel)));
}
}  // namespace

TEST_CASE("alexander biquandles satisfy the axioms") {
  CHECK(check_axioms(alexander_biquandle(5, 2, {3, 4})).ok);
  CHECK(check_axioms(alexander_biquandle(7, 3, {2})).ok);
  CHECK(check_axioms(dihedral_biquandle(3)).ok);
  CHECK(check_axioms(table("biquandles/alex5_k2.json")).ok);
}

TEST_CASE("a mutated table is reported") {
  FiniteKFlatBiquandle b = alexander_biquandle(5, 2, {3});
  b.star[0][1][2] = (b.star[0][1][2] + 1) % 5;
  const AxiomReport r = check_axioms(b);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("propagating counter agrees with brute force") {
  const std::vector<FiniteKFlatBiquandle> tables = {alexander_biquandle(3, 2, {2}), dihedral_biquandle(3, 1),
                                                    alexander_biquandle(5, 2, {3, 4})};
  for (int s : {0, 1, 3, 9}) {
    const GaussCode g = fixture("seeds/seed0" + std::to_string(s) + ".gauss");
    for (const auto& b : tables) {
      if (b.k < g.max_type()) continue;
      if (g.passage_count() > 10 && b.n > 3) continue;
      CAPTURE(s);
      CHECK(count_colorings(g, b) == count_colorings_brute(g, b));
    }
  }
}

TEST_CASE("dihedral colourings of classical knots match Fox colourings") {
  for (const char* k : {"3_1", "4_1", "5_1", "5_2", "6_1"}) {
    CAPTURE(k);
    const GaussCode g = fixture(std::string("classical/") + k + ".gauss");
    CHECK(count_colorings(g, dihedral_biquandle(3)) == static_cast<unsigned long long>(oracle::fox_colorings(g, 3)));
    CHECK(count_colorings(g, dihedral_biquandle(5)) == static_cast<unsigned long long>(oracle::fox_colorings(g, 5)));
  }
}

TEST_CASE("colouring counts are move invariant") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  const FiniteKFlatBiquandle b = table("biquandles/alex7_k1.json");
  const GaussCode g = fixture("seeds/seed04.gauss");
  const auto base = count_colorings(g, b);
  for (std::uint64_t k = 0; k < 10; ++k) CHECK(count_colorings(scramble(g, fv, k, 30).code, b) == base);
}

TEST_CASE("curls and free circles") {
  const FiniteKFlatBiquandle b = alexander_biquandle(5, 2, {3});
  CHECK(count_colorings(parse_gauss("O1+ U1+"), b) == 5);
  CHECK(count_colorings(parse_gauss("F1.1+ F1.1+"), b) == 5);
}

TEST_CASE("malformed tables are rejected") {
  FiniteKFlatBiquandle b = dihedral_biquandle(3);
  b.over0[0][0] = 7;
  CHECK_THROWS_AS(validate_tables(b), ValidationError);
}
