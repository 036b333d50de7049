#include "doctest.h"
#include "oracles.hpp"

#include "flatknot/errors.hpp"
#include "flatknot/move_system.hpp"
#include "flatknot/moves.hpp"

using namespace flatknot;

TEST_CASE("move system presets and parsing") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  CHECK(fv.k == 2);
  CHECK(fv.max_code_type() == 1);
  CHECK(fv.r1_multiplicity(1) == 0);
  CHECK(MoveSystem::parse(fv.to_string()) == fv);
  CHECK(MoveSystem::parse("rfv") == MoveSystem::restricted_flat_virtual());
  CHECK_FALSE(MoveSystem::restricted_flat_virtual().r3_same_allowed(1));
  CHECK_THROWS(MoveSystem::parse("bogus"));
}

TEST_CASE("enumerated moves are legal and keep codes valid") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  for (int s = 0; s < 10; ++s) {
    const GaussCode g = parse_gauss(oracle::read_fixture("seeds/seed0" + std::to_string(s) + ".gauss"));
    for (const MoveSite& m : enumerate_moves(g, fv)) {
      CHECK(site_is_legal(g, m, fv));
      const GaussCode h = apply_move(g, m);
      CHECK(parse_gauss(h.to_string()) == h);
    }
  }
}

TEST_CASE("R2 insertion is undone by a deletion") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  const GaussCode g = parse_gauss(oracle::read_fixture("seeds/seed01.gauss"));
  int checked = 0;
  for (const MoveSite& ins : enumerate_insertions(g, fv, 50)) {
    if (ins.kind != MoveKind::R2Insert) continue;
    const GaussCode h = apply_move(g, ins);
    CHECK(h.crossing_count() == g.crossing_count() + 2);
    bool back = false;
    for (const MoveSite& del : enumerate_moves(h, fv))
      if (del.kind == MoveKind::R2Delete && apply_move(h, del).to_string() == g.to_string()) back = true;
    CHECK(back);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("flat curls cannot be removed in fv") {
  const GaussCode g = parse_gauss("F1.1+ F1.1+");
  for (const MoveSite& m : enumerate_moves(g, MoveSystem::flat_virtual())) CHECK(m.kind != MoveKind::R1Delete);
  bool found = false;
  for (const MoveSite& m : enumerate_moves(parse_gauss("O1+ U1+"), MoveSystem::flat_virtual()))
    found |= m.kind == MoveKind::R1Delete;
  CHECK(found);
}

TEST_CASE("scramble is deterministic and its log replays") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  const GaussCode g = parse_gauss(oracle::read_fixture("seeds/seed03.gauss"));
  const ScrambleResult a = scramble(g, fv, 42, 30);
  const ScrambleResult b = scramble(g, fv, 42, 30);
  CHECK(a.code == b.code);
  CHECK(a.log == b.log);
  CHECK(replay(g, a.log, fv) == a.code);
}

TEST_CASE("scramble honours its options") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  const GaussCode g = parse_gauss(oracle::read_fixture("seeds/seed02.gauss"));
  ScrambleOptions o;
  o.forbid_classical_r1 = true;
  o.max_crossings = g.crossing_count() + 2;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ScrambleResult r = scramble(g, fv, seed, 25, o);
    CHECK(r.code.crossing_count() <= o.max_crossings);
    for (const MoveSite& m : r.log)
      CHECK_FALSE((m.type == 0 && (m.kind == MoveKind::R1Insert || m.kind == MoveKind::R1Delete)));
  }
}

TEST_CASE("replay rejects an illegal step") {
  const MoveSystem fv = MoveSystem::flat_virtual();
  const GaussCode g = parse_gauss("F1.1+ F1.1+");
  MoveSite bogus;
  bogus.kind = MoveKind::R1Delete;
  bogus.type = 1;
  bogus.positions = {Position{0, 0}};
  CHECK_THROWS(replay(g, {bogus}, fv));
}
