#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/move_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flatknot {

enum class MoveKind : std::uint8_t { R1Delete, R1Insert, R2Delete, R2Insert, R3 };

/// A located Reidemeister move on a GaussCode.
///
/// Deletions and R3 name the passages they touch:
///   R1Delete  2*count consecutive positions, curl by curl;
///   R2Delete  [x, y] on the first strand piece, then the partners in their order;
///   R3        three adjacent pairs, each in traversal order.
/// Insertions name gaps: position {c, i} means "before passage i of component c"
/// (i = 0 on an empty component). R2Insert takes two gaps; when both are equal the
/// second piece follows the first.
struct MoveSite {
  MoveKind kind = MoveKind::R1Delete;
  int type = 0;
  int count = 1;                     // R1: number of consecutive curls
  std::vector<Position> positions;
  bool reverse = false;              // R2Insert: second piece meets the chords in reverse order
  bool first_over = true;            // classical insertions: first inserted passage is over
  int cross = 1;                     // insertions: cross bit of the first inserted passage

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& name);

/// Deletion and R3 sites legal under ms.
std::vector<MoveSite> enumerate_moves(const GaussCode& g, const MoveSystem& ms);

/// Insertion sites, at most `limit` of them, in a fixed order: R1 curls at every gap,
/// then R2 pairs over ordered gap pairs.
std::vector<MoveSite> enumerate_insertions(const GaussCode& g, const MoveSystem& ms, std::size_t limit);

/// Throws PreconditionError when the site does not match g (stale site).
GaussCode apply_move(const GaussCode& g, const MoveSite& site);

/// Re-checks a site against g and ms without applying it.
bool site_is_legal(const GaussCode& g, const MoveSite& site, const MoveSystem& ms);

struct ScrambleOptions {
  bool forbid_classical_r1 = false;
  /// Forbid first moves on flat types as well (the state space of the bracket
  /// never reduces flat curls when the system has d_i = 0, so callers testing
  /// such systems need this).
  bool forbid_flat_r1 = false;
  int max_crossings = 0;  // 0: initial count + 6
};

struct ScrambleResult {
  GaussCode code;
  std::vector<MoveSite> log;
};

/// Random walk of legal moves; deterministic for a given seed.
ScrambleResult scramble(const GaussCode& g, const MoveSystem& ms, std::uint64_t seed, int steps,
                        const ScrambleOptions& options = {});

/// Replays a move log, validating each step.
GaussCode replay(const GaussCode& g, const std::vector<MoveSite>& log, const MoveSystem& ms);

}  // namespace flatknot
