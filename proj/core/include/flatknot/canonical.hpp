#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/move_system.hpp"

#include <string>

namespace flatknot {

struct CanonicalKey {
  std::string key;        // "()" when nothing but free circles remains
  int free_circles = 0;   // chord-free components of the chosen minimal state
  bool saturated = true;  // the search exhausted everything reachable
  int visited = 0;
};

/// Least spelling of the chord-carrying components over component order,
/// cyclic rotation, per-component orientation reversal and mirror image.
/// Returns "()" when every component is chord-free.
std::string symmetric_spelling(const GaussCode& state);

/// Normal-form candidate for a flat-only state: breadth-first search over the
/// deletions and third moves legal in ms, keeping at most `budget` states, then
/// the least symmetric spelling among the states with fewest crossings.
CanonicalKey canonical_flat_key(const GaussCode& state, const MoveSystem& ms, int budget);

}  // namespace flatknot
