#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/move_system.hpp"

#include <utility>
#include <vector>

namespace flatknot {

/// Every classical crossing becomes a flat crossing of type 1 with the same
/// local orientation; over/under is erased.
GaussCode forget_classical(const GaussCode& g);

/// Flat crossings turn virtual, which in a Gauss code means they disappear.
GaussCode flatten_to_virtual(const GaussCode& g);

/// Changes the type of every i-crossing to sigma[i]. sigma must be strictly
/// increasing and cover every type present. sigma[0] > 0 turns classical
/// crossings flat.
GaussCode retype_inclusion(const GaussCode& g, const std::vector<int>& sigma);

/// Merges types l and l+1. For l >= 1 the types above l shift down by one and
/// the returned system has k-1 types. For l = 0 the classical crossings are
/// forgotten into type 1 and the returned system keeps the code's labelling
/// (index 1 carries the merged parameters).
std::pair<GaussCode, MoveSystem> merge_types(const GaussCode& g, int l, const MoveSystem& ms);

/// Removes every crossing whose type satisfies `drop`, keeping the rest.
template <class Pred>
GaussCode drop_crossings(const GaussCode& g, Pred drop) {
  std::vector<Component> comps;
  for (const auto& comp : g.components()) {
    Component c;
    for (const auto& p : comp)
      if (!drop(p)) c.push_back(p);
    comps.push_back(std::move(c));
  }
  return GaussCode(std::move(comps));
}

}  // namespace flatknot
