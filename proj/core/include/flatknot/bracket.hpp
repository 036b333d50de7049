#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/laurent.hpp"
#include "flatknot/move_system.hpp"

#include <map>
#include <string>

namespace flatknot {

/// L: at a positive crossing the A-smoothing is the orientation-respecting
/// reconnection (and the other one at a negative crossing). R swaps the two.
enum class SmoothingConvention : std::uint8_t { L, R };

struct BracketOptions {
  MoveSystem ms = MoveSystem::flat_virtual();
  int budget = 5000;  // canonical-key search budget per state
  int cap = 20;       // maximal number of classical crossings
  SmoothingConvention convention = SmoothingConvention::L;
};

struct BracketTerm {
  LaurentPoly coeff;
  bool saturated = true;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Linear combination of flat states; keys come from canonical_flat_key and
/// "()" is the single circle.
struct BracketValue {
  std::map<std::string, BracketTerm> terms;
  long long states = 0;

  bool saturated() const;
  LaurentPoly coefficient(const std::string& key) const;
  bool same_terms(const BracketValue& other) const;  // compares keys and coefficients only
  BracketValue scaled(const LaurentPoly& factor) const;
};

BracketValue bracket(const GaussCode& g, const BracketOptions& options = {});

/// (-a)^(-3w) times the bracket.
BracketValue jones(const GaussCode& g, const BracketOptions& options = {});

/// a := -1 in every coefficient; vanishing terms are dropped.
BracketValue specialize_flat(const BracketValue& b);

/// The state of g (flat chords only, free circles kept) for one smoothing
/// choice; bit i of `a_mask` selects the A-smoothing at classical crossing i+1.
GaussCode smoothing_state(const GaussCode& g, unsigned long long a_mask, SmoothingConvention convention);

}  // namespace flatknot
