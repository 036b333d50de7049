#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/laurent.hpp"
#include "flatknot/planar_code.hpp"

#include <vector>

namespace flatknot {

/// One step along a component for the long-arc construction: a classical
/// passage, or a label factor picked up at a non-classical crossing.
struct ArcEvent {
  enum class What : std::uint8_t { Over, Under, Factor } what = What::Factor;
  int crossing = 0;     // classical crossing index, 0-based
  Monomial factor;      // What::Factor only
};

struct ArcPresentation {
  PolyMatrix matrix;                 // row i: crossing i; column j: long arc leaving crossing j
  std::vector<int> auto_kinked;      // components that received a positive curl
};

/// Rows a_ii = -1, a_{i,i'} += l' t^w(i), a_{i,i''} += l'' (1 - t^w(i)), where
/// i' is the long arc arriving as underpass, i'' the overpass arc, l', l'' their
/// accumulated labels. A component without an underpass gets a positive curl
/// when auto_kink is set and raises PreconditionError otherwise.
ArcPresentation arc_presentation(const std::vector<std::vector<ArcEvent>>& components,
                                 const std::vector<int>& writhe_sign, bool auto_kink);

/// Flat crossings contribute u^cross, virtual crossings v^cross, where cross is
/// the orientation bit of the passage being traversed.
ArcPresentation build_alexander_matrix(const PlanarCode& p, bool auto_kink);

struct AlexanderResult {
  LaurentPoly delta;                 // normalized up to +- t^a u^b v^c
  std::vector<int> auto_kinked;
};

AlexanderResult alexander_delta(const PlanarCode& p, bool auto_kink = true);
AlexanderResult alexander_delta(const GaussCode& g, bool auto_kink = true);

struct NonclassicalityCertificate {
  bool nonclassical = false;  // false means inconclusive
  LaurentPoly delta;
};

NonclassicalityCertificate nonclassicality_check(const PlanarCode& p, bool auto_kink = true);

}  // namespace flatknot
