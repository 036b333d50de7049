#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/move_system.hpp"
#include "flatknot/planar_code.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace flatknot {

using Rational = boost::multiprecision::cpp_rational;

/// Point of the annulus. `alpha` is the angle as a fraction of a full turn, in
/// [0,1); `z` is the radial coordinate, in (0,1). The chart (alpha, z) fixes the
/// orientation used for crossing signs.
struct AnnularPoint {
  Rational alpha;
  Rational z;
  friend bool operator==(const AnnularPoint&, const AnnularPoint&) = default;
};

/// Row of the self-crossing table. `i` and `j` are global segment indices
/// (segments numbered along the components in order; segment v joins vertex v
/// to the next one). For a classical row `over` is i or j and `sign` is the
/// writhe sign. A flat row (type >= 1) ignores `over`; `sign` is the cross bit
/// of the passage on segment i.
struct AnnularCrossing {
  int i = 0;
  int j = 0;
  int over = 0;
  int sign = 1;
  int type = 0;
  friend bool operator==(const AnnularCrossing&, const AnnularCrossing&) = default;
};

/// Closed polylines in the annulus. Each segment takes the shorter way round
/// (|delta alpha| < 1/2).
struct AnnularCurve {
  std::vector<std::vector<AnnularPoint>> components;
  std::vector<AnnularCrossing> crossings;

  int segment_count() const;
  friend bool operator==(const AnnularCurve&, const AnnularCurve&) = default;
};

/// Transverse intersection of two distinct segments: point a(s) = b(u).
struct SegmentHit {
  int a = 0;
  int b = 0;
  Rational s;
  Rational u;
  int sign = 0;  // sign of det(direction a, direction b)
};

/// All self-intersections (a < b). Throws PreconditionError on non-generic contact.
std::vector<SegmentHit> self_intersections(const AnnularCurve& c);

/// Pairs of distinct curve points whose angles differ by k/d for some
/// 1 <= k < d, one entry per unordered pair; `a` carries the point with the
/// larger angle by k/d. Throws PreconditionError on non-generic contact.
std::vector<SegmentHit> equivalent_pairs(const AnnularCurve& c, int d);

/// Shape checks and the match between the crossing table and the geometry.
void validate_curve(const AnnularCurve& c);

/// Gauss code of phi_d(c): classical crossings from the table, one flat
/// crossing of type `flat_type` per equivalent pair. Flat rows of the table
/// keep their own types.
GaussCode phi_d_gauss(const AnnularCurve& c, int d, int flat_type = 1);

/// Planar realisation of phi_d_gauss; virtual crossings are routing only.
PlanarCode phi_d(const AnnularCurve& c, int d);

struct CoverResult {
  GaussCode gauss;
  PlanarCode planar;
  MoveSystem ms;
  int new_type = 1;
};

/// Projection along the unbranched p-fold cyclic cover of the annulus. Double
/// points of the projection get the fresh type; the move system gains that
/// type with d = 0 and epsilon = (p > 2). Branched covers are rejected.
CoverResult covering_project(const AnnularCurve& c, int p, const MoveSystem& ms,
                             const std::vector<int>& ramification = {});

/// Random vertex displacement of size at most eps that keeps the order of the
/// classical crossings along every segment and stays generic for d. The size is
/// halved after each rejected attempt; BudgetError when all attempts fail.
AnnularCurve perturb(const AnnularCurve& c, int d, std::uint64_t seed, const Rational& eps, int attempts = 16);

/// Splits every segment at its midpoint and reindexes the crossing table.
AnnularCurve refine(const AnnularCurve& c);

}  // namespace flatknot
