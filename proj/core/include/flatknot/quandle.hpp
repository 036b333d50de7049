#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/laurent.hpp"

#include <string>
#include <vector>

namespace flatknot {

using OpTable = std::vector<std::vector<int>>;  // table[x][y] = x op y

/// Finite k-flat biquandle on {0..n-1}: classical operations over0, under0 and
/// one flat operation star[i-1] for each type 1..k.
struct FiniteKFlatBiquandle {
  int n = 1;
  int k = 0;
  OpTable under0;
  OpTable over0;
  std::vector<OpTable> star;

  int under(int x, int y) const { return under0[x][y]; }
  int over(int x, int y) const { return over0[x][y]; }
  int flat(int type, int x, int y) const { return star[type - 1][x][y]; }
};

/// Throws ValidationError on wrong table shapes or out-of-range entries.
void validate_tables(const FiniteKFlatBiquandle& b);

struct AxiomReport {
  bool ok = true;
  std::string failure;  // names the law and the violating elements
};

AxiomReport check_axioms(const FiniteKFlatBiquandle& b);

/// x under y = t x + (1-t) y, x over y = x, x star_i y = s_i x, all mod n.
FiniteKFlatBiquandle alexander_biquandle(int n, int t, const std::vector<int>& s);

/// Dihedral quandle of order n as a biquandle with trivial over-operation and
/// trivial flat operations.
FiniteKFlatBiquandle dihedral_biquandle(int n, int k = 0);

/// Colourings of the semiarcs. Virtual crossings are invisible and let colours
/// through. Throws ValidationError when the axioms fail or the diagram uses a
/// type above b.k.
unsigned long long count_colorings(const GaussCode& g, const FiniteKFlatBiquandle& b);

/// Brute force over all n^(#semiarcs) labelings; for cross-checking only.
unsigned long long count_colorings_brute(const GaussCode& g, const FiniteKFlatBiquandle& b);

struct MultiflatDelta {
  LaurentPoly delta;               // normalized up to +- t^a s_1^b ...
  int ideal_order = 0;             // 0: determinant; 1: first minor (determinant vanished)
  std::vector<int> auto_kinked;
};

/// Generator of the zeroth Fitting ideal of the Alexander quandle module,
/// computed on the presentation by long arcs (flat passages of type i fold into
/// labels s_i^cross). When that determinant vanishes identically the first
/// minor (last row and column removed) is reported with ideal_order = 1.
MultiflatDelta multiflat_alexander_delta(const GaussCode& g, int k, bool auto_kink = true);

/// Presentation with one generator per semiarc and two relations per crossing.
PolyMatrix semiarc_presentation(const GaussCode& g, int k);

}  // namespace flatknot
