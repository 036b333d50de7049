#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flatknot {

/// Selects the legal Reidemeister moves for crossing types 0..k:
/// first moves of multiplicity d[i] (0 disables them), second moves for every
/// type, third moves among three i-crossings when epsilon[i] = 1, and mixed
/// third moves for types i < j.
///
/// When `top_is_virtual` is set, type k plays the role of virtual crossings:
/// it never appears in a GaussCode and its moves are vacuous.
struct MoveSystem {
  int k = 0;
  std::vector<int> d{1};
  std::vector<int> epsilon{1};
  bool top_is_virtual = false;

  static MoveSystem classical();                // k=0
  static MoveSystem flat_virtual();             // k=2, d=(1,0,1), eps=(1,1,1): no flat first move
  static MoveSystem restricted_flat_virtual();  // k=2, d=(1,0,1), eps=(1,0,1)
  static MoveSystem k_flat(int k);              // all ones, no virtual layer

  /// "k:d0,d1,...:e0,e1,..." with an optional ":v" suffix for a virtual top type.
  static MoveSystem parse(std::string_view text);
  std::string to_string() const;
  void validate() const;

  /// Largest type that may appear in a GaussCode under this system.
  int max_code_type() const { return top_is_virtual ? k - 1 : k; }
  int r1_multiplicity(int type) const { return d.at(type); }
  bool r3_same_allowed(int type) const { return epsilon.at(type) == 1; }

  friend bool operator==(const MoveSystem&, const MoveSystem&) = default;
};

}  // namespace flatknot
