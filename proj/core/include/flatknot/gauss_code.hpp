#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flatknot {

enum class Role : std::uint8_t { Over, Under, Flat };

/// One pass of a component through a crossing.
///
/// `cross` is the local orientation bit of the passage: +1 when the other
/// strand crosses the traversed strand from its right to its left, i.e. the
/// frame (this direction, other direction) is positively oriented. The two
/// passages of any crossing carry opposite bits.
struct Passage {
  int id = 0;
  Role role = Role::Flat;
  int type = 0;  // 0 = classical, >= 1 = flat type
  int cross = 1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct CrossingInfo {
  int type = 0;
  /// Classical: writhe sign (= cross bit of the over passage).
  /// Flat: cross bit of the first passage in reading order.
  int sign = 1;
};

struct Position {
  int comp = 0;
  int index = 0;
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

using Component = std::vector<Passage>;

/// Abstract diagram: a list of cyclic words of passages. Virtual crossings are
/// not represented. Construction validates the pairing invariants and renumbers
/// crossing ids 1..n in order of first appearance, so equal diagrams (as written)
/// compare equal.
class GaussCode {
 public:
  GaussCode() : comps_(1) {}  // the unknot
  explicit GaussCode(std::vector<Component> components);

  const std::vector<Component>& components() const { return comps_; }
  int num_components() const { return static_cast<int>(comps_.size()); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int classical_count() const;
  int flat_count() const;
  int max_type() const;
  int passage_count() const;

  /// Crossing table; crossing(id) for id in 1..crossing_count().
  const CrossingInfo& crossing(int id) const { return crossings_.at(id - 1); }
  /// Both passages of a crossing, in reading order.
  const std::pair<Position, Position>& locate(int id) const { return where_.at(id - 1); }
  const Passage& at(Position p) const { return comps_[p.comp][p.index]; }

  std::string to_string() const;

  friend bool operator==(const GaussCode& a, const GaussCode& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<Component> comps_;
  std::vector<CrossingInfo> crossings_;
  std::vector<std::pair<Position, Position>> where_;
};

/// Grammar: components separated by ';', whitespace-separated tokens
/// `O<id><sign>`, `U<id><sign>`, `F<type>.<id><sign>`; `()` or nothing marks an
/// empty component.
GaussCode parse_gauss(std::string_view text);

int writhe(const GaussCode& g);

/// Passage with the sign bit of its crossing, as written in the text grammar.
std::string passage_token(const GaussCode& g, const Passage& p);

}  // namespace flatknot
