#include "flatknot/gauss_code.hpp"

#include "flatknot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace flatknot {

GaussCode::GaussCode(std::vector<Component> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw ValidationError("a diagram needs at least one component");

  std::map<int, std::vector<Position>> seen;
  std::vector<int> order;
  for (int c = 0; c < num_components(); ++c)
    for (int i = 0; i < static_cast<int>(comps_[c].size()); ++i) {
      const Passage& p = comps_[c][i];
      if (p.cross != 1 && p.cross != -1) throw ValidationError("passage cross bit must be +1 or -1");
      auto& list = seen[p.id];
      if (list.empty()) order.push_back(p.id);
      list.push_back({c, i});
    }

  std::map<int, int> renumber;
  for (int old_id : order) {
    const auto& list = seen[old_id];
    if (list.size() != 2)
      throw ValidationError("crossing " + std::to_string(old_id) + " occurs " + std::to_string(list.size()) +
                            " time(s); expected exactly 2");
    const Passage& p = at(list[0]);
    const Passage& q = at(list[1]);
    if (p.type != q.type) throw ValidationError("crossing " + std::to_string(old_id) + " has mismatched types");
    if (p.type < 0) throw ValidationError("negative crossing type");
    if (p.cross != -q.cross)
      throw ValidationError("crossing " + std::to_string(old_id) + " has inconsistent orientation bits");
    CrossingInfo info;
    info.type = p.type;
    if (p.type == 0) {
      const bool ok = (p.role == Role::Over && q.role == Role::Under) || (p.role == Role::Under && q.role == Role::Over);
      if (!ok) throw ValidationError("classical crossing " + std::to_string(old_id) + " needs one O and one U passage");
      info.sign = p.role == Role::Over ? p.cross : q.cross;
    } else {
      if (p.role != Role::Flat || q.role != Role::Flat)
        throw ValidationError("flat crossing " + std::to_string(old_id) + " has an over/under role");
      info.sign = p.cross;
    }
    renumber[old_id] = static_cast<int>(crossings_.size()) + 1;
    crossings_.push_back(info);
    where_.emplace_back(list[0], list[1]);
  }
  for (auto& comp : comps_)
    for (auto& p : comp) p.id = renumber[p.id];
}

int GaussCode::classical_count() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const auto& c) { return c.type == 0; }));
}

int GaussCode::flat_count() const { return crossing_count() - classical_count(); }

int GaussCode::max_type() const {
  int mx = 0;
  for (const auto& c : crossings_) mx = std::max(mx, c.type);
  return mx;
}

int GaussCode::passage_count() const {
  int n = 0;
  for (const auto& c : comps_) n += static_cast<int>(c.size());
  return n;
}

std::string passage_token(const GaussCode& g, const Passage& p) {
  std::string out;
  switch (p.role) {
    case Role::Over: out = "O"; break;
    case Role::Under: out = "U"; break;
    case Role::Flat: out = "F" + std::to_string(p.type) + "."; break;
  }
  out += std::to_string(p.id);
  out += g.crossing(p.id).sign > 0 ? '+' : '-';
  return out;
}

std::string GaussCode::to_string() const {
  std::string out;
  for (int c = 0; c < num_components(); ++c) {
    if (c > 0) out += " ; ";
    if (comps_[c].empty()) {
      out += "()";
      continue;
    }
    for (std::size_t i = 0; i < comps_[c].size(); ++i) {
      if (i > 0) out += ' ';
      out += passage_token(*this, comps_[c][i]);
    }
  }
  return out;
}

namespace {

struct RawToken {
  Role role;
  int type;
  int id;
  int sign;
  std::size_t offset;
};

int read_int(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  long long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1'000'000'000) throw ParseError("integer too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a positive integer", start);
  return static_cast<int>(v);
}

}  // namespace

GaussCode parse_gauss(std::string_view text) {
  std::vector<std::vector<RawToken>> comps(1);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    const char c = text[pos];
    if (c == ';') {
      comps.emplace_back();
      ++pos;
      continue;
    }
    if (c == '(') {
      if (pos + 1 >= text.size() || text[pos + 1] != ')') throw ParseError("expected '()'", pos);
      pos += 2;
      continue;
    }
    RawToken tok{};
    tok.offset = pos;
    if (c == 'O' || c == 'U') {
      tok.role = c == 'O' ? Role::Over : Role::Under;
      tok.type = 0;
      ++pos;
    } else if (c == 'F') {
      tok.role = Role::Flat;
      ++pos;
      tok.type = read_int(text, pos);
      if (tok.type < 1) throw ParseError("flat type must be >= 1", tok.offset);
      if (pos >= text.size() || text[pos] != '.') throw ParseError("expected '.' after flat type", pos);
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    tok.id = read_int(text, pos);
    if (tok.id < 1) throw ParseError("crossing id must be positive", tok.offset);
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) throw ParseError("expected sign '+' or '-'", pos);
    tok.sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ';')
      throw ParseError("expected whitespace or ';' after token", pos);
    comps.back().push_back(tok);
  }

  // Same-sign check per id before converting to orientation bits.
  std::map<int, std::vector<const RawToken*>> by_id;
  for (const auto& comp : comps)
    for (const auto& t : comp) by_id[t.id].push_back(&t);
  for (const auto& [id, list] : by_id) {
    if (list.size() != 2)
      throw ValidationError("crossing " + std::to_string(id) + " occurs " + std::to_string(list.size()) +
                            " time(s); expected exactly 2 (unpaired passage)");
    if (list[0]->sign != list[1]->sign) throw ValidationError("sign mismatch on crossing " + std::to_string(id));
    if (list[0]->type != list[1]->type) throw ValidationError("type mismatch on crossing " + std::to_string(id));
  }

  std::map<int, bool> first_flat_seen;
  std::vector<Component> out;
  for (const auto& comp : comps) {
    Component c;
    for (const auto& t : comp) {
      Passage p;
      p.id = t.id;
      p.role = t.role;
      p.type = t.type;
      if (t.role == Role::Over) {
        p.cross = t.sign;
      } else if (t.role == Role::Under) {
        p.cross = -t.sign;
      } else {
        const bool second = first_flat_seen[t.id];
        first_flat_seen[t.id] = true;
        p.cross = second ? -t.sign : t.sign;
      }
      c.push_back(p);
    }
    out.push_back(std::move(c));
  }
  return GaussCode(std::move(out));
}

int writhe(const GaussCode& g) {
  int w = 0;
  for (int id = 1; id <= g.crossing_count(); ++id)
    if (g.crossing(id).type == 0) w += g.crossing(id).sign;
  return w;
}

}  // namespace flatknot
