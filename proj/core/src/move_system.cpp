#include "flatknot/move_system.hpp"

#include "flatknot/errors.hpp"

#include <charconv>

namespace flatknot {

MoveSystem MoveSystem::classical() { return MoveSystem{}; }

MoveSystem MoveSystem::flat_virtual() { return MoveSystem{2, {1, 0, 1}, {1, 1, 1}, true}; }

MoveSystem MoveSystem::restricted_flat_virtual() { return MoveSystem{2, {1, 0, 1}, {1, 0, 1}, true}; }

MoveSystem MoveSystem::k_flat(int k) {
  MoveSystem ms;
  ms.k = k;
  ms.d.assign(k + 1, 1);
  ms.epsilon.assign(k + 1, 1);
  ms.validate();
  return ms;
}

void MoveSystem::validate() const {
  if (k < 0) throw ValidationError("move system: k must be >= 0");
  if (static_cast<int>(d.size()) != k + 1 || static_cast<int>(epsilon.size()) != k + 1)
    throw ValidationError("move system: d and epsilon need k+1 entries");
  for (int x : d)
    if (x < 0) throw ValidationError("move system: d entries must be >= 0");
  for (int e : epsilon)
    if (e != 0 && e != 1) throw ValidationError("move system: epsilon entries must be 0 or 1");
  if (top_is_virtual && k < 1) throw ValidationError("move system: a virtual top type needs k >= 1");
}

namespace {

std::vector<int> parse_list(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    const std::string_view item = s.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw ParseError("move system: bad integer '" + std::string(item) + "'", pos);
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace

MoveSystem MoveSystem::parse(std::string_view text) {
  if (text == "fv" || text == "flat-virtual") return flat_virtual();
  if (text == "rfv" || text == "restricted") return restricted_flat_virtual();
  if (text == "classical") return classical();

  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(':', pos);
    parts.push_back(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (parts.size() < 3 || parts.size() > 4) throw ParseError("move system: expected k:d0,..:e0,..[:v]", 0);
  MoveSystem ms;
  const auto k = parse_list(parts[0]);
  if (k.size() != 1) throw ParseError("move system: k must be a single integer", 0);
  ms.k = k[0];
  ms.d = parse_list(parts[1]);
  ms.epsilon = parse_list(parts[2]);
  if (parts.size() == 4) {
    if (parts[3] != "v") throw ParseError("move system: unknown suffix '" + std::string(parts[3]) + "'", 0);
    ms.top_is_virtual = true;
  }
  ms.validate();
  return ms;
}

std::string MoveSystem::to_string() const {
  auto join = [](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
  };
  std::string out = std::to_string(k) + ":" + join(d) + ":" + join(epsilon);
  if (top_is_virtual) out += ":v";
  return out;
}

}  // namespace flatknot
