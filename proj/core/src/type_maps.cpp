#include "flatknot/type_maps.hpp"

#include "flatknot/errors.hpp"

#include <numeric>

namespace flatknot {

GaussCode forget_classical(const GaussCode& g) {
  std::vector<Component> comps = g.components();
  for (auto& comp : comps)
    for (auto& p : comp)
      if (p.type == 0) {
        p.type = 1;
        p.role = Role::Flat;
      }
  return GaussCode(std::move(comps));
}

GaussCode flatten_to_virtual(const GaussCode& g) {
  return drop_crossings(g, [](const Passage& p) { return p.type >= 1; });
}

GaussCode retype_inclusion(const GaussCode& g, const std::vector<int>& sigma) {
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] >= sigma[i + 1]) throw ValidationError("type map must be strictly increasing");
  if (!sigma.empty() && sigma[0] < 0) throw ValidationError("type map values must be >= 0");
  if (g.max_type() >= static_cast<int>(sigma.size()))
    throw ValidationError("type map does not cover type " + std::to_string(g.max_type()));

  std::vector<Component> comps = g.components();
  for (auto& comp : comps)
    for (auto& p : comp) {
      const int to = sigma[p.type];
      if (p.type == 0 && to > 0) p.role = Role::Flat;
      p.type = to;
    }
  return GaussCode(std::move(comps));
}

std::pair<GaussCode, MoveSystem> merge_types(const GaussCode& g, int l, const MoveSystem& ms) {
  ms.validate();
  if (l < 0 || l >= ms.k) throw ValidationError("merge level must satisfy 0 <= l < k");

  MoveSystem out = ms;
  if (l == 0) {
    out.d[1] = std::gcd(ms.d[0], ms.d[1]);
    out.epsilon[1] = 1;
    return {forget_classical(g), out};
  }

  out.k = ms.k - 1;
  out.d.clear();
  out.epsilon.clear();
  for (int i = 0; i <= ms.k; ++i) {
    if (i == l + 1) continue;
    if (i == l) {
      out.d.push_back(std::gcd(ms.d[l], ms.d[l + 1]));
      out.epsilon.push_back(1);
    } else {
      out.d.push_back(ms.d[i]);
      out.epsilon.push_back(ms.epsilon[i]);
    }
  }

  std::vector<Component> comps = g.components();
  for (auto& comp : comps)
    for (auto& p : comp)
      if (p.type > l) --p.type;
  return {GaussCode(std::move(comps)), out};
}

}  // namespace flatknot
