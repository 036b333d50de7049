#include "flatknot/bracket.hpp"

#include "flatknot/canonical.hpp"
#include "flatknot/errors.hpp"

#include <unordered_map>

namespace flatknot {

bool BracketValue::saturated() const {
  for (const auto& [key, term] : terms)
    if (!term.saturated) return false;
  return true;
}

LaurentPoly BracketValue::coefficient(const std::string& key) const {
  auto it = terms.find(key);
  return it == terms.end() ? LaurentPoly() : it->second.coeff;
}

bool BracketValue::same_terms(const BracketValue& other) const {
  if (terms.size() != other.terms.size()) return false;
  for (const auto& [key, term] : terms) {
    auto it = other.terms.find(key);
    if (it == other.terms.end() || !(it->second.coeff == term.coeff)) return false;
  }
  return true;
}

BracketValue BracketValue::scaled(const LaurentPoly& factor) const {
  BracketValue out;
  out.states = states;
  for (const auto& [key, term] : terms) {
    LaurentPoly c = term.coeff * factor;
    if (!c.is_zero()) out.terms[key] = BracketTerm{std::move(c), term.saturated};
  }
  return out;
}

GaussCode smoothing_state(const GaussCode& g, unsigned long long a_mask, SmoothingConvention convention) {
  // Passage ends: 2*pid is where the strand enters, 2*pid+1 where it leaves.
  std::vector<Position> pos;
  std::vector<std::vector<int>> pid_of(g.num_components());
  for (int c = 0; c < g.num_components(); ++c)
    for (int i = 0; i < static_cast<int>(g.components()[c].size()); ++i) {
      pid_of[c].push_back(static_cast<int>(pos.size()));
      pos.push_back({c, i});
    }
  const int np = static_cast<int>(pos.size());
  std::vector<int> arc_link(2 * np), vertex_link(2 * np);
  for (int c = 0; c < g.num_components(); ++c) {
    const auto& ids = pid_of[c];
    const int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i) {
      const int out_end = 2 * ids[i] + 1;
      const int in_end = 2 * ids[(i + 1) % n];
      arc_link[out_end] = in_end;
      arc_link[in_end] = out_end;
    }
  }
  int bit = 0;
  for (int id = 1; id <= g.crossing_count(); ++id) {
    const auto [p, q] = g.locate(id);
    const int pp = pid_of[p.comp][p.index];
    const int qq = pid_of[q.comp][q.index];
    if (g.crossing(id).type != 0) {
      vertex_link[2 * pp] = 2 * pp + 1;
      vertex_link[2 * pp + 1] = 2 * pp;
      vertex_link[2 * qq] = 2 * qq + 1;
      vertex_link[2 * qq + 1] = 2 * qq;
      continue;
    }
    const bool a_choice = (a_mask >> bit) & 1ULL;
    ++bit;
    const bool positive = g.crossing(id).sign > 0;
    bool oriented = a_choice == positive;
    if (convention == SmoothingConvention::R) oriented = !oriented;
    if (oriented) {
      vertex_link[2 * pp] = 2 * qq + 1;
      vertex_link[2 * qq + 1] = 2 * pp;
      vertex_link[2 * qq] = 2 * pp + 1;
      vertex_link[2 * pp + 1] = 2 * qq;
    } else {
      vertex_link[2 * pp] = 2 * qq;
      vertex_link[2 * qq] = 2 * pp;
      vertex_link[2 * pp + 1] = 2 * qq + 1;
      vertex_link[2 * qq + 1] = 2 * pp + 1;
    }
  }

  std::vector<char> visited(2 * np, 0);
  std::vector<int> forward(np, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < 2 * np; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int e = start;  // arrival end at a vertex
    do {
      visited[e] = 1;
      const int pid = e / 2;
      const Passage& p = g.at(pos[pid]);
      const int f = vertex_link[e];
      visited[f] = 1;
      if (p.type != 0) {
        forward[pid] = (e % 2 == 0) ? 1 : -1;
        cycle.push_back(pid);
      }
      e = arc_link[f];
    } while (e != start);
    cycles.push_back(std::move(cycle));
  }

  std::vector<int> partner(np);
  for (int id = 1; id <= g.crossing_count(); ++id) {
    const auto [p, q] = g.locate(id);
    const int pp = pid_of[p.comp][p.index];
    const int qq = pid_of[q.comp][q.index];
    partner[pp] = qq;
    partner[qq] = pp;
  }

  std::vector<Component> comps;
  for (const auto& cyc : cycles) {
    Component c;
    for (int pid : cyc) {
      Passage p = g.at(pos[pid]);
      p.cross *= forward[pid] * forward[partner[pid]];
      c.push_back(p);
    }
    comps.push_back(std::move(c));
  }
  for (const auto& comp : g.components())
    if (comp.empty()) comps.emplace_back();
  return GaussCode(std::move(comps));
}

BracketValue bracket(const GaussCode& g, const BracketOptions& options) {
  const int n = g.classical_count();
  if (n > options.cap)
    throw BudgetError(std::to_string(n) + " classical crossings exceed the cap of " + std::to_string(options.cap));
  if (n > 62) throw BudgetError("too many classical crossings");

  const LaurentPoly delta = -LaurentPoly::variable(var::a, 2) - LaurentPoly::variable(var::a, -2);

  std::unordered_map<std::string, CanonicalKey> cache;
  BracketValue out;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    const int alpha = __builtin_popcountll(mask);
    const int beta = n - alpha;
    const GaussCode state = smoothing_state(g, mask, options.convention);
    const std::string spelled = state.to_string();
    auto it = cache.find(spelled);
    if (it == cache.end()) it = cache.emplace(spelled, canonical_flat_key(state, options.ms, options.budget)).first;
    const CanonicalKey& key = it->second;
    const int circles = key.key == "()" ? key.free_circles - 1 : key.free_circles;
    LaurentPoly c = LaurentPoly::variable(var::a, alpha - beta) * delta.pow(circles);
    auto& term = out.terms[key.key];
    term.coeff += c;
    term.saturated = term.saturated && key.saturated;
    ++out.states;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second.coeff.is_zero()) it = out.terms.erase(it);
    else ++it;
  }
  return out;
}

BracketValue jones(const GaussCode& g, const BracketOptions& options) {
  const int w = writhe(g);
  LaurentPoly factor = LaurentPoly::variable(var::a, -3 * w);
  if ((3 * w) % 2 != 0) factor = -factor;
  return bracket(g, options).scaled(factor);
}

BracketValue specialize_flat(const BracketValue& b) {
  BracketValue out;
  out.states = b.states;
  for (const auto& [key, term] : b.terms) {
    LaurentPoly c = term.coeff.substitute(var::a, -1);
    if (!c.is_zero()) out.terms[key] = BracketTerm{std::move(c), term.saturated};
  }
  return out;
}

}  // namespace flatknot
