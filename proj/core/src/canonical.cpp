#include "flatknot/canonical.hpp"

#include "flatknot/errors.hpp"
#include "flatknot/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace flatknot {

namespace {

// Least spelling over component order and rotation for fixed orientations,
// built component by component and cut off as soon as a prefix loses.
struct Arranger {
  std::vector<Component> comps;               // chord-carrying components only
  std::map<int, std::pair<int, int>> comp_of;  // id -> components of its two passages
  std::vector<bool> rev;
  bool mirror = false;

  std::string best;
  std::string out;
  std::map<int, int> renumber;
  std::vector<bool> used;

  // Appends component c read from rotation r; false when the prefix already
  // exceeds the best spelling.
  bool append(int c, int r) {
    const auto& comp = comps[c];
    const int n = static_cast<int>(comp.size());
    if (!out.empty()) out += " ; ";
    for (int m = 0; m < n; ++m) {
      const int idx = rev[c] ? ((r - m) % n + n) % n : (r + m) % n;
      const Passage& p = comp[idx];
      const auto [ca, cb] = comp_of[p.id];
      const int partner_comp = ca == c ? cb : ca;
      int cross = p.cross;
      if (rev[c]) cross = -cross;
      if (rev[partner_comp]) cross = -cross;
      if (mirror) cross = -cross;
      auto [it, fresh] = renumber.try_emplace(p.id, static_cast<int>(renumber.size()) + 1);
      // The text sign of a flat chord is the bit of its first passage read.
      const int sign = fresh ? cross : -cross;
      if (m > 0) out += ' ';
      out += "F" + std::to_string(p.type) + "." + std::to_string(it->second) + (sign > 0 ? '+' : '-');
      if (!best.empty() && out.compare(0, out.size(), best, 0, std::min(out.size(), best.size())) > 0) return false;
    }
    return true;
  }

  void search(std::size_t placed) {
    if (placed == comps.size()) {
      if (best.empty() || out < best) best = out;
      return;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (used[c]) continue;
      used[c] = true;
      for (int r = 0; r < static_cast<int>(comps[c].size()); ++r) {
        const std::string saved_out = out;
        const auto saved_numbers = renumber;
        if (append(static_cast<int>(c), r)) search(placed + 1);
        out = saved_out;
        renumber = saved_numbers;
      }
      used[c] = false;
    }
  }
};

// Gaps strictly inside a curl: between the two passages of a chord that are
// consecutive on one component.
std::set<Position> curl_gaps(const GaussCode& g) {
  std::set<Position> out;
  for (int c = 0; c < g.num_components(); ++c) {
    const auto& comp = g.components()[c];
    const int n = static_cast<int>(comp.size());
    for (int i = 0; i < n; ++i)
      if (comp[i].id == comp[(i + 1) % n].id) out.insert({c, (i + 1) % n});
  }
  return out;
}

}  // namespace

std::string symmetric_spelling(const GaussCode& state) {
  Arranger a;
  for (const auto& comp : state.components())
    if (!comp.empty()) {
      for (const auto& p : comp)
        if (p.type == 0) throw ValidationError("state still has a classical crossing");
      a.comps.push_back(comp);
    }
  if (a.comps.empty()) return "()";

  const int m = static_cast<int>(a.comps.size());
  if (m > 20) throw BudgetError("state has too many components for a symmetric spelling");
  std::map<int, std::vector<int>> lists;
  for (int c = 0; c < m; ++c)
    for (const auto& p : a.comps[c]) lists[p.id].push_back(c);
  for (auto& [id, l] : lists) a.comp_of[id] = {l.at(0), l.at(1)};

  a.used.assign(m, false);
  for (long long mask = 0; mask < (1LL << m); ++mask) {
    a.rev.assign(m, false);
    for (int c = 0; c < m; ++c) a.rev[c] = (mask >> c) & 1;
    for (bool mirror : {false, true}) {
      a.mirror = mirror;
      a.search(0);
    }
  }
  return a.best;
}

namespace {

CanonicalKey search_key(const GaussCode& state, const MoveSystem& ms, int budget) {
  auto free_count = [](const GaussCode& g) {
    return static_cast<int>(std::count_if(g.components().begin(), g.components().end(),
                                          [](const Component& c) { return c.empty(); }));
  };
  auto node_key = [&](const GaussCode& g) { return symmetric_spelling(g) + "|" + std::to_string(free_count(g)); };

  CanonicalKey res;
  int expanded = 0;

  // Pass 1: deletions and third moves only, down to the fewest crossings.
  std::unordered_set<std::string> seen{node_key(state)};
  std::deque<GaussCode> queue{state};
  std::vector<GaussCode> floor{state};
  int best_n = state.crossing_count();
  while (!queue.empty()) {
    if (expanded >= budget) {
      res.saturated = false;
      break;
    }
    GaussCode cur = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    const int n = cur.crossing_count();
    if (n < best_n) {
      best_n = n;
      floor.clear();
    }
    if (n == best_n) floor.push_back(cur);
    for (const auto& site : enumerate_moves(cur, ms)) {
      GaussCode next = apply_move(cur, site);
      if (seen.insert(node_key(next)).second) queue.push_back(std::move(next));
    }
  }

  // Pass 2: deletions, third moves, and second-move insertions that push a
  // strand into a curl loop, among the states at most two crossings above the
  // floor. A curl that cannot be removed still slides through other chords
  // this way. Finding a smaller state lowers the floor and restarts the pass.
  const int top = ms.max_code_type();
  for (bool restart = res.saturated; restart;) {
    restart = false;
    std::unordered_set<std::string> seen2;
    std::deque<GaussCode> q2;
    for (auto& g : floor)
      if (seen2.insert(node_key(g)).second) q2.push_back(g);
    res.key.clear();
    while (!q2.empty()) {
      if (expanded >= budget) {
        res.saturated = false;
        break;
      }
      GaussCode cur = std::move(q2.front());
      q2.pop_front();
      ++expanded;
      const int n = cur.crossing_count();
      if (n < best_n) {
        best_n = n;
        floor = {cur};
        restart = true;
        break;
      }
      if (n == best_n) {
        const std::string spelling = symmetric_spelling(cur);
        const int circles = free_count(cur);
        if (res.key.empty() || spelling < res.key || (spelling == res.key && circles < res.free_circles)) {
          res.key = spelling;
          res.free_circles = circles;
        }
      }
      std::vector<MoveSite> sites = enumerate_moves(cur, ms);
      if (n <= best_n) {
        const std::set<Position> loops = curl_gaps(cur);
        if (!loops.empty())
          for (auto& site : enumerate_insertions(cur, ms, static_cast<std::size_t>(-1)))
            if (site.kind == MoveKind::R2Insert && site.type >= 1 && site.type <= top &&
                (loops.count(site.positions[0]) || loops.count(site.positions[1])))
              sites.push_back(std::move(site));
      }
      for (const auto& site : sites) {
        GaussCode next = apply_move(cur, site);
        if (next.crossing_count() > best_n + 2) continue;
        if (seen2.insert(node_key(next)).second) q2.push_back(std::move(next));
      }
    }
    res.visited = static_cast<int>(seen.size() + seen2.size());
  }
  if (res.key.empty()) {
    // Budget ran out before the second pass produced anything.
    res.saturated = false;
    res.key = symmetric_spelling(floor.front());
    res.free_circles = free_count(floor.front());
    res.visited = static_cast<int>(seen.size());
  }
  return res;
}

}  // namespace

CanonicalKey canonical_flat_key(const GaussCode& state, const MoveSystem& ms, int budget) {
  if (budget <= 0) throw ValidationError("search budget must be positive");
  if (state.classical_count() > 0) throw ValidationError("state still has a classical crossing");

  // Free circles are split from the rest and never take part in a move.
  std::vector<Component> chords;
  int circles = 0;
  for (const auto& comp : state.components()) {
    if (comp.empty()) ++circles;
    else chords.push_back(comp);
  }
  if (chords.empty()) return CanonicalKey{"()", circles, true, 1};
  const GaussCode core(std::move(chords));

  static std::mutex mutex;
  static std::unordered_map<std::string, CanonicalKey> memo;
  const std::string memo_key = ms.to_string() + "#" + std::to_string(budget) + "#" + symmetric_spelling(core);
  CanonicalKey res;
  bool hit = false;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(memo_key); it != memo.end()) {
      res = it->second;
      hit = true;
    }
  }
  if (!hit) {
    res = search_key(core, ms, budget);
    std::lock_guard<std::mutex> lock(mutex);
    if (memo.size() >= (1U << 18)) memo.clear();
    memo.emplace(memo_key, res);
  }
  res.free_circles += circles;
  return res;
}

}  // namespace flatknot
