#include "flatknot/moves.hpp"

#include "flatknot/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace flatknot {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Delete: return "R1-delete";
    case MoveKind::R1Insert: return "R1-insert";
    case MoveKind::R2Delete: return "R2-delete";
    case MoveKind::R2Insert: return "R2-insert";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& name) {
  for (MoveKind k : {MoveKind::R1Delete, MoveKind::R1Insert, MoveKind::R2Delete, MoveKind::R2Insert, MoveKind::R3})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown move kind '" + name + "'");
}

namespace {

using Comps = std::vector<Component>;

int comp_len(const Comps& cs, int c) { return static_cast<int>(cs[c].size()); }

Position next_pos(const Comps& cs, Position p) { return {p.comp, (p.index + 1) % comp_len(cs, p.comp)}; }
Position prev_pos(const Comps& cs, Position p) {
  const int n = comp_len(cs, p.comp);
  return {p.comp, (p.index + n - 1) % n};
}

const Passage& at(const Comps& cs, Position p) { return cs[p.comp][p.index]; }

bool in_range(const Comps& cs, Position p) {
  return p.comp >= 0 && p.comp < static_cast<int>(cs.size()) && p.index >= 0 && p.index < comp_len(cs, p.comp);
}

bool all_distinct(std::vector<Position> ps) {
  std::sort(ps.begin(), ps.end());
  return std::adjacent_find(ps.begin(), ps.end()) == ps.end();
}

// ---- pattern checks shared by enumeration and application ----

bool is_r1_pattern(const Comps& cs, const std::vector<Position>& ps, int type) {
  if (ps.empty() || ps.size() % 2 != 0) return false;
  for (const auto& p : ps)
    if (!in_range(cs, p) || p.comp != ps[0].comp) return false;
  if (!all_distinct(ps)) return false;
  for (std::size_t m = 0; m + 1 < ps.size(); ++m)
    if (!(next_pos(cs, ps[m]) == ps[m + 1])) return false;
  for (std::size_t m = 0; m < ps.size(); m += 2) {
    const Passage& a = at(cs, ps[m]);
    const Passage& b = at(cs, ps[m + 1]);
    if (a.id != b.id || a.type != type) return false;
  }
  return true;
}

bool is_r2_pattern(const Comps& cs, const std::vector<Position>& ps) {
  if (ps.size() != 4) return false;
  for (const auto& p : ps)
    if (!in_range(cs, p)) return false;
  if (!all_distinct(ps)) return false;
  const Passage& x = at(cs, ps[0]);
  const Passage& y = at(cs, ps[1]);
  if (!(next_pos(cs, ps[0]) == ps[1])) return false;
  if (x.id == y.id || x.type != y.type) return false;
  if (at(cs, ps[2]).id != x.id || at(cs, ps[3]).id != y.id) return false;
  if (!(next_pos(cs, ps[2]) == ps[3]) && !(next_pos(cs, ps[3]) == ps[2])) return false;
  if (x.cross != -y.cross) return false;
  if (x.type == 0 && x.role != y.role) return false;
  return true;
}

// Three adjacent pairs S1=(A,B), S2 containing A and C, S3 containing B and C.
struct Triangle {
  int ta, tb, tc;
  bool geometric;
  bool classical_heights_ok;
};

bool read_triangle(const Comps& cs, const std::vector<Position>& ps, Triangle& out) {
  if (ps.size() != 6) return false;
  for (const auto& p : ps)
    if (!in_range(cs, p)) return false;
  if (!all_distinct(ps)) return false;
  for (int s = 0; s < 3; ++s)
    if (!(next_pos(cs, ps[2 * s]) == ps[2 * s + 1])) return false;

  const int x = at(cs, ps[0]).id;  // A = L1 ∩ L2
  const int y = at(cs, ps[1]).id;  // B = L1 ∩ L3
  // S2 must hold A and some C; S3 must hold B and C.
  int ia2 = -1, ic2 = -1;
  for (int m = 2; m < 4; ++m) {
    if (at(cs, ps[m]).id == x) ia2 = m;
    else ic2 = m;
  }
  if (ia2 < 0 || ic2 < 0) return false;
  const int z = at(cs, ps[ic2]).id;
  if (z == x || z == y) return false;
  int ib3 = -1, ic3 = -1;
  for (int m = 4; m < 6; ++m) {
    if (at(cs, ps[m]).id == y) ib3 = m;
    else if (at(cs, ps[m]).id == z) ic3 = m;
  }
  if (ib3 < 0 || ic3 < 0) return false;

  const int c12 = at(cs, ps[0]).cross;
  const int c13 = at(cs, ps[1]).cross;
  const int c23 = at(cs, ps[ic2]).cross;
  const int o2 = ia2 < ic2 ? 1 : -1;
  const int o3 = ib3 < ic3 ? 1 : -1;
  out.geometric = (o2 == c13 * c23) && (o3 == c12 * c23);

  out.ta = at(cs, ps[0]).type;
  out.tb = at(cs, ps[1]).type;
  out.tc = at(cs, ps[ic2]).type;

  const bool l1_over_l2 = at(cs, ps[0]).role == Role::Over;
  const bool l1_over_l3 = at(cs, ps[1]).role == Role::Over;
  const bool l2_over_l3 = at(cs, ps[ic2]).role == Role::Over;
  const bool cyclic = (l1_over_l2 && l2_over_l3 && !l1_over_l3) || (!l1_over_l2 && !l2_over_l3 && l1_over_l3);
  out.classical_heights_ok = !cyclic;
  return true;
}

bool triangle_allowed(const Triangle& t, const MoveSystem& ms) {
  if (!t.geometric) return false;
  if (t.ta == t.tb && t.tb == t.tc) {
    if (!ms.r3_same_allowed(t.ta)) return false;
    return t.ta != 0 || t.classical_heights_ok;
  }
  if (t.tb == t.tc && t.ta < t.tb) return true;
  if (t.ta == t.tc && t.tb < t.ta) return true;
  if (t.ta == t.tb && t.tc < t.ta) return true;
  return false;
}

void check_system(const GaussCode& g, const MoveSystem& ms) {
  ms.validate();
  if (g.max_type() > ms.max_code_type())
    throw ValidationError("diagram uses crossing type " + std::to_string(g.max_type()) + " beyond the move system");
}

int next_id(const Comps& cs) {
  int mx = 0;
  for (const auto& c : cs)
    for (const auto& p : c) mx = std::max(mx, p.id);
  return mx + 1;
}

void insert_at(Comps& cs, Position gap, const Component& seq) {
  auto& c = cs.at(gap.comp);
  if (gap.index < 0 || gap.index > static_cast<int>(c.size())) throw PreconditionError("stale site: gap out of range");
  c.insert(c.begin() + gap.index, seq.begin(), seq.end());
}

void erase_positions(Comps& cs, std::vector<Position> ps) {
  std::sort(ps.begin(), ps.end());
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) cs[it->comp].erase(cs[it->comp].begin() + it->index);
}

Comps raw_apply(Comps cs, const MoveSite& s) {
  switch (s.kind) {
    case MoveKind::R1Delete:
      if (!is_r1_pattern(cs, s.positions, s.type) || static_cast<int>(s.positions.size()) != 2 * s.count)
        throw PreconditionError("stale site: no curl run at the given positions");
      erase_positions(cs, s.positions);
      return cs;
    case MoveKind::R2Delete:
      if (!is_r2_pattern(cs, s.positions)) throw PreconditionError("stale site: no bigon at the given positions");
      erase_positions(cs, s.positions);
      return cs;
    case MoveKind::R3: {
      Triangle t{};
      if (!read_triangle(cs, s.positions, t) || !t.geometric) throw PreconditionError("stale site: no triangle");
      for (int m = 0; m < 3; ++m) std::swap(cs[s.positions[2 * m].comp][s.positions[2 * m].index],
                                            cs[s.positions[2 * m + 1].comp][s.positions[2 * m + 1].index]);
      return cs;
    }
    case MoveKind::R1Insert: {
      if (s.positions.size() != 1 || s.count < 1 || (s.cross != 1 && s.cross != -1) || s.type < 0)
        throw PreconditionError("malformed R1 insertion");
      int id = next_id(cs);
      Component seq;
      for (int m = 0; m < s.count; ++m, ++id) {
        Passage a{id, Role::Flat, s.type, s.cross};
        Passage b{id, Role::Flat, s.type, -s.cross};
        if (s.type == 0) {
          a.role = s.first_over ? Role::Over : Role::Under;
          b.role = s.first_over ? Role::Under : Role::Over;
        }
        seq.push_back(a);
        seq.push_back(b);
      }
      if (s.positions[0].comp < 0 || s.positions[0].comp >= static_cast<int>(cs.size()))
        throw PreconditionError("stale site: component out of range");
      insert_at(cs, s.positions[0], seq);
      return cs;
    }
    case MoveKind::R2Insert: {
      if (s.positions.size() != 2 || (s.cross != 1 && s.cross != -1) || s.type < 0)
        throw PreconditionError("malformed R2 insertion");
      for (const auto& gp : s.positions)
        if (gp.comp < 0 || gp.comp >= static_cast<int>(cs.size()) || gp.index < 0 ||
            gp.index > comp_len(cs, gp.comp))
          throw PreconditionError("stale site: gap out of range");
      const int x = next_id(cs);
      const int y = x + 1;
      const Role r1 = s.type == 0 ? (s.first_over ? Role::Over : Role::Under) : Role::Flat;
      const Role r2 = s.type == 0 ? (s.first_over ? Role::Under : Role::Over) : Role::Flat;
      Component seg1{{x, r1, s.type, s.cross}, {y, r1, s.type, -s.cross}};
      Component seg2{{x, r2, s.type, -s.cross}, {y, r2, s.type, s.cross}};
      if (s.reverse) std::swap(seg2[0], seg2[1]);
      const Position g1 = s.positions[0];
      const Position g2 = s.positions[1];
      if (g1 == g2) {
        Component both = seg1;
        both.insert(both.end(), seg2.begin(), seg2.end());
        insert_at(cs, g1, both);
      } else if (g1.comp == g2.comp && g1.index > g2.index) {
        insert_at(cs, g1, seg1);
        insert_at(cs, g2, seg2);
      } else {
        insert_at(cs, g2, seg2);
        insert_at(cs, g1, seg1);
      }
      return cs;
    }
  }
  return cs;
}

void add_unique(std::vector<MoveSite>& out, std::set<std::vector<Position>>& seen, MoveSite site) {
  auto key = site.positions;
  std::sort(key.begin(), key.end());
  if (seen.insert(key).second) out.push_back(std::move(site));
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const GaussCode& g, const MoveSystem& ms) {
  check_system(g, ms);
  const Comps& cs = g.components();
  std::vector<MoveSite> out;
  std::set<std::vector<Position>> seen;

  // First moves: runs of d_i consecutive curls.
  for (int c = 0; c < g.num_components(); ++c) {
    const int n = comp_len(cs, c);
    for (int s = 0; s < n; ++s) {
      const int type = cs[c][s].type;
      const int d = ms.r1_multiplicity(type);
      if (d < 1 || 2 * d > n) continue;
      std::vector<Position> ps;
      for (int m = 0; m < 2 * d; ++m) ps.push_back({c, (s + m) % n});
      if (!is_r1_pattern(cs, ps, type)) continue;
      MoveSite site;
      site.kind = MoveKind::R1Delete;
      site.type = type;
      site.count = d;
      site.positions = std::move(ps);
      add_unique(out, seen, std::move(site));
    }
  }

  // Second moves.
  for (int c = 0; c < g.num_components(); ++c) {
    const int n = comp_len(cs, c);
    for (int s = 0; s < n && n >= 2; ++s) {
      const Position p1{c, s};
      const Position p2 = next_pos(cs, p1);
      if (at(cs, p1).id == at(cs, p2).id) continue;
      const Position q1 = g.locate(at(cs, p1).id).first == p1 ? g.locate(at(cs, p1).id).second : g.locate(at(cs, p1).id).first;
      const Position q2 = g.locate(at(cs, p2).id).first == p2 ? g.locate(at(cs, p2).id).second : g.locate(at(cs, p2).id).first;
      std::vector<Position> ps{p1, p2, q1, q2};
      if (!is_r2_pattern(cs, ps)) continue;
      MoveSite site;
      site.kind = MoveKind::R2Delete;
      site.type = at(cs, p1).type;
      site.positions = std::move(ps);
      // The same bigon is found from both strand pieces; keep one.
      add_unique(out, seen, std::move(site));
    }
  }

  // Third moves.
  auto other = [&](Position p) {
    const auto& loc = g.locate(at(cs, p).id);
    return loc.first == p ? loc.second : loc.first;
  };
  for (int c = 0; c < g.num_components(); ++c) {
    const int n = comp_len(cs, c);
    if (n < 2) continue;
    for (int s = 0; s < n; ++s) {
      const Position p = {c, s};
      const Position pn = next_pos(cs, p);
      if (at(cs, p).id == at(cs, pn).id) continue;
      const Position qx = other(p);
      const Position qy = other(pn);
      for (const Position r : {prev_pos(cs, qx), next_pos(cs, qx)}) {
        if (r == qx) continue;
        const int z = at(cs, r).id;
        if (z == at(cs, p).id || z == at(cs, pn).id) continue;
        const Position qz = other(r);
        std::vector<Position> ps{p, pn};
        if (next_pos(cs, qx) == r) {
          ps.push_back(qx);
          ps.push_back(r);
        } else {
          ps.push_back(r);
          ps.push_back(qx);
        }
        if (next_pos(cs, qy) == qz) {
          ps.push_back(qy);
          ps.push_back(qz);
        } else if (next_pos(cs, qz) == qy) {
          ps.push_back(qz);
          ps.push_back(qy);
        } else {
          continue;
        }
        Triangle t{};
        if (!read_triangle(cs, ps, t) || !triangle_allowed(t, ms)) continue;
        MoveSite site;
        site.kind = MoveKind::R3;
        site.type = std::min({t.ta, t.tb, t.tc});
        site.positions = std::move(ps);
        add_unique(out, seen, std::move(site));
      }
    }
  }
  return out;
}

std::vector<MoveSite> enumerate_insertions(const GaussCode& g, const MoveSystem& ms, std::size_t limit) {
  check_system(g, ms);
  std::vector<MoveSite> out;
  std::vector<Position> gaps;
  for (int c = 0; c < g.num_components(); ++c) {
    const int n = static_cast<int>(g.components()[c].size());
    for (int i = 0; i < std::max(n, 1); ++i) gaps.push_back({c, i});
  }
  const int top = ms.max_code_type();
  for (const auto& gap : gaps)
    for (int type = 0; type <= top; ++type) {
      const int d = ms.r1_multiplicity(type);
      if (d < 1) continue;
      for (int cross : {1, -1})
        for (bool first_over : {true, false}) {
          if (type > 0 && !first_over) continue;
          if (out.size() >= limit) return out;
          out.push_back(MoveSite{MoveKind::R1Insert, type, d, {gap}, false, first_over, cross});
        }
    }
  for (const auto& g1 : gaps)
    for (const auto& g2 : gaps)
      for (int type = 0; type <= top; ++type)
        for (int cross : {1, -1})
          for (bool reverse : {false, true})
            for (bool first_over : {true, false}) {
              if (type > 0 && !first_over) continue;
              if (out.size() >= limit) return out;
              out.push_back(MoveSite{MoveKind::R2Insert, type, 1, {g1, g2}, reverse, first_over, cross});
            }
  return out;
}

GaussCode apply_move(const GaussCode& g, const MoveSite& site) { return GaussCode(raw_apply(g.components(), site)); }

bool site_is_legal(const GaussCode& g, const MoveSite& site, const MoveSystem& ms) {
  check_system(g, ms);
  switch (site.kind) {
    case MoveKind::R1Delete:
    case MoveKind::R2Delete:
    case MoveKind::R3: {
      auto key = site.positions;
      std::sort(key.begin(), key.end());
      for (const auto& s : enumerate_moves(g, ms)) {
        auto k2 = s.positions;
        std::sort(k2.begin(), k2.end());
        if (s.kind == site.kind && k2 == key) return true;
      }
      return false;
    }
    case MoveKind::R1Insert:
      if (site.type < 0 || site.type > ms.max_code_type()) return false;
      return ms.r1_multiplicity(site.type) >= 1 && site.count == ms.r1_multiplicity(site.type);
    case MoveKind::R2Insert:
      return site.type >= 0 && site.type <= ms.max_code_type();
  }
  return false;
}

namespace {

class Walker {
 public:
  Walker(const MoveSystem& ms, std::uint64_t seed, const ScrambleOptions& opt) : ms_(ms), rng_(seed), opt_(opt) {}

  bool r1_allowed(int type) const {
    if (ms_.r1_multiplicity(type) < 1) return false;
    if (type == 0) return !opt_.forbid_classical_r1;
    return !opt_.forbid_flat_r1;
  }

  int uniform(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  double roll() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  Position random_gap(const Comps& cs) {
    const int c = uniform(static_cast<int>(cs.size()));
    const int n = comp_len(cs, c);
    return {c, n == 0 ? 0 : uniform(n)};
  }

  int random_type() { return uniform(ms_.max_code_type() + 1); }

  MoveSite random_r2(const Position& g1, const Position& g2) {
    MoveSite s;
    s.kind = MoveKind::R2Insert;
    s.type = random_type();
    s.positions = {g1, g2};
    s.reverse = roll() < 0.5;
    s.first_over = roll() < 0.5;
    s.cross = roll() < 0.5 ? 1 : -1;
    return s;
  }

  // One or two sites; a pair of second moves arranged around an existing
  // crossing tends to create a triangle for the third move.
  std::vector<MoveSite> pick(const GaussCode& g, int max_crossings) {
    std::vector<MoveSite> del, r3;
    for (auto& s : enumerate_moves(g, ms_)) {
      if (s.kind == MoveKind::R1Delete && !r1_allowed(s.type)) continue;
      (s.kind == MoveKind::R3 ? r3 : del).push_back(std::move(s));
    }
    const double r = roll();
    if (!r3.empty() && r < 0.4) return {r3[uniform(static_cast<int>(r3.size()))]};
    const int room = max_crossings - g.crossing_count();
    if (!del.empty() && (room <= 0 || r < 0.6)) return {del[uniform(static_cast<int>(del.size()))]};
    if (room < 2) {
      if (!r3.empty()) return {r3[uniform(static_cast<int>(r3.size()))]};
      if (!del.empty()) return {del[uniform(static_cast<int>(del.size()))]};
    }

    const Comps& cs = g.components();
    std::vector<int> r1_types;
    for (int t = 0; t <= ms_.max_code_type(); ++t)
      if (r1_allowed(t)) r1_types.push_back(t);
    std::erase_if(r1_types, [&](int t) { return ms_.r1_multiplicity(t) > room; });
    if (!r1_types.empty() && (room < 2 || roll() < 0.25)) {
      MoveSite s;
      s.kind = MoveKind::R1Insert;
      s.type = r1_types[uniform(static_cast<int>(r1_types.size()))];
      s.count = ms_.r1_multiplicity(s.type);
      s.positions = {random_gap(cs)};
      s.first_over = roll() < 0.5;
      s.cross = roll() < 0.5 ? 1 : -1;
      return {s};
    }
    if (room < 2) return {};
    if (g.crossing_count() > 0 && room >= 4 && roll() < 0.7) return triangle_setup(g);
    return {random_r2(random_gap(cs), random_gap(cs))};
  }

  // The first pair puts a new strand piece R across P's strand next to the
  // chosen crossing; the second pair crosses R with Q's strand next to it.
  std::vector<MoveSite> triangle_setup(const GaussCode& g) {
    const Comps& cs = g.components();
    const int id = 1 + uniform(g.crossing_count());
    const auto [pp, qq] = g.locate(id);
    const Position g1{pp.comp, pp.index + (roll() < 0.5 ? 0 : 1)};
    const Position g2 = random_gap(cs);
    MoveSite first = random_r2(g1, g2);

    auto shifted = [&](Position p) {
      for (const Position& gp : {g1, g2})
        if (gp.comp == p.comp && gp.index <= p.index) p.index += 2;
      return p;
    };
    int r_start = g2.index;
    if (g1 == g2 || (g1.comp == g2.comp && g1.index < g2.index)) r_start += 2;
    const Position mid{g2.comp, r_start + 1};
    const Position q = shifted(qq);
    const Position gap_q{q.comp, q.index + (roll() < 0.5 ? 0 : 1)};
    return {first, random_r2(gap_q, mid)};
  }

 private:
  MoveSystem ms_;
  std::mt19937_64 rng_;
  ScrambleOptions opt_;
};

}  // namespace

ScrambleResult scramble(const GaussCode& g, const MoveSystem& ms, std::uint64_t seed, int steps,
                        const ScrambleOptions& options) {
  check_system(g, ms);
  Walker walker(ms, seed, options);
  const int cap = options.max_crossings > 0 ? options.max_crossings : g.crossing_count() + 6;
  ScrambleResult res{g, {}};
  int done = 0;
  while (done < steps) {
    const auto sites = walker.pick(res.code, cap);
    for (const auto& site : sites) {
      if (done >= steps) break;
      res.code = apply_move(res.code, site);
      res.log.push_back(site);
      ++done;
    }
    if (sites.empty()) ++done;
  }
  return res;
}

GaussCode replay(const GaussCode& g, const std::vector<MoveSite>& log, const MoveSystem& ms) {
  GaussCode cur = g;
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (!site_is_legal(cur, log[i], ms))
      throw PreconditionError("move " + std::to_string(i) + " (" + to_string(log[i].kind) + ") is not legal");
    cur = apply_move(cur, log[i]);
  }
  return cur;
}

}  // namespace flatknot
