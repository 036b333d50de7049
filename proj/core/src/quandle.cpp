#include "flatknot/quandle.hpp"

#include "flatknot/alexander.hpp"
#include "flatknot/errors.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <set>

namespace flatknot {

void validate_tables(const FiniteKFlatBiquandle& b) {
  if (b.n < 1) throw ValidationError("biquandle: n must be >= 1");
  if (b.k < 0) throw ValidationError("biquandle: k must be >= 0");
  if (static_cast<int>(b.star.size()) != b.k) throw ValidationError("biquandle: expected k flat tables");
  auto check = [&](const OpTable& t, const std::string& name) {
    if (static_cast<int>(t.size()) != b.n) throw ValidationError("biquandle: table " + name + " needs n rows");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != b.n) throw ValidationError("biquandle: table " + name + " needs n columns");
      for (int v : row)
        if (v < 0 || v >= b.n) throw ValidationError("biquandle: entry out of range in " + name);
    }
  };
  check(b.under0, "under0");
  check(b.over0, "over0");
  for (int i = 0; i < b.k; ++i) check(b.star[i], "star" + std::to_string(i + 1));
}

namespace {

std::string triple(int x, int y, int z) {
  return "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

bool columns_bijective(const OpTable& t, int n, int& bad_y) {
  for (int y = 0; y < n; ++y) {
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (hit[t[x][y]]) {
        bad_y = y;
        return false;
      }
      hit[t[x][y]] = 1;
    }
  }
  return true;
}

bool pair_map_bijective(const std::function<std::pair<int, int>(int, int)>& s, int n) {
  std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [a, b] = s(x, y);
      const std::size_t idx = static_cast<std::size_t>(a) * n + b;
      if (hit[idx]) return false;
      hit[idx] = 1;
    }
  return true;
}

}  // namespace

AxiomReport check_axioms(const FiniteKFlatBiquandle& b) {
  validate_tables(b);
  const int n = b.n;
  auto fail = [](std::string what) { return AxiomReport{false, std::move(what)}; };

  for (int x = 0; x < n; ++x)
    if (b.over(x, x) != b.under(x, x)) return fail("diagonal law fails at x=" + std::to_string(x));
  int bad = 0;
  if (!columns_bijective(b.over0, n, bad)) return fail("x -> x over y is not a bijection for y=" + std::to_string(bad));
  if (!columns_bijective(b.under0, n, bad)) return fail("x -> x under y is not a bijection for y=" + std::to_string(bad));
  if (!pair_map_bijective([&](int x, int y) { return std::pair{b.over(x, y), b.under(y, x)}; }, n))
    return fail("S_0 is not a bijection");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (b.over(b.over(x, y), b.over(z, y)) != b.over(b.over(x, z), b.under(y, z)))
          return fail("first exchange law fails at " + triple(x, y, z));
        if (b.over(b.under(x, y), b.under(z, y)) != b.under(b.over(x, z), b.over(y, z)))
          return fail("second exchange law fails at " + triple(x, y, z));
        if (b.under(b.under(x, y), b.under(z, y)) != b.under(b.under(x, z), b.over(y, z)))
          return fail("third exchange law fails at " + triple(x, y, z));
      }

  for (int i = 1; i <= b.k; ++i) {
    const OpTable& t = b.star[i - 1];
    if (!columns_bijective(t, n, bad))
      return fail("x -> x star" + std::to_string(i) + " y is not a bijection for y=" + std::to_string(bad));
    if (!pair_map_bijective([&](int x, int y) { return std::pair{t[x][y], t[y][x]}; }, n))
      return fail("S_" + std::to_string(i) + " is not a bijection");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (t[t[x][y]][t[z][y]] != t[t[x][z]][t[y][z]])
            return fail("flat law for type " + std::to_string(i) + " fails at " + triple(x, y, z));
  }

  for (int i = 0; i <= b.k; ++i)
    for (int j = i + 1; j <= b.k; ++j) {
      auto ov = [&](int x, int y) { return i == 0 ? b.over(x, y) : b.flat(i, x, y); };
      auto un = [&](int x, int y) { return i == 0 ? b.under(x, y) : b.flat(i, x, y); };
      auto st = [&](int x, int y) { return b.flat(j, x, y); };
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            const std::string where = " for types (" + std::to_string(i) + "," + std::to_string(j) + ") at " + triple(x, y, z);
            if (st(ov(x, y), st(z, y)) != ov(st(x, z), st(y, z))) return fail("first mixed law fails" + where);
            if (st(un(x, y), st(z, y)) != un(st(x, z), st(y, z))) return fail("second mixed law fails" + where);
            if (st(st(x, y), ov(z, y)) != st(st(x, z), un(y, z))) return fail("third mixed law fails" + where);
          }
    }
  return {};
}

FiniteKFlatBiquandle alexander_biquandle(int n, int t, const std::vector<int>& s) {
  FiniteKFlatBiquandle b;
  b.n = n;
  b.k = static_cast<int>(s.size());
  auto mod = [n](long long v) { return static_cast<int>(((v % n) + n) % n); };
  b.under0.assign(n, std::vector<int>(n));
  b.over0.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      b.under0[x][y] = mod(static_cast<long long>(t) * x + static_cast<long long>(1 - t) * y);
      b.over0[x][y] = x;
    }
  for (int si : s) {
    OpTable tab(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) tab[x][y] = mod(static_cast<long long>(si) * x);
    b.star.push_back(std::move(tab));
  }
  return b;
}

FiniteKFlatBiquandle dihedral_biquandle(int n, int k) {
  FiniteKFlatBiquandle b;
  b.n = n;
  b.k = k;
  b.under0.assign(n, std::vector<int>(n));
  b.over0.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      b.under0[x][y] = ((2 * y - x) % n + n) % n;
      b.over0[x][y] = x;
    }
  OpTable id(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) id[x][y] = x;
  b.star.assign(k, id);
  return b;
}

namespace {

// Each crossing relates four semiarcs: outputs (c, d) = (F(a, b), G(b, a)).
struct Rule {
  int a, b, c, d;
  const OpTable* f;
  const OpTable* g;
};

struct ColoringSystem {
  int vars = 0;
  int free_circles = 0;
  std::vector<Rule> rules;
};

ColoringSystem coloring_system(const GaussCode& g, const FiniteKFlatBiquandle& b) {
  ColoringSystem sys;
  std::vector<std::vector<int>> out_var(g.num_components());
  for (int c = 0; c < g.num_components(); ++c) {
    const int len = static_cast<int>(g.components()[c].size());
    if (len == 0) ++sys.free_circles;
    for (int i = 0; i < len; ++i) out_var[c].push_back(sys.vars++);
  }
  auto in_of = [&](Position p) {
    const int len = static_cast<int>(out_var[p.comp].size());
    return out_var[p.comp][(p.index + len - 1) % len];
  };
  auto out_of = [&](Position p) { return out_var[p.comp][p.index]; };

  for (int id = 1; id <= g.crossing_count(); ++id) {
    const auto [p, q] = g.locate(id);
    const CrossingInfo& info = g.crossing(id);
    if (info.type > b.k) throw ValidationError("diagram uses crossing type " + std::to_string(info.type) +
                                               " but the biquandle has k=" + std::to_string(b.k));
    if (info.type == 0) {
      const Position o = g.at(p).role == Role::Over ? p : q;
      const Position u = g.at(p).role == Role::Over ? q : p;
      if (info.sign > 0) sys.rules.push_back({in_of(o), in_of(u), out_of(o), out_of(u), &b.over0, &b.under0});
      else sys.rules.push_back({out_of(o), out_of(u), in_of(o), in_of(u), &b.over0, &b.under0});
    } else {
      const Position pp = g.at(p).cross > 0 ? p : q;  // the passage with cross bit +1
      const Position nn = g.at(p).cross > 0 ? q : p;
      const OpTable* t = &b.star[info.type - 1];
      sys.rules.push_back({in_of(pp), out_of(nn), out_of(pp), in_of(nn), t, t});
    }
  }
  return sys;
}

unsigned long long pow_ull(unsigned long long base, int e) {
  unsigned long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

unsigned long long count_colorings(const GaussCode& g, const FiniteKFlatBiquandle& b) {
  const AxiomReport report = check_axioms(b);
  if (!report.ok) throw ValidationError("not a k-flat biquandle: " + report.failure);
  const ColoringSystem sys = coloring_system(g, b);

  // Inverses per table: the S map of a crossing is a bijection on pairs and
  // every table is a bijection in its first argument, so any of the pairs
  // (a,b), (c,d), (a,d), (b,c) fixes all four colours of a crossing.
  struct Inverse {
    std::vector<std::pair<int, int>> s;  // (c,d) -> (a,b)
    OpTable first;                       // first[y][z] = x with T[x][y] = z
  };
  std::map<std::pair<const OpTable*, const OpTable*>, Inverse> s_inv;
  std::map<const OpTable*, OpTable> col_inv;
  const int n = b.n;
  for (const Rule& r : sys.rules) {
    for (const OpTable* t : {r.f, r.g})
      if (!col_inv.count(t)) {
        OpTable inv(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) inv[y][(*t)[x][y]] = x;
        col_inv.emplace(t, std::move(inv));
      }
    auto key = std::make_pair(r.f, r.g);
    if (!s_inv.count(key)) {
      Inverse inv;
      inv.s.resize(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) inv.s[(*r.f)[x][y] * n + (*r.g)[y][x]] = {x, y};
      s_inv.emplace(key, std::move(inv));
    }
  }

  std::vector<std::vector<int>> rules_of(sys.vars);
  for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r) {
    std::set<int> vs{sys.rules[r].a, sys.rules[r].b, sys.rules[r].c, sys.rules[r].d};
    for (int v : vs) rules_of[v].push_back(r);
  }

  std::vector<int> color(sys.vars, -1);
  std::vector<int> trail;

  // Assigns v := x and everything it forces; false on conflict.
  std::function<bool(int, int)> assign = [&](int v, int x) -> bool {
    std::vector<std::pair<int, int>> work{{v, x}};
    while (!work.empty()) {
      const auto [var, val] = work.back();
      work.pop_back();
      if (color[var] >= 0) {
        if (color[var] != val) return false;
        continue;
      }
      color[var] = val;
      trail.push_back(var);
      for (int r : rules_of[var]) {
        const Rule& rule = sys.rules[r];
        const int ca = color[rule.a], cb = color[rule.b], cc = color[rule.c], cd = color[rule.d];
        int a = -1, bb = -1;
        if (ca >= 0 && cb >= 0) {
          a = ca;
          bb = cb;
        } else if (cc >= 0 && cd >= 0) {
          std::tie(a, bb) = s_inv.at({rule.f, rule.g}).s[cc * n + cd];
        } else if (ca >= 0 && cd >= 0) {
          a = ca;
          bb = col_inv.at(rule.g)[ca][cd];
        } else if (cb >= 0 && cc >= 0) {
          a = col_inv.at(rule.f)[cb][cc];
          bb = cb;
        } else {
          continue;
        }
        work.emplace_back(rule.a, a);
        work.emplace_back(rule.b, bb);
        work.emplace_back(rule.c, (*rule.f)[a][bb]);
        work.emplace_back(rule.d, (*rule.g)[bb][a]);
      }
    }
    return true;
  };

  // Branch next to what is already known: a free variable that, together with
  // a coloured one, determines some crossing.
  auto pick = [&]() -> int {
    for (const Rule& r : sys.rules) {
      const int vs[4] = {r.a, r.b, r.c, r.d};
      for (int i = 0; i < 4; ++i) {
        if (color[vs[i]] < 0) continue;
        // partners of a, b, c, d in a determining pair
        static constexpr int partner[4][2] = {{1, 3}, {0, 2}, {3, 1}, {2, 0}};
        for (int j : partner[i])
          if (color[vs[j]] < 0) return vs[j];
      }
    }
    for (int v = 0; v < sys.vars; ++v)
      if (color[v] < 0) return v;
    return -1;
  };

  unsigned long long count = 0;
  std::function<void()> search = [&]() {
    const int v = pick();
    if (v < 0) {
      ++count;
      return;
    }
    for (int x = 0; x < b.n; ++x) {
      const std::size_t mark = trail.size();
      if (assign(v, x)) search();
      while (trail.size() > mark) {
        color[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  search();
  return count * pow_ull(static_cast<unsigned long long>(b.n), sys.free_circles);
}

unsigned long long count_colorings_brute(const GaussCode& g, const FiniteKFlatBiquandle& b) {
  validate_tables(b);
  const ColoringSystem sys = coloring_system(g, b);
  std::vector<int> color(sys.vars, 0);
  unsigned long long count = 0;
  while (true) {
    bool ok = true;
    for (const Rule& r : sys.rules)
      if (color[r.c] != (*r.f)[color[r.a]][color[r.b]] || color[r.d] != (*r.g)[color[r.b]][color[r.a]]) {
        ok = false;
        break;
      }
    if (ok) ++count;
    int i = 0;
    while (i < sys.vars && ++color[i] == b.n) color[i++] = 0;
    if (i == sys.vars) break;
  }
  return count * pow_ull(static_cast<unsigned long long>(b.n), sys.free_circles);
}

namespace {

std::set<int> a_k_units(int k) {
  std::set<int> units{var::t};
  for (int i = 1; i <= k; ++i) units.insert(var::s(i));
  return units;
}

void check_types(const GaussCode& g, int k) {
  if (k < 0) throw ValidationError("k must be >= 0");
  if (g.max_type() > k)
    throw ValidationError("diagram uses crossing type " + std::to_string(g.max_type()) + " > k=" + std::to_string(k));
}

}  // namespace

MultiflatDelta multiflat_alexander_delta(const GaussCode& g, int k, bool auto_kink) {
  check_types(g, k);
  if (g.classical_count() == 0) throw PreconditionError("no classical crossings: the polynomial is undefined");

  std::vector<int> index(g.crossing_count() + 1, -1);
  std::vector<int> sign;
  for (int id = 1; id <= g.crossing_count(); ++id)
    if (g.crossing(id).type == 0) {
      index[id] = static_cast<int>(sign.size());
      sign.push_back(g.crossing(id).sign);
    }
  std::vector<std::vector<ArcEvent>> comps;
  for (const auto& comp : g.components()) {
    std::vector<ArcEvent> ev;
    for (const auto& p : comp) {
      if (p.type == 0) ev.push_back({p.role == Role::Over ? ArcEvent::What::Over : ArcEvent::What::Under, index[p.id], {}});
      else ev.push_back({ArcEvent::What::Factor, 0, Monomial::of(var::s(p.type), p.cross)});
    }
    comps.push_back(std::move(ev));
  }
  ArcPresentation pres = arc_presentation(comps, sign, auto_kink);
  const auto units = a_k_units(k);

  MultiflatDelta res;
  res.auto_kinked = pres.auto_kinked;
  LaurentPoly det = lp_det(pres.matrix);
  if (!det.is_zero()) {
    res.delta = lp_similar_normalize(det, units);
    return res;
  }
  PolyMatrix minor = pres.matrix;
  minor.pop_back();
  for (auto& row : minor) row.pop_back();
  res.ideal_order = 1;
  res.delta = lp_similar_normalize(minor.empty() ? LaurentPoly(1) : lp_det(std::move(minor)), units);
  return res;
}

PolyMatrix semiarc_presentation(const GaussCode& g, int k) {
  check_types(g, k);
  std::vector<std::vector<int>> out_var(g.num_components());
  int vars = 0;
  for (int c = 0; c < g.num_components(); ++c) {
    const int len = static_cast<int>(g.components()[c].size());
    if (len == 0) throw PreconditionError("a component without crossings leaves a free generator");
    for (int i = 0; i < len; ++i) out_var[c].push_back(vars++);
  }
  auto in_of = [&](Position p) {
    const int len = static_cast<int>(out_var[p.comp].size());
    return out_var[p.comp][(p.index + len - 1) % len];
  };
  auto out_of = [&](Position p) { return out_var[p.comp][p.index]; };

  const LaurentPoly t = LaurentPoly::variable(var::t);
  PolyMatrix m;
  auto row = [&]() -> std::vector<LaurentPoly>& {
    m.emplace_back(vars);
    return m.back();
  };
  for (int id = 1; id <= g.crossing_count(); ++id) {
    const auto [p, q] = g.locate(id);
    const CrossingInfo& info = g.crossing(id);
    if (info.type == 0) {
      const Position o = g.at(p).role == Role::Over ? p : q;
      const Position u = g.at(p).role == Role::Over ? q : p;
      // Positive: (o_in, u_in) -> (o_out, u_out); negative: the same rule read backwards.
      const bool pos = info.sign > 0;
      const int oa = pos ? in_of(o) : out_of(o), ob = pos ? out_of(o) : in_of(o);
      const int ua = pos ? in_of(u) : out_of(u), ub = pos ? out_of(u) : in_of(u);
      auto& r1 = row();
      r1[ob] += 1;
      r1[oa] -= 1;
      auto& r2 = row();
      r2[ub] += 1;
      r2[ua] -= t;
      r2[oa] -= LaurentPoly(1) - t;
    } else {
      const Position pp = g.at(p).cross > 0 ? p : q;
      const Position nn = g.at(p).cross > 0 ? q : p;
      const LaurentPoly s = LaurentPoly::variable(var::s(info.type));
      auto& r1 = row();
      r1[out_of(pp)] += 1;
      r1[in_of(pp)] -= s;
      auto& r2 = row();
      r2[in_of(nn)] += 1;
      r2[out_of(nn)] -= s;
    }
  }
  return m;
}

}  // namespace flatknot
