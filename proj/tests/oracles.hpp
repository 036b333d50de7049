// Independent reference computations for the test suites. Nothing here calls
// the library algorithm it is compared against.
#pragma once

#include "flatknot/gauss_code.hpp"
#include "flatknot/laurent.hpp"
#include "flatknot/quandle.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#ifndef FLATKNOT_FIXTURE_DIR
#error "FLATKNOT_FIXTURE_DIR must be defined"
#endif

namespace oracle {

inline std::string fixture_path(const std::string& rel) { return std::string(FLATKNOT_FIXTURE_DIR) + "/" + rel; }

inline std::string read_fixture(const std::string& rel) {
  std::ifstream in(fixture_path(rel));
  if (!in) throw std::runtime_error("missing fixture " + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

// Univariate Laurent polynomial: exponent -> coefficient.
using Poly1 = std::map<int, long long>;

inline void add_to(Poly1& p, const Poly1& q, long long scale = 1, int shift = 0) {
  for (const auto& [e, c] : q) {
    long long& slot = p[e + shift];
    slot += scale * c;
    if (slot == 0) p.erase(e + shift);
  }
}

inline Poly1 mul(const Poly1& p, const Poly1& q) {
  Poly1 r;
  for (const auto& [e, c] : p) add_to(r, q, c, e);
  return r;
}

inline flatknot::LaurentPoly to_laurent(const Poly1& p, const std::string& var) {
  flatknot::LaurentPoly r;
  for (const auto& [e, c] : p) r += flatknot::LaurentPoly::variable(var, e) * flatknot::LaurentPoly(c);
  return r;
}

// Crossing of a classical diagram with edge labels counterclockwise from the
// incoming under edge.
using PD = std::vector<std::array<int, 4>>;

// Edge e of component c starts right after passage e. Labels are global.
inline PD planar_diagram(const flatknot::GaussCode& g, int* edge_count = nullptr) {
  using flatknot::Role;
  std::vector<int> base;
  int total = 0;
  for (const auto& comp : g.components()) {
    base.push_back(total);
    total += static_cast<int>(comp.size());
  }
  if (edge_count) *edge_count = total;
  struct Ends { int in = -1, out = -1; };
  std::map<int, std::pair<Ends, Ends>> at;  // id -> (over, under)
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    const auto& comp = g.components()[c];
    const int n = static_cast<int>(comp.size());
    for (int i = 0; i < n; ++i) {
      const auto& p = comp[i];
      if (p.role == Role::Flat) throw std::runtime_error("oracle takes classical diagrams only");
      Ends& e = p.role == Role::Over ? at[p.id].first : at[p.id].second;
      e.in = base[c] + (i + n - 1) % n;
      e.out = base[c] + i;
    }
  }
  PD pd;
  for (const auto& [id, ends] : at) {
    const auto& [over, under] = ends;
    if (g.crossing(id).sign > 0) pd.push_back({under.in, over.out, under.out, over.in});
    else pd.push_back({under.in, over.in, under.out, over.out});
  }
  return pd;
}

inline int count_loops(int edges, const std::vector<std::pair<int, int>>& joins) {
  std::vector<int> parent(edges);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int loops = edges;
  for (const auto& [a, b] : joins) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --loops;
    }
  }
  return loops;
}

// Skein recursion <X> = A <A-smoothing> + A^-1 <B-smoothing>, <O^m> = delta^(m-1).
// The A-smoothing of [a,b,c,d] joins a-b and c-d.
inline Poly1 kauffman_bracket(const flatknot::GaussCode& g) {
  int edges = 0;
  const PD pd = planar_diagram(g, &edges);
  const Poly1 delta{{2, -1}, {-2, -1}};
  std::vector<std::pair<int, int>> joins;
  std::function<Poly1(std::size_t, int)> rec = [&](std::size_t i, int a_power) -> Poly1 {
    if (i == pd.size()) {
      const int loops = count_loops(edges, joins);
      Poly1 r{{a_power, 1}};
      for (int k = 1; k < loops; ++k) r = mul(r, delta);
      return r;
    }
    const auto& x = pd[i];
    Poly1 total;
    joins.push_back({x[0], x[1]});
    joins.push_back({x[2], x[3]});
    add_to(total, rec(i + 1, a_power + 1));
    joins.resize(joins.size() - 2);
    joins.push_back({x[0], x[3]});
    joins.push_back({x[1], x[2]});
    add_to(total, rec(i + 1, a_power - 1));
    joins.resize(joins.size() - 2);
    return total;
  };
  if (edges == 0) return {{0, 1}};
  return rec(0, 0);
}

// Laplace expansion along the first row.
inline flatknot::LaurentPoly cofactor_det(const std::vector<std::vector<flatknot::LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return flatknot::LaurentPoly(1);
  if (n == 1) return m[0][0];
  flatknot::LaurentPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<flatknot::LaurentPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<flatknot::LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const flatknot::LaurentPoly term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

// Fox-calculus Alexander matrix over long arcs, first row and column deleted.
inline flatknot::LaurentPoly classical_alexander(const flatknot::GaussCode& g) {
  using flatknot::LaurentPoly;
  using flatknot::Role;
  std::map<std::pair<int, int>, int> arc_of;  // (component, passage index) -> arc
  int arcs = 0;
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    const auto& comp = g.components()[c];
    int first_under = -1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (comp[i].role == Role::Under) { first_under = static_cast<int>(i); break; }
    if (first_under < 0) throw std::runtime_error("component without underpass");
    const int n = static_cast<int>(comp.size());
    for (int k = 0; k < n; ++k) {
      const int i = (first_under + k) % n;
      if (comp[i].role == Role::Under) ++arcs;
      arc_of[{static_cast<int>(c), i}] = arcs - 1;  // arc leaving passage i
    }
  }
  std::map<int, std::array<int, 3>> rel;  // id -> over arc, under in, under out
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    const auto& comp = g.components()[c];
    const int n = static_cast<int>(comp.size());
    for (int i = 0; i < n; ++i) {
      const int id = comp[i].id;
      if (comp[i].role == Role::Over) rel[id][0] = arc_of[{static_cast<int>(c), i}];
      else {
        rel[id][1] = arc_of[{static_cast<int>(c), (i + n - 1) % n}];
        rel[id][2] = arc_of[{static_cast<int>(c), i}];
      }
    }
  }
  const LaurentPoly t = LaurentPoly::variable("t");
  std::vector<std::vector<LaurentPoly>> m(rel.size(), std::vector<LaurentPoly>(arcs));
  std::size_t row = 0;
  for (const auto& [id, r] : rel) {
    const bool pos = g.crossing(id).sign > 0;
    m[row][r[0]] += LaurentPoly(1) - t;
    m[row][r[1]] += pos ? t : LaurentPoly(-1);
    m[row][r[2]] += pos ? LaurentPoly(-1) : t;
    ++row;
  }
  std::vector<std::vector<LaurentPoly>> minor;
  for (std::size_t r = 1; r < m.size(); ++r) minor.emplace_back(m[r].begin() + 1, m[r].end());
  return cofactor_det(minor);
}

// Fox n-colourings: labels on long arcs with 2*over = in + out mod n.
inline long long fox_colorings(const flatknot::GaussCode& g, int n) {
  using flatknot::Role;
  std::vector<std::array<int, 3>> rels;
  std::map<std::pair<int, int>, int> arc_of;
  int arcs = 0;
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    const auto& comp = g.components()[c];
    const int len = static_cast<int>(comp.size());
    int start = 0;
    while (start < len && comp[start].role != Role::Under) ++start;
    if (start == len) { ++arcs; continue; }  // free component: one arc, no relation on it
    for (int k = 0; k < len; ++k) {
      const int i = (start + k) % len;
      if (comp[i].role == Role::Under) ++arcs;
      arc_of[{static_cast<int>(c), i}] = arcs - 1;
    }
  }
  std::map<int, std::array<int, 3>> rel;
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    const auto& comp = g.components()[c];
    const int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      const int id = comp[i].id;
      if (comp[i].role == Role::Over) rel[id][0] = arc_of.at({static_cast<int>(c), i});
      else {
        rel[id][1] = arc_of.at({static_cast<int>(c), (i + len - 1) % len});
        rel[id][2] = arc_of.at({static_cast<int>(c), i});
      }
    }
  }
  for (const auto& [id, r] : rel) rels.push_back(r);
  long long count = 0;
  std::vector<int> label(arcs, 0);
  for (;;) {
    bool ok = true;
    for (const auto& r : rels)
      if (((2 * label[r[0]] - label[r[1]] - label[r[2]]) % n + n) % n != 0) { ok = false; break; }
    if (ok) ++count;
    int k = 0;
    while (k < arcs && ++label[k] == n) label[k++] = 0;
    if (k == arcs) break;
  }
  return count;
}

// Random dense Laurent matrix in t, u with small coefficients.
template <class Rng>
std::vector<std::vector<flatknot::LaurentPoly>> random_matrix(Rng& rng, int n) {
  using flatknot::LaurentPoly;
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), terms(0, 3);
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (auto& row : m)
    for (auto& x : row)
      for (int k = terms(rng); k > 0; --k)
        x += LaurentPoly(coeff(rng)) * LaurentPoly::variable("t", expo(rng)) * LaurentPoly::variable("u", expo(rng));
  return m;
}

}  // namespace oracle
