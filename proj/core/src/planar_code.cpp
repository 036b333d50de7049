#include "flatknot/planar_code.hpp"

#include "flatknot/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

namespace flatknot {

namespace {

struct Slot {
  int vertex;
  int slot;
};

struct Index {
  std::unordered_map<int, Slot> where;   // half-edge -> vertex slot
  std::unordered_map<int, int> next;     // tail -> head
  std::unordered_map<int, int> partner;  // both directions
  std::unordered_map<int, bool> is_head;
};

Index build_index(const PlanarCode& p) {
  Index ix;
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v)
    for (int k = 0; k < 4; ++k) {
      const int h = p.vertices[v].ccw[k];
      if (!ix.where.emplace(h, Slot{v, k}).second)
        throw ValidationError("half-edge " + std::to_string(h) + " occupies two vertex slots");
    }
  for (const auto& [tail, head] : p.edges) {
    if (!ix.where.count(tail) || !ix.where.count(head))
      throw ValidationError("edge references an unknown half-edge");
    if (ix.partner.count(tail) || ix.partner.count(head) || tail == head)
      throw ValidationError("half-edge used by more than one edge");
    ix.next[tail] = head;
    ix.partner[tail] = head;
    ix.partner[head] = tail;
    ix.is_head[tail] = false;
    ix.is_head[head] = true;
  }
  if (ix.partner.size() != ix.where.size()) throw ValidationError("some half-edge is not on an edge");
  return ix;
}

PlanarEvent event_at(const PlanarCode& p, const Index& ix, int vertex, int in_slot) {
  const PlanarVertex& pv = p.vertices[vertex];
  PlanarEvent e;
  e.vertex = vertex;
  e.kind = pv.kind;
  e.type = pv.type;
  const int left = (in_slot + 1) % 4;
  e.cross = ix.is_head.at(pv.ccw[left]) ? 1 : -1;
  if (pv.kind == VertexKind::Classical) e.role = (in_slot % 2) == pv.over ? Role::Over : Role::Under;
  return e;
}

}  // namespace

int count_faces(const PlanarCode& p) {
  const Index ix = build_index(p);
  std::unordered_map<int, bool> used;
  int faces = 0;
  for (const auto& [h, s] : ix.where) {
    if (used[h]) continue;
    ++faces;
    int cur = h;
    while (!used[cur]) {
      used[cur] = true;
      const int other = ix.partner.at(cur);
      const Slot os = ix.where.at(other);
      cur = p.vertices[os.vertex].ccw[(os.slot + 1) % 4];
    }
  }
  return faces;
}

void validate_planar(const PlanarCode& p) {
  const Index ix = build_index(p);
  for (const auto& v : p.vertices) {
    for (int k = 0; k < 2; ++k)
      if (ix.is_head.at(v.ccw[k]) == ix.is_head.at(v.ccw[k + 2]))
        throw ValidationError("a strand through a vertex must enter once and leave once");
    if (v.kind == VertexKind::Classical && v.over != 0 && v.over != 1)
      throw ValidationError("classical vertex 'over' must be 0 or 1");
    if (v.kind == VertexKind::Flat && v.type < 1) throw ValidationError("flat vertex type must be >= 1");
  }

  // Every strand segment belongs to exactly one listed component.
  std::unordered_map<int, int> owner;
  for (int c = 0; c < static_cast<int>(p.components.size()); ++c) {
    const int start = p.components[c];
    if (start < 0) continue;
    if (!ix.is_head.count(start) || !ix.is_head.at(start))
      throw ValidationError("component start must be an incoming half-edge");
    int h = start;
    do {
      if (owner.count(h)) throw ValidationError("two components share a strand");
      owner[h] = c;
      const Slot s = ix.where.at(h);
      h = ix.next.at(p.vertices[s.vertex].ccw[(s.slot + 2) % 4]);
    } while (h != start);
  }
  for (const auto& [h, head] : ix.is_head)
    if (head && !owner.count(h)) throw ValidationError("a strand is not covered by any component");

  // Euler characteristic per connected piece.
  const int n = static_cast<int>(p.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [tail, head] : p.edges) parent[find(ix.where.at(tail).vertex)] = find(ix.where.at(head).vertex);
  int pieces = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++pieces;
  const int chi = n - static_cast<int>(p.edges.size()) + count_faces(p);
  if (chi != 2 * pieces)
    throw ValidationError("rotation system is not a sphere embedding (V - E + F = " + std::to_string(chi) + ")");
}

std::vector<std::vector<PlanarEvent>> traverse(const PlanarCode& p) {
  const Index ix = build_index(p);
  std::vector<std::vector<PlanarEvent>> out;
  for (int start : p.components) {
    std::vector<PlanarEvent> comp;
    if (start >= 0) {
      int h = start;
      std::size_t guard = 0;
      do {
        const Slot s = ix.where.at(h);
        comp.push_back(event_at(p, ix, s.vertex, s.slot));
        h = ix.next.at(p.vertices[s.vertex].ccw[(s.slot + 2) % 4]);
        if (++guard > ix.where.size()) throw ValidationError("component traversal does not close");
      } while (h != start);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

GaussCode planar_to_gauss(const PlanarCode& p) {
  std::vector<Component> comps;
  for (const auto& events : traverse(p)) {
    Component c;
    for (const auto& e : events) {
      if (e.kind == VertexKind::Virtual) continue;
      Passage q;
      q.id = e.vertex + 1;
      q.role = e.kind == VertexKind::Classical ? e.role : Role::Flat;
      q.type = e.kind == VertexKind::Classical ? 0 : e.type;
      q.cross = e.cross;
      c.push_back(q);
    }
    comps.push_back(std::move(c));
  }
  if (comps.empty()) comps.emplace_back();
  return GaussCode(std::move(comps));
}

int count_vertices(const PlanarCode& p, VertexKind kind) {
  return static_cast<int>(
      std::count_if(p.vertices.begin(), p.vertices.end(), [kind](const auto& v) { return v.kind == kind; }));
}

// ------------------------------------------------------------------ routing

namespace {

// Real crossing c sits at x = 256*4c. Slots: 0 NE (upper, right), 1 NW (upper, left),
// 2 SW (lower, left), 3 SE (lower, right). The salt shifts every endpoint by a
// small amount so that no three semicircles pass through one point.
long long jitter(long long key, int salt) {
  if (salt == 0) return 0;
  std::uint64_t h = static_cast<std::uint64_t>(key) * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(salt) * 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 31;
  h *= 0x94D049BB133111EBULL;
  h ^= h >> 29;
  return static_cast<long long>(h % 61) - 30;
}
long long port_x(int vertex, int slot, int salt) {
  return 256LL * (4LL * vertex + ((slot == 0 || slot == 3) ? 1 : -1)) + jitter(4LL * vertex + slot, salt);
}
bool port_upper(int slot) { return slot == 0 || slot == 1; }

struct Piece {
  long long from, to;
  bool upper;
  int arc;
  long long lo() const { return std::min(from, to); }
  long long hi() const { return std::max(from, to); }
  int dir() const { return to > from ? 1 : -1; }
};

struct Hit {
  // intersection abscissa num/den with den > 0
  long long num, den;
  int vertex;
  bool first;  // this piece plays strand 1 (slots 0/2) at the virtual vertex
};

bool hit_before(const Hit& a, const Hit& b) {
  return a.num * b.den < b.num * a.den;
}

PlanarCode route_semicircles(const GaussCode& g, PlanarCode out, const std::vector<std::array<int, 2>>& in_slot,
                             const std::vector<std::array<int, 2>>& out_slot, int salt);

}  // namespace

PlanarCode gauss_to_planar(const GaussCode& g) {
  PlanarCode out;
  const int n = g.crossing_count();
  out.vertices.resize(n);

  // Slot assignment: first passage of each crossing enters SW and leaves NE.
  std::vector<std::array<int, 2>> in_slot(n), out_slot(n);  // [passage order]
  for (int id = 1; id <= n; ++id) {
    const auto [p0, p1] = g.locate(id);
    const Passage& first = g.at(p0);
    PlanarVertex& v = out.vertices[id - 1];
    v.kind = g.crossing(id).type == 0 ? VertexKind::Classical : VertexKind::Flat;
    v.type = g.crossing(id).type;
    for (int k = 0; k < 4; ++k) v.ccw[k] = 4 * (id - 1) + k;
    in_slot[id - 1] = {2, first.cross > 0 ? 3 : 1};
    out_slot[id - 1] = {0, first.cross > 0 ? 1 : 3};
    if (v.kind == VertexKind::Classical) v.over = first.role == Role::Over ? 0 : 1;
  }
  auto which = [&](Position pos) {
    const auto [p0, p1] = g.locate(g.at(pos).id);
    return pos == p0 ? 0 : 1;
  };

  // The cross bits fix the rotation at every vertex; when that embedding is
  // spherical no routing is needed.
  {
    PlanarCode direct = out;
    for (int c = 0; c < g.num_components(); ++c) {
      const auto& comp = g.components()[c];
      const int m = static_cast<int>(comp.size());
      if (m == 0) {
        direct.components.push_back(-1);
        continue;
      }
      const int v0 = comp[0].id - 1;
      direct.components.push_back(4 * v0 + in_slot[v0][which({c, 0})]);
      for (int i = 0; i < m; ++i) {
        const int va = comp[i].id - 1, vb = comp[(i + 1) % m].id - 1;
        direct.edges.emplace_back(4 * va + out_slot[va][which({c, i})],
                                  4 * vb + in_slot[vb][which({c, (i + 1) % m})]);
      }
    }
    try {
      validate_planar(direct);
      return direct;
    } catch (const ValidationError&) {
    }
  }

  for (int salt = 0; salt < 32; ++salt) {
    PlanarCode routed = route_semicircles(g, out, in_slot, out_slot, salt);
    try {
      validate_planar(routed);
      return routed;
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError("semicircle routing failed to produce a planar code");
}

namespace {

PlanarCode route_semicircles(const GaussCode& g, PlanarCode out, const std::vector<std::array<int, 2>>& in_slot,
                             const std::vector<std::array<int, 2>>& out_slot, int salt) {
  const int n = g.crossing_count();
  auto which = [&](Position pos) {
    const auto [p0, p1] = g.locate(g.at(pos).id);
    return pos == p0 ? 0 : 1;
  };
  // Arcs between consecutive passages, as one or two semicircle pieces.
  struct Arc {
    int tail, head;
    std::vector<int> pieces;
  };
  std::vector<Arc> arcs;
  std::vector<Piece> pieces;
  long long far_index = 4LL * n + 2;
  for (int c = 0; c < g.num_components(); ++c) {
    const auto& comp = g.components()[c];
    const int m = static_cast<int>(comp.size());
    if (m == 0) {
      out.components.push_back(-1);
      continue;
    }
    const int v0 = comp[0].id - 1;
    out.components.push_back(4 * v0 + in_slot[v0][which({c, 0})]);
    for (int i = 0; i < m; ++i) {
      const int va = comp[i].id - 1, vb = comp[(i + 1) % m].id - 1;
      const int sa = out_slot[va][which({c, i})];
      const int sb = in_slot[vb][which({c, (i + 1) % m})];
      Arc arc{4 * va + sa, 4 * vb + sb, {}};
      const int arc_id = static_cast<int>(arcs.size());
      const long long xa = port_x(va, sa, salt), xb = port_x(vb, sb, salt);
      if (port_upper(sa) == port_upper(sb)) {
        arc.pieces.push_back(static_cast<int>(pieces.size()));
        pieces.push_back({xa, xb, port_upper(sa), arc_id});
      } else {
        arc.pieces.push_back(static_cast<int>(pieces.size()));
        const long long far_x = 256 * far_index + jitter(-far_index, salt);
        pieces.push_back({xa, far_x, port_upper(sa), arc_id});
        arc.pieces.push_back(static_cast<int>(pieces.size()));
        pieces.push_back({far_x, xb, port_upper(sb), arc_id});
        far_index += 2;
      }
      arcs.push_back(std::move(arc));
    }
  }

  // Pairwise intersections of same-side semicircles become virtual vertices.
  std::vector<std::vector<Hit>> hits(pieces.size());
  std::vector<int> strand1_cross(out.vertices.size(), 0);
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece& P = pieces[i];
      const Piece& Q = pieces[j];
      if (P.upper != Q.upper) continue;
      const long long a = P.lo(), b = P.hi(), c = Q.lo(), d = Q.hi();
      const bool interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
      if (!interleave) continue;
      long long num = c * d - a * b;
      long long den = (c + d) - (a + b);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      const long long centre_sign = ((c + d) - (a + b)) > 0 ? 1 : -1;
      const int cross_p = static_cast<int>(P.dir() * Q.dir() * centre_sign * (P.upper ? 1 : -1));
      const int w = static_cast<int>(out.vertices.size());
      PlanarVertex vv;
      vv.kind = VertexKind::Virtual;
      for (int k = 0; k < 4; ++k) vv.ccw[k] = 4 * w + k;
      out.vertices.push_back(vv);
      // P is strand 1: in at slot 2, out at slot 0; Q in/out at slots 3/1 or 1/3.
      hits[i].push_back({num, den, w, true});
      hits[j].push_back({num, den, w, false});
      strand1_cross.push_back(cross_p);
    }

  for (auto& arc : arcs) {
    int tail = arc.tail;
    for (int pi : arc.pieces) {
      auto& hs = hits[pi];
      std::sort(hs.begin(), hs.end(), hit_before);
      if (pieces[pi].dir() < 0) std::reverse(hs.begin(), hs.end());
      for (const Hit& h : hs) {
        const int cross_p = strand1_cross[h.vertex];
        int in, outs;
        if (h.first) {
          in = 2;
          outs = 0;
        } else {
          in = cross_p > 0 ? 3 : 1;
          outs = cross_p > 0 ? 1 : 3;
        }
        out.edges.emplace_back(tail, 4 * h.vertex + in);
        tail = 4 * h.vertex + outs;
      }
    }
    out.edges.emplace_back(tail, arc.head);
  }
  return out;
}

}  // namespace

}  // namespace flatknot
