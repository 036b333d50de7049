#include "flatknot/cover.hpp"

#include "flatknot/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <tuple>

namespace flatknot {

int AnnularCurve::segment_count() const {
  int n = 0;
  for (const auto& comp : components) n += static_cast<int>(comp.size());
  return n;
}

namespace {

const Rational kHalf(1, 2);

Rational frac(const Rational& x) {
  const auto n = boost::multiprecision::numerator(x);
  const auto d = boost::multiprecision::denominator(x);
  boost::multiprecision::cpp_int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return x - Rational(q);
}

// A segment lifted to the universal cover: (a0 + s*da, z0 + s*dz), s in [0,1].
struct Seg {
  int comp;
  int next;  // global index of the following segment
  Rational a0, z0, da, dz;
};

std::vector<Seg> segments(const AnnularCurve& c) {
  std::vector<Seg> segs;
  int base = 0;
  for (int ci = 0; ci < static_cast<int>(c.components.size()); ++ci) {
    const auto& pts = c.components[ci];
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw ValidationError("component " + std::to_string(ci) + " needs at least 3 vertices");
    for (int v = 0; v < n; ++v) {
      const AnnularPoint& p = pts[v];
      const AnnularPoint& q = pts[(v + 1) % n];
      if (p.alpha < 0 || p.alpha >= 1) throw ValidationError("alpha must lie in [0,1)");
      if (p.z <= 0 || p.z >= 1) throw ValidationError("z must lie in (0,1)");
      Rational da = q.alpha - p.alpha;
      if (da > kHalf) da -= 1;
      else if (da < -kHalf) da += 1;
      if (da == kHalf || da == -kHalf)
        throw ValidationError("segment " + std::to_string(base + v) + " spans half a turn; its direction is ambiguous");
      const Rational dz = q.z - p.z;
      if (da == 0 && dz == 0) throw ValidationError("segment " + std::to_string(base + v) + " is degenerate");
      segs.push_back({ci, base + (v + 1) % n, p.alpha, p.z, da, dz});
    }
    base += n;
  }
  return segs;
}

int det_sign(const Seg& x, const Seg& y) {
  const Rational det = x.da * y.dz - x.dz * y.da;
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

std::string seg_pair(int a, int b) { return "segments " + std::to_string(a) + " and " + std::to_string(b); }

// Contact of x with y shifted by h in alpha. Transverse hits and single
// touching points are returned; collinear overlaps throw.
std::optional<std::pair<Rational, Rational>> contact(const Seg& x, int xi, const Seg& y, int yi, const Rational& h) {
  const Rational ex = y.a0 + h - x.a0;
  const Rational ez = y.z0 - x.z0;
  const Rational det = y.da * x.dz - x.da * y.dz;
  if (det != 0) {
    const Rational s = (y.da * ez - ex * y.dz) / det;
    const Rational u = (x.da * ez - x.dz * ex) / det;
    if (s < 0 || s > 1 || u < 0 || u > 1) return std::nullopt;
    return std::pair{s, u};
  }
  if (x.da * ez - x.dz * ex != 0) return std::nullopt;  // parallel, disjoint lines
  // Collinear: express y's endpoints in x's parameter.
  const Rational& dx = x.da != 0 ? x.da : x.dz;
  const Rational e = x.da != 0 ? ex : ez;
  const Rational dy = x.da != 0 ? y.da : y.dz;
  Rational lo = e / dx, hi = (e + dy) / dx;
  if (lo > hi) std::swap(lo, hi);
  const Rational from = std::max(lo, Rational(0)), to = std::min(hi, Rational(1));
  if (from > to) return std::nullopt;
  if (from < to) throw PreconditionError("overlapping collinear pieces on " + seg_pair(xi, yi));
  // A single common point; recover y's parameter.
  const Rational u = (from * dx - e) / dy;
  return std::pair{from, u};
}

bool at_end(const Rational& r) { return r == 0 || r == 1; }

std::vector<SegmentHit> self_hits(const std::vector<Seg>& segs) {
  std::vector<SegmentHit> hits;
  const int n = static_cast<int>(segs.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int m = -1; m <= 1; ++m) {
        auto hit = contact(segs[a], a, segs[b], b, Rational(m));
        if (!hit) continue;
        const auto& [s, u] = *hit;
        if (segs[a].next == b && s == 1 && u == 0) continue;
        if (segs[b].next == a && s == 0 && u == 1) continue;
        if (at_end(s) || at_end(u)) throw PreconditionError("vertex touches another strand at " + seg_pair(a, b));
        const int sg = det_sign(segs[a], segs[b]);
        hits.push_back({a, b, s, u, sg});
      }
  return hits;
}

std::vector<SegmentHit> equivalent_hits(const std::vector<Seg>& segs, int d) {
  if (d < 2) throw ValidationError("d must be >= 2");
  std::vector<SegmentHit> hits;
  const int n = static_cast<int>(segs.size());
  for (int k = 1; 2 * k <= d; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int m = -2; m <= 2; ++m) {
          // Point of a equals point of b turned by k/d.
          auto hit = contact(segs[a], a, segs[b], b, Rational(m) + Rational(k, d));
          if (!hit) continue;
          const auto& [s, u] = *hit;
          if (at_end(s) || at_end(u))
            throw PreconditionError("equivalent points at a vertex on " + seg_pair(a, b) + " (rotation " +
                                  std::to_string(k) + "/" + std::to_string(d) + ")");
          if (2 * k == d && std::pair(a, s) > std::pair(b, u)) continue;
          hits.push_back({a, b, s, u, det_sign(segs[a], segs[b])});
        }
  return hits;
}

// Table row for each geometric self-intersection, checked both ways.
std::vector<int> match_table(const AnnularCurve& c, const std::vector<SegmentHit>& hits) {
  const int n = c.segment_count();
  std::map<std::pair<int, int>, int> row_of;
  for (int r = 0; r < static_cast<int>(c.crossings.size()); ++r) {
    const AnnularCrossing& x = c.crossings[r];
    if (x.i < 0 || x.i >= n || x.j < 0 || x.j >= n || x.i == x.j)
      throw ValidationError("crossing row " + std::to_string(r) + " has bad segment indices");
    if (x.type < 0) throw ValidationError("crossing row " + std::to_string(r) + " has a negative type");
    if (x.type == 0 && x.over != x.i && x.over != x.j)
      throw ValidationError("crossing row " + std::to_string(r) + ": over must be i or j");
    if (x.sign != 1 && x.sign != -1) throw ValidationError("crossing row " + std::to_string(r) + ": sign must be +-1");
    if (!row_of.emplace(std::minmax(x.i, x.j), r).second)
      throw ValidationError("two crossing rows for " + seg_pair(x.i, x.j));
  }
  std::vector<int> rows;
  std::vector<char> used(c.crossings.size(), 0);
  for (const SegmentHit& h : hits) {
    auto it = row_of.find({h.a, h.b});
    if (it == row_of.end()) throw ValidationError("no crossing row for the intersection of " + seg_pair(h.a, h.b));
    const AnnularCrossing& x = c.crossings[it->second];
    int expected;
    if (x.type == 0) expected = x.over == h.a ? h.sign : -h.sign;
    else expected = x.i == h.a ? h.sign : -h.sign;
    if (x.sign != expected)
      throw ValidationError("crossing row " + std::to_string(it->second) + " has the wrong sign for the geometry");
    used[it->second] = 1;
    rows.push_back(it->second);
  }
  for (std::size_t r = 0; r < used.size(); ++r)
    if (!used[r]) throw ValidationError("crossing row " + std::to_string(r) + " matches no intersection");
  return rows;
}

struct Event {
  int seg;
  Rational s;
  Passage p;
};

// Classical-only event order: (segment, table row) along the curve.
std::vector<std::pair<int, int>> classical_pattern(const AnnularCurve& c) {
  const auto segs = segments(c);
  const auto hits = self_hits(segs);
  const auto rows = match_table(c, hits);
  std::vector<std::tuple<int, Rational, int>> ev;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    ev.emplace_back(hits[h].a, hits[h].s, rows[h]);
    ev.emplace_back(hits[h].b, hits[h].u, rows[h]);
  }
  std::sort(ev.begin(), ev.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& [seg, s, row] : ev) out.emplace_back(seg, row);
  return out;
}

}  // namespace

std::vector<SegmentHit> self_intersections(const AnnularCurve& c) { return self_hits(segments(c)); }

std::vector<SegmentHit> equivalent_pairs(const AnnularCurve& c, int d) { return equivalent_hits(segments(c), d); }

void validate_curve(const AnnularCurve& c) { match_table(c, self_intersections(c)); }

GaussCode phi_d_gauss(const AnnularCurve& c, int d, int flat_type) {
  if (flat_type < 1) throw ValidationError("flat type must be >= 1");
  const auto segs = segments(c);
  const auto hits = self_hits(segs);
  const auto rows = match_table(c, hits);
  const auto pairs = equivalent_hits(segs, d);

  std::vector<Event> events;
  int id = 0;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const AnnularCrossing& x = c.crossings[rows[h]];
    const SegmentHit& hit = hits[h];
    ++id;
    if (x.type == 0) {
      const bool a_over = x.over == hit.a;
      events.push_back({hit.a, hit.s, Passage{id, a_over ? Role::Over : Role::Under, 0, hit.sign}});
      events.push_back({hit.b, hit.u, Passage{id, a_over ? Role::Under : Role::Over, 0, -hit.sign}});
    } else {
      events.push_back({hit.a, hit.s, Passage{id, Role::Flat, x.type, hit.sign}});
      events.push_back({hit.b, hit.u, Passage{id, Role::Flat, x.type, -hit.sign}});
    }
  }
  for (const SegmentHit& hit : pairs) {
    ++id;
    events.push_back({hit.a, hit.s, Passage{id, Role::Flat, flat_type, hit.sign}});
    events.push_back({hit.b, hit.u, Passage{id, Role::Flat, flat_type, -hit.sign}});
  }
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
    return std::tie(x.seg, x.s) < std::tie(y.seg, y.s);
  });
  for (std::size_t e = 1; e < events.size(); ++e)
    if (events[e].seg == events[e - 1].seg && events[e].s == events[e - 1].s)
      throw PreconditionError("two double points coincide on segment " + std::to_string(events[e].seg));

  std::vector<Component> comps(c.components.size());
  for (const Event& e : events) comps[segs[e.seg].comp].push_back(e.p);
  return GaussCode(std::move(comps));
}

PlanarCode phi_d(const AnnularCurve& c, int d) {
  for (const auto& x : c.crossings)
    if (x.type != 0) throw ValidationError("phi_d takes classical annular diagrams; use covering_project");
  return gauss_to_planar(phi_d_gauss(c, d, 1));
}

CoverResult covering_project(const AnnularCurve& c, int p, const MoveSystem& ms, const std::vector<int>& ramification) {
  if (!ramification.empty()) throw PreconditionError("branched covers are not supported");
  if (p < 2) throw ValidationError("p must be >= 2");
  ms.validate();
  const int top = ms.max_code_type();
  for (const auto& x : c.crossings)
    if (x.type > top) throw ValidationError("crossing type " + std::to_string(x.type) + " is not in the move system");

  CoverResult res;
  res.new_type = top + 1;
  res.gauss = phi_d_gauss(c, p, res.new_type);
  res.planar = gauss_to_planar(res.gauss);
  res.ms = ms;
  res.ms.k += 1;
  res.ms.d.insert(res.ms.d.begin() + res.new_type, 0);
  res.ms.epsilon.insert(res.ms.epsilon.begin() + res.new_type, p > 2 ? 1 : 0);
  res.ms.validate();
  return res;
}

AnnularCurve perturb(const AnnularCurve& c, int d, std::uint64_t seed, const Rational& eps, int attempts) {
  const auto pattern = classical_pattern(c);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(-1000, 1000);
  Rational size = eps;
  for (int attempt = 0; attempt < attempts; ++attempt, size /= 2) {
    AnnularCurve out = c;
    bool in_range = true;
    for (auto& comp : out.components)
      for (auto& v : comp) {
        v.alpha = frac(v.alpha + size * Rational(step(rng), 1000));
        v.z += size * Rational(step(rng), 1000);
        if (v.z <= 0 || v.z >= 1) in_range = false;
      }
    if (!in_range) continue;
    try {
      if (classical_pattern(out) != pattern) continue;
      phi_d_gauss(out, d);
    } catch (const std::runtime_error&) {
      continue;
    }
    return out;
  }
  throw BudgetError("no admissible perturbation found in " + std::to_string(attempts) + " attempts");
}

AnnularCurve refine(const AnnularCurve& c) {
  const auto segs = segments(c);
  AnnularCurve out;
  int g = 0;
  for (const auto& comp : c.components) {
    std::vector<AnnularPoint> pts;
    for (std::size_t v = 0; v < comp.size(); ++v, ++g) {
      pts.push_back(comp[v]);
      pts.push_back({frac(segs[g].a0 + segs[g].da / 2), segs[g].z0 + segs[g].dz / 2});
    }
    out.components.push_back(std::move(pts));
  }
  std::map<std::pair<int, int>, const AnnularCrossing*> old_row;
  for (const auto& x : c.crossings) old_row[std::minmax(x.i, x.j)] = &x;
  for (const SegmentHit& h : self_intersections(out)) {
    auto it = old_row.find({h.a / 2, h.b / 2});
    if (it == old_row.end()) throw ValidationError("refinement created an intersection missing from the table");
    const AnnularCrossing& x = *it->second;
    AnnularCrossing y = x;
    y.i = x.i == h.a / 2 ? h.a : h.b;
    y.j = x.i == h.a / 2 ? h.b : h.a;
    y.over = x.over == x.i ? y.i : y.j;
    out.crossings.push_back(y);
  }
  return out;
}

}  // namespace flatknot
