#include "flatknot/alexander.hpp"

#include "flatknot/errors.hpp"

#include <algorithm>
#include <optional>

namespace flatknot {

ArcPresentation arc_presentation(const std::vector<std::vector<ArcEvent>>& components,
                                 const std::vector<int>& writhe_sign, bool auto_kink) {
  ArcPresentation res;
  std::vector<int> sign = writhe_sign;
  std::vector<std::vector<ArcEvent>> comps = components;

  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    auto& ev = comps[c];
    const bool has_under =
        std::any_of(ev.begin(), ev.end(), [](const ArcEvent& e) { return e.what == ArcEvent::What::Under; });
    if (has_under) continue;
    if (!auto_kink) throw PreconditionError("component " + std::to_string(c) + " has no classical underpass");
    const int m = static_cast<int>(sign.size());
    sign.push_back(1);
    ev.insert(ev.begin(), {ArcEvent{ArcEvent::What::Over, m, {}}, ArcEvent{ArcEvent::What::Under, m, {}}});
    res.auto_kinked.push_back(c);
  }

  const int n = static_cast<int>(sign.size());
  if (n == 0) throw PreconditionError("no classical crossings: the polynomial is undefined");

  struct Arrival {
    int arc;
    Monomial label;
  };
  std::vector<std::optional<Arrival>> incoming(n), overpass(n);

  for (const auto& ev : comps) {
    const int len = static_cast<int>(ev.size());
    int start = 0;
    while (ev[start].what != ArcEvent::What::Under) ++start;
    int arc = ev[start].crossing;
    Monomial label;
    for (int step = 1; step <= len; ++step) {
      const ArcEvent& e = ev[(start + step) % len];
      switch (e.what) {
        case ArcEvent::What::Factor: label = label * e.factor; break;
        case ArcEvent::What::Over:
          if (overpass.at(e.crossing)) throw ValidationError("crossing passed over twice");
          overpass[e.crossing] = Arrival{arc, label};
          break;
        case ArcEvent::What::Under:
          if (incoming.at(e.crossing)) throw ValidationError("crossing passed under twice");
          incoming[e.crossing] = Arrival{arc, label};
          arc = e.crossing;
          label = Monomial();
          break;
      }
    }
  }

  res.matrix.assign(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) {
    if (!incoming[i] || !overpass[i]) throw ValidationError("classical crossing without both passages");
    const LaurentPoly tw = LaurentPoly::variable(var::t, sign[i]);
    res.matrix[i][i] -= 1;
    res.matrix[i][incoming[i]->arc] += LaurentPoly(incoming[i]->label) * tw;
    res.matrix[i][overpass[i]->arc] += LaurentPoly(overpass[i]->label) * (LaurentPoly(1) - tw);
  }
  return res;
}

ArcPresentation build_alexander_matrix(const PlanarCode& p, bool auto_kink) {
  validate_planar(p);
  std::vector<int> index(p.vertices.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    if (p.vertices[v].kind == VertexKind::Classical) index[v] = n++;
  std::vector<int> sign(n, 1);

  std::vector<std::vector<ArcEvent>> comps;
  for (const auto& events : traverse(p)) {
    std::vector<ArcEvent> out;
    for (const auto& e : events) {
      switch (e.kind) {
        case VertexKind::Classical:
          if (e.role == Role::Over) sign[index[e.vertex]] = e.cross;
          out.push_back({e.role == Role::Over ? ArcEvent::What::Over : ArcEvent::What::Under, index[e.vertex], {}});
          break;
        case VertexKind::Flat:
          if (e.type != 1) throw ValidationError("flat crossings of type " + std::to_string(e.type) +
                                                 " are outside the flat-virtual theory");
          out.push_back({ArcEvent::What::Factor, 0, Monomial::of(var::u, e.cross)});
          break;
        case VertexKind::Virtual:
          out.push_back({ArcEvent::What::Factor, 0, Monomial::of(var::v, e.cross)});
          break;
      }
    }
    comps.push_back(std::move(out));
  }
  return arc_presentation(comps, sign, auto_kink);
}

AlexanderResult alexander_delta(const PlanarCode& p, bool auto_kink) {
  auto pres = build_alexander_matrix(p, auto_kink);
  AlexanderResult res;
  res.delta = lp_similar_normalize(lp_det(std::move(pres.matrix)), unit_variables({"t", "u", "v"}));
  res.auto_kinked = std::move(pres.auto_kinked);
  return res;
}

AlexanderResult alexander_delta(const GaussCode& g, bool auto_kink) {
  return alexander_delta(gauss_to_planar(g), auto_kink);
}

NonclassicalityCertificate nonclassicality_check(const PlanarCode& p, bool auto_kink) {
  NonclassicalityCertificate cert;
  cert.delta = alexander_delta(p, auto_kink).delta;
  cert.nonclassical = !cert.delta.is_zero();
  return cert;
}

}  // namespace flatknot
