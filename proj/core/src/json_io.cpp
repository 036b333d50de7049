#include "flatknot/json_io.hpp"

#include "flatknot/errors.hpp"

namespace flatknot {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string("field '") + what + "' must be an integer");
  return j.get<int>();
}

int int_field(const Json& j, const char* name) { return as_int(field(j, name), name); }

int int_field_or(const Json& j, const char* name, int fallback) {
  return j.is_object() && j.contains(name) ? as_int(j.at(name), name) : fallback;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw ValidationError(std::string("field '") + name + "' must be an array");
  return a;
}

OpTable table_from(const Json& j, const char* name) {
  if (!j.is_array()) throw ValidationError(std::string("table '") + name + "' must be an array of rows");
  OpTable t;
  for (const Json& row : j) {
    if (!row.is_array()) throw ValidationError(std::string("table '") + name + "' must be an array of rows");
    std::vector<int> r;
    for (const Json& x : row) r.push_back(as_int(x, name));
    t.push_back(std::move(r));
  }
  return t;
}

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Classical: return "classical";
    case VertexKind::Flat: return "flat";
    case VertexKind::Virtual: return "virtual";
  }
  return "virtual";
}

VertexKind kind_from(const std::string& s) {
  if (s == "classical") return VertexKind::Classical;
  if (s == "flat") return VertexKind::Flat;
  if (s == "virtual") return VertexKind::Virtual;
  throw ValidationError("unknown vertex kind '" + s + "'");
}

Rational rational_from(const Json& num, const Json& den) {
  const int d = as_int(den, "denominator");
  if (d == 0) throw ValidationError("zero denominator");
  return Rational(as_int(num, "numerator"), d);
}

Json rational_pair(const Rational& r) {
  return {static_cast<long long>(boost::multiprecision::numerator(r)),
          static_cast<long long>(boost::multiprecision::denominator(r))};
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Json planar_to_json(const PlanarCode& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json jv{{"kind", kind_name(v.kind)}, {"ccw", v.ccw}};
    if (v.kind == VertexKind::Flat) jv["type"] = v.type;
    if (v.kind == VertexKind::Classical) jv["over"] = v.over;
    verts.push_back(std::move(jv));
  }
  Json edges = Json::array();
  for (const auto& [tail, head] : p.edges) edges.push_back({tail, head});
  return {{"vertices", verts}, {"edges", edges}, {"components", p.components}};
}

PlanarCode planar_from_json(const Json& j) {
  PlanarCode p;
  for (const Json& jv : array_field(j, "vertices")) {
    PlanarVertex v;
    const Json& kind = field(jv, "kind");
    if (!kind.is_string()) throw ValidationError("field 'kind' must be a string");
    v.kind = kind_from(kind.get<std::string>());
    const Json& ccw = array_field(jv, "ccw");
    if (ccw.size() != 4) throw ValidationError("field 'ccw' must list 4 half-edges");
    for (int s = 0; s < 4; ++s) v.ccw[s] = as_int(ccw[s], "ccw");
    v.type = v.kind == VertexKind::Flat ? int_field_or(jv, "type", 1) : 0;
    v.over = v.kind == VertexKind::Classical ? int_field(jv, "over") : 0;
    p.vertices.push_back(v);
  }
  for (const Json& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("each edge must be [tail, head]");
    p.edges.emplace_back(as_int(e[0], "edges"), as_int(e[1], "edges"));
  }
  for (const Json& c : array_field(j, "components")) p.components.push_back(as_int(c, "components"));
  validate_planar(p);
  return p;
}

Json biquandle_to_json(const FiniteKFlatBiquandle& b) {
  return {{"n", b.n}, {"k", b.k}, {"under0", b.under0}, {"over0", b.over0}, {"star", b.star}};
}

FiniteKFlatBiquandle biquandle_from_json(const Json& j) {
  FiniteKFlatBiquandle b;
  b.n = int_field(j, "n");
  b.k = int_field(j, "k");
  b.under0 = table_from(field(j, "under0"), "under0");
  b.over0 = table_from(field(j, "over0"), "over0");
  if (j.contains("star")) {
    const Json& star = array_field(j, "star");
    for (const Json& t : star) b.star.push_back(table_from(t, "star"));
  }
  validate_tables(b);
  return b;
}

Json annular_to_json(const AnnularCurve& c) {
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json pts = Json::array();
    for (const auto& v : comp) {
      const Json a = rational_pair(v.alpha), z = rational_pair(v.z);
      pts.push_back({a[0], a[1], z[0], z[1]});
    }
    comps.push_back(std::move(pts));
  }
  Json rows = Json::array();
  for (const auto& x : c.crossings) {
    Json r{{"i", x.i}, {"j", x.j}, {"over", x.over}, {"sign", x.sign}};
    if (x.type != 0) r["type"] = x.type;
    rows.push_back(std::move(r));
  }
  return {{"components", comps}, {"crossings", rows}};
}

AnnularCurve annular_from_json(const Json& j) {
  AnnularCurve c;
  for (const Json& comp : array_field(j, "components")) {
    if (!comp.is_array()) throw ValidationError("each component must be an array of vertices");
    std::vector<AnnularPoint> pts;
    for (const Json& v : comp) {
      if (!v.is_array() || v.size() != 4)
        throw ValidationError("each vertex must be [alpha_num, alpha_den, z_num, z_den]");
      pts.push_back({rational_from(v[0], v[1]), rational_from(v[2], v[3])});
    }
    c.components.push_back(std::move(pts));
  }
  if (j.contains("crossings"))
    for (const Json& r : array_field(j, "crossings")) {
      AnnularCrossing x;
      x.i = int_field(r, "i");
      x.j = int_field(r, "j");
      x.type = int_field_or(r, "type", 0);
      x.over = x.type == 0 ? int_field(r, "over") : int_field_or(r, "over", x.i);
      x.sign = int_field(r, "sign");
      c.crossings.push_back(x);
    }
  return c;
}

Json bracket_to_json(const BracketValue& b) {
  Json out = Json::array();
  for (const auto& [key, term] : b.terms)
    out.push_back({{"key", key}, {"coeff", term.coeff.to_string()}, {"saturated", term.saturated}});
  return out;
}

Json move_log_to_json(const MoveLog& log) {
  Json moves = Json::array();
  for (const MoveSite& m : log.moves) {
    Json pos = Json::array();
    for (const Position& p : m.positions) pos.push_back({p.comp, p.index});
    moves.push_back({{"kind", to_string(m.kind)},
                     {"type", m.type},
                     {"count", m.count},
                     {"positions", pos},
                     {"reverse", m.reverse},
                     {"first_over", m.first_over},
                     {"cross", m.cross}});
  }
  return {{"start", log.start.to_string()}, {"move_system", log.ms.to_string()}, {"moves", moves}};
}

MoveLog move_log_from_json(const Json& j) {
  MoveLog log;
  const Json& start = field(j, "start");
  const Json& ms = field(j, "move_system");
  if (!start.is_string() || !ms.is_string()) throw ValidationError("'start' and 'move_system' must be strings");
  log.start = parse_gauss(start.get<std::string>());
  log.ms = MoveSystem::parse(ms.get<std::string>());
  for (const Json& m : array_field(j, "moves")) {
    MoveSite site;
    const Json& kind = field(m, "kind");
    if (!kind.is_string()) throw ValidationError("field 'kind' must be a string");
    site.kind = move_kind_from_string(kind.get<std::string>());
    site.type = int_field(m, "type");
    site.count = int_field_or(m, "count", 1);
    for (const Json& p : array_field(m, "positions")) {
      if (!p.is_array() || p.size() != 2) throw ValidationError("each position must be [component, index]");
      site.positions.push_back({as_int(p[0], "positions"), as_int(p[1], "positions")});
    }
    site.reverse = m.value("reverse", false);
    site.first_over = m.value("first_over", true);
    site.cross = int_field_or(m, "cross", 1);
    log.moves.push_back(std::move(site));
  }
  return log;
}

}  // namespace flatknot
