#pragma once

#include "flatknot/bracket.hpp"
#include "flatknot/cover.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/planar_code.hpp"
#include "flatknot/quandle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace flatknot {

using Json = nlohmann::json;

// Readers throw ParseError for malformed JSON text and ValidationError for
// well-formed JSON with missing or mistyped fields.

Json parse_json_text(const std::string& text);

Json planar_to_json(const PlanarCode& p);
PlanarCode planar_from_json(const Json& j);

Json biquandle_to_json(const FiniteKFlatBiquandle& b);
FiniteKFlatBiquandle biquandle_from_json(const Json& j);

/// {components: [[[alpha_num, alpha_den, z_num, z_den], ...]], crossings: [{i, j, over, sign[, type]}]}
Json annular_to_json(const AnnularCurve& c);
AnnularCurve annular_from_json(const Json& j);

/// [{key, coeff, saturated}] sorted by key.
Json bracket_to_json(const BracketValue& b);

struct MoveLog {
  GaussCode start;
  MoveSystem ms;
  std::vector<MoveSite> moves;
};

Json move_log_to_json(const MoveLog& log);
MoveLog move_log_from_json(const Json& j);

}  // namespace flatknot
