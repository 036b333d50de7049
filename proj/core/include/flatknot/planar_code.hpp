#pragma once

#include "flatknot/gauss_code.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace flatknot {

enum class VertexKind : std::uint8_t { Classical, Flat, Virtual };

/// A 4-valent vertex. Half-edges are listed counterclockwise; slots k and k+2
/// belong to the same strand.
struct PlanarVertex {
  VertexKind kind = VertexKind::Virtual;
  int type = 0;                  // flat type (Flat only)
  std::array<int, 4> ccw{};      // half-edge ids
  int over = 0;                  // Classical only: 0 -> slots {0,2} pass over, 1 -> slots {1,3}
  friend bool operator==(const PlanarVertex&, const PlanarVertex&) = default;
};

/// Embedded oriented 4-valent graph. `edges` are directed (tail half-edge,
/// head half-edge) along the strand orientation. Each entry of `components`
/// is a half-edge on that component where traversal starts, or -1 for a
/// vertex-free circle.
struct PlanarCode {
  std::vector<PlanarVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> components;
  friend bool operator==(const PlanarCode&, const PlanarCode&) = default;
};

/// One visit of a traversal to a vertex.
struct PlanarEvent {
  int vertex = 0;
  VertexKind kind = VertexKind::Virtual;
  int type = 0;
  Role role = Role::Flat;  // Over/Under at classical vertices
  int cross = 1;           // same convention as Passage::cross
};

/// Checks slot/edge bookkeeping, strand orientation consistency and the
/// sphere Euler relation V - E + F = 2 per connected piece. Throws ValidationError.
void validate_planar(const PlanarCode& p);

/// Number of faces of the rotation system (all connected pieces together).
int count_faces(const PlanarCode& p);

/// Vertex visits of each component, starting at its marker.
std::vector<std::vector<PlanarEvent>> traverse(const PlanarCode& p);

/// Realizes g in the plane: crossings on a horizontal line, connecting arcs as
/// semicircles above/below it, arc intersections marked virtual.
PlanarCode gauss_to_planar(const GaussCode& g);

/// Reads the components, recording classical and flat passages only.
GaussCode planar_to_gauss(const PlanarCode& p);

int count_vertices(const PlanarCode& p, VertexKind kind);

}  // namespace flatknot
