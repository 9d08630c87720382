#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxicab/cone_model.hpp"
#include "taxicab/exact_geometry.hpp"

namespace taxicab {

enum class ConicClass { kEllipse, kParabola, kHyperbola };
const char* to_string(ConicClass c);

inline constexpr const char* kTransitionalWarning = "TransitionalWarning";

struct Vertex {
  int ref_index;  // 1, 2, 3
  int sign;       // +1, -1
  ExtendedPoint location;

  std::string label() const;
};

struct AuxPoint {
  enum class Family { kPair, kI, kII };
  Family family;
  int i = 0;  // generating reference pair (i < j) for kPair
  int j = 0;
  int sign;
  ExtendedPoint location;
  bool active;

  std::string label() const;
};

enum class Relation { kAdjacent, kAntiAdjacent };

struct VertexRelation {
  Vertex first;
  Vertex second;
  Relation relation;
};

struct ConicSection {
  ConicClass klass;
  std::vector<Piece> pieces;
  std::vector<Vertex> vertices;
  std::vector<AuxPoint> aux_points;
  std::optional<Line2> trace;
  std::vector<RefLine> ref_lines;
  std::vector<std::string> warnings;
};

// Vertices on the active reference lines, ordered by (index, +, -).
std::vector<Vertex> vertices(const ConeSpec& cone);
// Same formulas on every defined reference line, active or not.
std::vector<Vertex> all_vertex_slots(const ConeSpec& cone);
const Vertex& find_vertex(const std::vector<Vertex>& vs, int ref_index, int sign);

std::vector<AuxPoint> auxiliary_points(const ConeSpec& cone);

std::vector<VertexRelation> adjacency(const ConeSpec& cone, const std::vector<Vertex>& verts);

ConicSection build_section(const ConeSpec& cone);
// Pieces from the rays through the active auxiliary points. Empty when the
// construction does not apply: horizontal plane, or an infinite auxiliary
// point whose generating line also has a vertex at infinity.
std::optional<std::vector<Piece>> build_pieces_from_aux(const ConeSpec& cone);

ConicClass classify(const ConeSpec& cone);
// Class read off the piece topology; empty when the pieces fit none of the
// three shapes.
std::optional<ConicClass> topological_class(const std::vector<Piece>& pieces);
bool pieces_touch(const Piece& p, const Piece& q);
void canonical_sort(std::vector<Piece>& pieces);

}  // namespace taxicab
