#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facialthue/error.hpp"

namespace facialthue {

// Vertices and edge ids are 1-based throughout. Edge id = 1-based position
// in the edge list of the rotation system.
using VertexId = int;
using EdgeId = int;

// One of the two traversal directions of an edge.
struct Dart {
  EdgeId edge = 0;
  VertexId tail = 0;
  VertexId head = 0;
};

// Combinatorial embedding of a connected simple graph: per-vertex cyclic
// order of incident edges.
struct RotationSystem {
  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<EdgeId>> rotations;  // rotations[v-1], cyclic

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const RotationSystem&) const = default;
};

// Oriented boundary walk of one face. Darts chain cyclically:
// head(darts[i]) == tail(darts[i+1 mod length]).
struct FaceWalk {
  int face_index = 0;
  std::vector<Dart> darts;

  int length() const { return static_cast<int>(darts.size()); }
};

// Slot of one of the two occurrences of an edge across all face walks.
struct Appearance {
  int face = 0;
  int position = 0;  // 0-based position within the walk

  bool operator==(const Appearance&) const = default;
};

// Immutable after construction; safe to share read-only across threads.
class PlaneGraph {
public:
  const RotationSystem& rotation() const { return rotation_; }
  const std::vector<FaceWalk>& faces() const { return faces_; }
  const FaceWalk& face(int i) const { return faces_[i]; }

  int vertex_count() const { return rotation_.vertex_count; }
  int edge_count() const { return rotation_.edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int longest_walk() const { return longest_walk_; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return rotation_.edges[e - 1]; }

  // label is 1 or 2; label 1 is the occurrence with the lexicographically
  // smaller (face, position).
  Appearance appearance(EdgeId e, int label) const { return appearances_[e - 1][label - 1]; }

  friend PlaneGraph build_graph(const RotationSystem& spec);

private:
  RotationSystem rotation_;
  std::vector<FaceWalk> faces_;
  std::vector<std::array<Appearance, 2>> appearances_;
  int longest_walk_ = 0;
};

// Validates the rotation system invariants (simple, connected, every edge
// once in each endpoint's rotation). Throws HasLoop, HasParallelEdge,
// NotConnected or SemanticError naming the offending element.
void validate_rotation_system(const RotationSystem& spec);

// Traces the face boundary walks as the orbits of
//   next(d) = rotation successor of edge(d) at head(d),
// fills the appearance table and checks Euler's formula V - E + F = 2.
// Throws EulerViolation when the rotation system is not a genus-0 embedding.
PlaneGraph build_graph(const RotationSystem& spec);

// Canonical rotation systems for standard families:
//   path n (n >= 2 vertices), cycle n (n >= 3), wheel n (n >= 3 rim
//   vertices), grid a b (a,b >= 2).
// Throws UnknownFamily or ParamOutOfRange.
RotationSystem generate(const std::string& kind, const std::vector<int>& params);

// Graph document: JSON object with fields `vertices`, `edges`, `rotations`
// and optional `lists`, in that order. Newline-terminated UTF-8.
struct GraphDocument {
  RotationSystem rotation;
  std::optional<std::vector<std::vector<int>>> lists;
};

std::string serialize(const RotationSystem& rs,
                      const std::optional<std::vector<std::vector<int>>>& lists = std::nullopt);
GraphDocument parse_document(const std::string& text);

}  // namespace facialthue
