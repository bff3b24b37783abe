#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "penta/graph.hpp"

namespace penta {

/// Cyclic neighbor order for every vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct Face {
  std::vector<int> boundary;  // closed facial walk, first vertex not repeated
};

/// A rotation system known to describe a sphere embedding of its graph.
///
/// Faces are traced with the rule: the dart after (u -> v) is
/// (v -> succ_v(u)), where succ_v is the cyclic successor in v's rotation.
/// Construction checks that each rotation is a cyclic order of exactly N(v)
/// and that every connected component satisfies V - E + F = 2 (an isolated
/// vertex counts as one face). Anything else throws InvariantError.
class Embedding {
 public:
  Embedding() = default;
  Embedding(Graph graph, RotationSystem rotations);

  /// Builds the graph from the rotation lists themselves.
  static Embedding from_rotations(RotationSystem rotations);

  const Graph& graph() const { return graph_; }
  const RotationSystem& rotations() const { return rotations_; }
  std::span<const int> rotation(int v) const { return rotations_[v]; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Neighbor following u in v's rotation.
  int successor(int v, int u) const;

 private:
  Graph graph_;
  RotationSystem rotations_;
  std::vector<Face> faces_;
};

/// Traces faces of an arbitrary rotation system; no validation.
std::vector<Face> trace_faces(const RotationSystem& rotations);

struct NotPlanar {
  std::string diagnostic;
};

using PlanarityResult = std::variant<Embedding, NotPlanar>;

/// Planar embedding of g (deterministic for a given labeling) or NotPlanar.
PlanarityResult planar_embed(const Graph& g);

bool is_planar(const Graph& g);

/// Every face is a triangle. For n >= 3 this coincides with m = 3n - 6.
bool is_triangulation(const Embedding& e);

/// Rotation order of N(v) when e is a triangulation, checking that rotation
/// neighbors are pairwise adjacent; nullopt otherwise.
std::optional<std::vector<int>> neighborhood_cycle(const Embedding& e, int v);

std::vector<Face> triangular_faces(const Embedding& e);

/// One line "v: w1 w2 ... wd" per vertex.
std::string to_rotation_text(const Embedding& e);
Embedding from_rotation_text(std::string_view text);

/// Removes edges from an embedded graph; the remaining rotations stay a
/// sphere embedding.
Embedding delete_edges(const Embedding& e, std::span<const Edge> edges);

}  // namespace penta
