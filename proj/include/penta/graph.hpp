#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace penta {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Subset of {0..universe-1} stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  void insert(int v);
  void erase(int v);
  bool contains(int v) const;
  int size() const;
  bool empty() const { return size() == 0; }
  int universe() const { return universe_; }
  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  static VertexSet from_words(int universe, std::vector<std::uint64_t> words);

  bool operator==(const VertexSet&) const = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and a packed
/// bit matrix (one 64-bit word per row when n <= 64) for constant-time
/// membership and word-parallel intersections.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects loops, repeated edges and
  /// out-of-range endpoints with UsageError. Edge orientation is ignored.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(int u, int v) const {
    return ((bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U) != 0;
  }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  /// Bit row of N(v); word i holds vertices 64i..64i+63.
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int words_per_row() const { return words_; }

  /// Edges with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  int max_degree() const;
  int min_degree() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Relabels vertex v to perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> offsets_{0};
  std::vector<int> adj_;
};

int degree(const Graph& g, int v);

/// N(u) ∩ N(v). Requires u != v.
VertexSet common_neighbors(const Graph& g, int u, int v);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new label -> original vertex
};

/// G[S] with vertices relabeled in increasing order of their original label.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct Contraction {
  Graph graph;
  std::vector<int> vertex_map;  // original vertex -> label in the contracted graph
};

/// Merges the endpoints of edge {u,v}; parallel edges collapse and the loop
/// disappears. The merged vertex takes label min(u,v) after compaction.
Contraction contract_edge(const Graph& g, int u, int v);

struct PathForest {
  bool is_path_forest = false;
  bool single_path = false;
  std::vector<std::vector<int>> paths;  // maximal paths, filled on success
};

/// Acyclic with max degree <= 2. single_path also requires a nonempty,
/// connected graph.
PathForest is_path_forest(const Graph& g);

int connected_components(const Graph& g);

}  // namespace penta
