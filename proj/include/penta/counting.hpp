#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "penta/embedding.hpp"
#include "penta/graph.hpp"

namespace penta {

using Count = std::int64_t;

struct EdgeCount {
  Edge edge;
  Count count = 0;
};

/// Exact k-cycle totals for k = 3, 4, 5 plus how the 5-cycles spread over
/// vertices and edges.
struct CycleCountReport {
  int n = 0;
  std::size_t m = 0;
  Count c3 = 0;
  Count c4 = 0;
  Count c5 = 0;
  std::vector<Count> per_vertex_c5;
  std::vector<EdgeCount> per_edge_c5;  // same order as Graph::edges()
};

CycleCountReport count_report(const Graph& g);

/// Number of k-cycles (k in {3,4,5}), each counted once.
Count count_cycles(const Graph& g, int k);

/// Enumerates every injective k-tuple and divides by 2k. Slow; test oracle only.
Count count_cycles_bruteforce(const Graph& g, int k);

/// 5-cycles through edge {u,v}, i.e. paths u-x-y-z-v on five distinct vertices.
/// Throws UsageError when {u,v} is not an edge.
Count count_c5_through_edge(const Graph& g, int u, int v);

/// Paths u-x-y-v on four distinct vertices.
Count count_paths3(const Graph& g, int u, int v);

/// Sum of count_paths3 over the three vertex pairs of triangle t. Internal
/// vertices may lie in t.
Count count_face_paths3(const Graph& g, const Face& t);

/// Some vertex outside t is adjacent to all three vertices of t.
bool apex_exists(const Graph& g, const Face& t);

/// 2n^2 - 10n + 12, except 41 at n = 7. Requires n >= 5.
Count g_formula(int n);

}  // namespace penta
