#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// None of them call into the library beyond Graph accessors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "penta/graph.hpp"

namespace oracle {

using penta::Edge;
using penta::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// k-cycles via DFS from their smallest vertex; every cycle is met twice
// (once per direction).
inline std::int64_t cycles(const Graph& g, int k) {
  const int n = g.order();
  std::int64_t twice = 0;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if (static_cast<int>(path.size()) == k) {
      if (g.adjacent(v, start)) ++twice;
      return;
    }
    for (int w = start + 1; w < n; ++w) {
      if (used[w] || !g.adjacent(v, w)) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used[s] = 1;
    dfs(dfs, s, s);
    used[s] = 0;
  }
  return twice / 2;
}

// Paths u-x-y-v on four distinct vertices.
inline std::int64_t paths3(const Graph& g, int u, int v) {
  std::int64_t c = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      if (x == y || x == u || x == v || y == u || y == v) continue;
      if (g.adjacent(u, x) && g.adjacent(x, y) && g.adjacent(y, v)) ++c;
    }
  return c;
}

// Tries every bijection; fine up to about 8 vertices.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

// Octahedron: vertex i is opposite i+3.
inline Graph octahedron() {
  std::vector<Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.push_back({u, v});
  return Graph::from_edges(6, e);
}

}  // namespace oracle
