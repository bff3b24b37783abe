#include "penta/counting.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "penta/errors.hpp"

namespace penta {

namespace {

Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cycle count overflow");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cycle count overflow");
  return r;
}

int and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

int and3_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
               std::span<const std::uint64_t> c) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i] & c[i]);
  return total;
}

void check_pair(const Graph& g, int u, int v, const char* what) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw UsageError(std::string(what) + ": vertex out of range");
  }
  if (u == v) throw UsageError(std::string(what) + ": endpoints must differ");
}

void check_k(int k) {
  if (k < 3 || k > 5) throw UsageError("cycle length k must be 3, 4 or 5, got " + std::to_string(k));
}

void check_triangle(const Graph& g, const Face& t, const char* what) {
  const auto& b = t.boundary;
  if (b.size() != 3) throw UsageError(std::string(what) + ": face is not a triangle");
  for (int x : b) {
    if (x < 0 || x >= g.order()) throw UsageError(std::string(what) + ": vertex out of range");
  }
  if (b[0] == b[1] || b[1] == b[2] || b[0] == b[2] || !g.adjacent(b[0], b[1]) || !g.adjacent(b[1], b[2]) ||
      !g.adjacent(b[0], b[2])) {
    throw UsageError(std::string(what) + ": vertices are not pairwise adjacent");
  }
}

}  // namespace

Count count_c5_through_edge(const Graph& g, int u, int v) {
  check_pair(g, u, v, "count_c5_through_edge");
  if (!g.adjacent(u, v)) throw UsageError("count_c5_through_edge: {u,v} is not an edge");
  auto ru = g.row(u);
  auto rv = g.row(v);
  Count total = 0;
  // Middle vertex y; x ranges over N(u)∩N(y)\{v}, z over N(v)∩N(y)\{u}, x != z.
  for (int y = 0; y < g.order(); ++y) {
    if (y == u || y == v) continue;
    auto ry = g.row(y);
    const Count a = and_count(ru, ry) - (g.adjacent(y, v) ? 1 : 0);
    const Count b = and_count(rv, ry) - (g.adjacent(y, u) ? 1 : 0);
    const Count both = and3_count(ru, rv, ry);
    total = checked_add(total, checked_mul(a, b) - both);
  }
  return total;
}

CycleCountReport count_report(const Graph& g) {
  CycleCountReport r;
  r.n = g.order();
  r.m = g.size();
  r.per_vertex_c5.assign(static_cast<std::size_t>(g.order()), 0);

  Count tri = 0;
  Count sq = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const Count c = and_count(g.row(u), g.row(v));
      if (g.adjacent(u, v)) tri = checked_add(tri, c);
      sq = checked_add(sq, c * (c - 1) / 2);
    }
  }
  r.c3 = tri / 3;
  r.c4 = sq / 2;

  // Each 5-cycle has five edges and two edges at each of its vertices.
  Count edge_sum = 0;
  for (const auto& e : g.edges()) {
    const Count c = count_c5_through_edge(g, e.u, e.v);
    r.per_edge_c5.push_back({e, c});
    edge_sum = checked_add(edge_sum, c);
    r.per_vertex_c5[e.u] = checked_add(r.per_vertex_c5[e.u], c);
    r.per_vertex_c5[e.v] = checked_add(r.per_vertex_c5[e.v], c);
  }
  for (auto& pv : r.per_vertex_c5) pv /= 2;
  r.c5 = edge_sum / 5;
  return r;
}

Count count_cycles(const Graph& g, int k) {
  check_k(k);
  if (k == 5) {
    Count edge_sum = 0;
    for (const auto& e : g.edges()) edge_sum = checked_add(edge_sum, count_c5_through_edge(g, e.u, e.v));
    return edge_sum / 5;
  }
  const auto r = count_report(g);
  return k == 3 ? r.c3 : r.c4;
}

Count count_cycles_bruteforce(const Graph& g, int k) {
  check_k(k);
  const int n = g.order();
  if (n < k) return 0;
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  Count closed = 0;
  // Plain recursion over all injective k-tuples; adjacency is only checked at the leaves.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      for (int i = 0; i < k; ++i) {
        if (!g.adjacent(tuple[i], tuple[(i + 1) % k])) return;
      }
      ++closed;
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      tuple[depth] = x;
      self(self, depth + 1);
      used[x] = 0;
    }
  };
  rec(rec, 0);
  return closed / (2 * k);
}

Count count_paths3(const Graph& g, int u, int v) {
  check_pair(g, u, v, "count_paths3");
  Count total = 0;
  auto rv = g.row(v);
  // y ranges over N(x) ∩ N(v) minus u; u lies in N(x) always and in N(v) iff uv is an edge.
  const int u_in_both = g.adjacent(u, v) ? 1 : 0;
  for (int x : g.neighbors(u)) {
    if (x == v) continue;
    total += and_count(g.row(x), rv) - u_in_both;
  }
  return total;
}

Count count_face_paths3(const Graph& g, const Face& t) {
  check_triangle(g, t, "count_face_paths3");
  const auto& b = t.boundary;
  return count_paths3(g, b[0], b[1]) + count_paths3(g, b[1], b[2]) + count_paths3(g, b[0], b[2]);
}

bool apex_exists(const Graph& g, const Face& t) {
  check_triangle(g, t, "apex_exists");
  const auto& b = t.boundary;
  return and3_count(g.row(b[0]), g.row(b[1]), g.row(b[2])) > 0;
}

Count g_formula(int n) {
  if (n < 5) throw UsageError("g(n) is defined for n >= 5, got " + std::to_string(n));
  if (n == 7) return 41;
  const Count nn = n;
  return checked_add(checked_mul(2 * nn, nn) - 10 * nn, 12);
}

}  // namespace penta
