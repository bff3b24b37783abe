#include "penta/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "penta/errors.hpp"

namespace penta {

namespace {

int word_count(int n) { return n <= 0 ? 0 : (n + 63) / 64; }

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw UsageError(std::string(what) + ": vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(g.order()));
  }
}

}  // namespace

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(word_count(universe)), 0) {
  if (universe < 0) throw UsageError("VertexSet: negative universe");
}

VertexSet VertexSet::from_words(int universe, std::vector<std::uint64_t> words) {
  VertexSet s(universe);
  if (words.size() != s.words_.size()) throw UsageError("VertexSet: word count mismatch");
  if (universe % 64 != 0 && !words.empty()) words.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  s.words_ = std::move(words);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) throw UsageError("VertexSet: member out of range");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) throw UsageError("VertexSet: member out of range");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
    }
  }
  return out;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw UsageError("Graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.words_ = word_count(n);
  g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw UsageError("Graph: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw UsageError("Graph: self-loop at " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) {
      throw UsageError("Graph: repeated edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    g.bits_[static_cast<std::size_t>(e.u) * g.words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    g.bits_[static_cast<std::size_t>(e.v) * g.words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    ++deg[e.u];
    ++deg[e.v];
  }
  g.m_ = edges.size();
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::partial_sum(deg.begin(), deg.end(), g.offsets_.begin() + 1);
  g.adj_.resize(2 * g.m_);
  for (int v = 0; v < n; ++v) {
    auto pos = g.offsets_[v];
    auto r = g.row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (auto w = r[i]; w != 0; w &= w - 1) g.adj_[pos++] = static_cast<int>(i * 64) + std::countr_zero(w);
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(*this, u, "with_edge");
  check_vertex(*this, v, "with_edge");
  auto es = edges();
  es.push_back({std::min(u, v), std::max(u, v)});
  return from_edges(n_, es);
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(*this, u, "without_edge");
  check_vertex(*this, v, "without_edge");
  if (!adjacent(u, v)) throw UsageError("without_edge: not an edge");
  auto es = edges();
  std::erase(es, Edge{std::min(u, v), std::max(u, v)});
  return from_edges(n_, es);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw UsageError("relabeled: permutation size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw UsageError("relabeled: not a permutation");
    seen[p] = 1;
  }
  auto es = edges();
  for (auto& e : es) e = {perm[e.u], perm[e.v]};
  return from_edges(n_, es);
}

int degree(const Graph& g, int v) {
  check_vertex(g, v, "degree");
  return static_cast<int>(g.neighbors(v).size());
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
  check_vertex(g, u, "common_neighbors");
  check_vertex(g, v, "common_neighbors");
  if (u == v) throw UsageError("common_neighbors: u == v");
  auto ru = g.row(u);
  auto rv = g.row(v);
  std::vector<std::uint64_t> w(ru.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = ru[i] & rv[i];
  return VertexSet::from_words(g.order(), std::move(w));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() > g.order()) {
    for (int v : s.members()) check_vertex(g, v, "induced_subgraph");
  }
  InducedSubgraph out;
  out.to_parent = s.members();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (int w : g.neighbors(out.to_parent[i])) {
      if (local[w] > static_cast<int>(i)) es.push_back({static_cast<int>(i), local[w]});
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), es);
  return out;
}

Contraction contract_edge(const Graph& g, int u, int v) {
  check_vertex(g, u, "contract_edge");
  check_vertex(g, v, "contract_edge");
  if (u == v || !g.adjacent(u, v)) throw UsageError("contract_edge: {u,v} is not an edge");
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  Contraction out;
  out.vertex_map.resize(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    const int merged = (x == gone) ? keep : x;
    out.vertex_map[x] = merged > gone ? merged - 1 : merged;
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    int a = out.vertex_map[e.u];
    int b = out.vertex_map[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    es.push_back({a, b});
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  out.graph = Graph::from_edges(g.order() - 1, es);
  return out;
}

int connected_components(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack;
  int components = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

PathForest is_path_forest(const Graph& g) {
  PathForest out;
  if (g.max_degree() > 2) return out;
  // A forest has m = n - c.
  const int c = connected_components(g);
  if (static_cast<int>(g.size()) != g.order() - c) return out;
  out.is_path_forest = true;
  out.single_path = g.order() > 0 && c == 1;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s] || degree(g, s) == 2) continue;
    std::vector<int> path{s};
    seen[s] = 1;
    int prev = -1;
    int cur = s;
    for (;;) {
      int next = -1;
      for (int w : g.neighbors(cur)) {
        if (w != prev && !seen[w]) next = w;
      }
      if (next < 0) break;
      seen[next] = 1;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

}  // namespace penta
