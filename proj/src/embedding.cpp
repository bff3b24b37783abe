#include "penta/embedding.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "penta/errors.hpp"

namespace penta {

namespace {

// Position of each neighbor inside its owner's rotation, for O(log d) successor lookups.
class DartIndex {
 public:
  explicit DartIndex(const RotationSystem& rot) : rot_(rot), pos_(rot.size()) {
    for (std::size_t v = 0; v < rot.size(); ++v) {
      auto& p = pos_[v];
      p.reserve(rot[v].size());
      for (std::size_t i = 0; i < rot[v].size(); ++i) p.emplace_back(rot[v][i], static_cast<int>(i));
      std::sort(p.begin(), p.end());
    }
  }

  int index_of(int v, int u) const {
    const auto& p = pos_[v];
    auto it = std::lower_bound(p.begin(), p.end(), std::pair{u, -1});
    if (it == p.end() || it->first != u) return -1;
    return it->second;
  }

  int successor(int v, int u) const {
    const int i = index_of(v, u);
    if (i < 0) throw InvariantError("rotation: dart target missing from rotation");
    const auto& r = rot_[v];
    return r[(static_cast<std::size_t>(i) + 1) % r.size()];
  }

 private:
  const RotationSystem& rot_;
  std::vector<std::vector<std::pair<int, int>>> pos_;
};

}  // namespace

std::vector<Face> trace_faces(const RotationSystem& rot) {
  DartIndex index(rot);
  std::vector<std::vector<char>> used(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v) used[v].assign(rot[v].size(), 0);
  std::vector<Face> faces;
  for (std::size_t s = 0; s < rot.size(); ++s) {
    for (std::size_t i = 0; i < rot[s].size(); ++i) {
      if (used[s][i]) continue;
      Face f;
      int u = static_cast<int>(s);
      int v = rot[s][i];
      int ui = static_cast<int>(i);
      while (!used[u][ui]) {
        used[u][ui] = 1;
        f.boundary.push_back(u);
        const int w = index.successor(v, u);
        u = v;
        v = w;
        ui = index.index_of(u, v);
      }
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

Embedding::Embedding(Graph graph, RotationSystem rotations)
    : graph_(std::move(graph)), rotations_(std::move(rotations)) {
  const int n = graph_.order();
  if (static_cast<int>(rotations_.size()) != n) throw InvariantError("embedding: rotation count != n");
  for (int v = 0; v < n; ++v) {
    auto sorted = rotations_[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw InvariantError("embedding: rotation at vertex " + std::to_string(v) + " is not a cyclic order of N(v)");
    }
  }
  faces_ = trace_faces(rotations_);

  // Euler per component.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : graph_.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  // V - E + F per component; an isolated vertex has one empty face.
  std::vector<long long> euler(static_cast<std::size_t>(c), 0);
  for (int v = 0; v < n; ++v) euler[comp[v]] += graph_.neighbors(v).empty() ? 2 : 1;
  for (const auto& e : graph_.edges()) euler[comp[e.u]] -= 1;
  for (const auto& f : faces_) euler[comp[f.boundary.front()]] += 1;
  for (int k = 0; k < c; ++k) {
    if (euler[k] != 2) {
      throw InvariantError("embedding: Euler characteristic " + std::to_string(euler[k]) +
                           " != 2; rotation system is not planar");
    }
  }
}

Embedding Embedding::from_rotations(RotationSystem rotations) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(rotations.size());
  for (int v = 0; v < n; ++v) {
    for (int w : rotations[v]) {
      if (w < 0 || w >= n) throw InvariantError("embedding: rotation entry out of range");
      if (v < w) edges.push_back({v, w});
    }
  }
  Graph g;
  try {
    g = Graph::from_edges(n, edges);
  } catch (const UsageError& e) {
    throw InvariantError(std::string("embedding: ") + e.what());
  }
  return Embedding(std::move(g), std::move(rotations));
}

int Embedding::successor(int v, int u) const {
  const auto& r = rotations_[v];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw UsageError("successor: not a neighbor");
  ++it;
  return it == r.end() ? r.front() : *it;
}

PlanarityResult planar_embed(const Graph& g) {
  using namespace boost;
  using BGraph = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  const int n = g.order();
  BGraph bg(static_cast<std::size_t>(n));
  int next_index = 0;
  for (const auto& e : g.edges()) {
    auto [ed, ok] = add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    put(edge_index, bg, ed, next_index++);
  }
  using EdgeDesc = graph_traits<BGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(static_cast<std::size_t>(n));
  auto embedding_map = make_iterator_property_map(storage.begin(), get(vertex_index, bg));
  const bool planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                                   boyer_myrvold_params::embedding = embedding_map);
  if (!planar) return NotPlanar{"Boyer-Myrvold: graph is not planar"};
  RotationSystem rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (const auto& ed : storage[v]) {
      const int a = static_cast<int>(source(ed, bg));
      const int b = static_cast<int>(target(ed, bg));
      rot[v].push_back(a == v ? b : a);
    }
  }
  return Embedding(g, std::move(rot));
}

bool is_planar(const Graph& g) { return std::holds_alternative<Embedding>(planar_embed(g)); }

bool is_triangulation(const Embedding& e) {
  const int n = e.graph().order();
  if (n < 3) return false;
  if (connected_components(e.graph()) != 1) return false;
  const bool all_triangles = std::all_of(e.faces().begin(), e.faces().end(),
                                         [](const Face& f) { return f.boundary.size() == 3; });
  const bool edge_count = e.graph().size() == static_cast<std::size_t>(3 * n - 6);
  if (all_triangles != edge_count) {
    throw InvariantError("is_triangulation: face lengths and m = 3n-6 disagree");
  }
  return all_triangles;
}

std::optional<std::vector<int>> neighborhood_cycle(const Embedding& e, int v) {
  if (v < 0 || v >= e.graph().order()) throw UsageError("neighborhood_cycle: vertex out of range");
  if (!is_triangulation(e)) return std::nullopt;
  const auto& r = e.rotations()[v];
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!e.graph().adjacent(r[i], r[(i + 1) % r.size()])) return std::nullopt;
  }
  return r;
}

std::vector<Face> triangular_faces(const Embedding& e) {
  std::vector<Face> out;
  for (const auto& f : e.faces()) {
    if (f.boundary.size() == 3) out.push_back(f);
  }
  return out;
}

std::string to_rotation_text(const Embedding& e) {
  std::ostringstream os;
  for (int v = 0; v < e.graph().order(); ++v) {
    os << v << ':';
    for (int w : e.rotations()[v]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

Embedding from_rotation_text(std::string_view text) {
  RotationSystem rot;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("rotation text: missing ':' in \"" + line + "\"");
    int v = -1;
    try {
      v = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("rotation text: bad vertex label in \"" + line + "\"");
    }
    if (v != static_cast<int>(rot.size())) throw ParseError("rotation text: vertices must appear in order 0..n-1");
    std::istringstream ls(line.substr(colon + 1));
    std::vector<int> r;
    for (int w = 0; ls >> w;) r.push_back(w);
    if (!ls.eof()) throw ParseError("rotation text: bad neighbor in \"" + line + "\"");
    rot.push_back(std::move(r));
  }
  try {
    return Embedding::from_rotations(std::move(rot));
  } catch (const InvariantError& err) {
    throw ParseError(std::string("rotation text: ") + err.what());
  }
}

Embedding delete_edges(const Embedding& e, std::span<const Edge> edges) {
  auto rot = e.rotations();
  for (const auto& ed : edges) {
    if (!e.graph().adjacent(ed.u, ed.v)) throw UsageError("delete_edges: not an edge");
    std::erase(rot[ed.u], ed.v);
    std::erase(rot[ed.v], ed.u);
  }
  return Embedding::from_rotations(std::move(rot));
}

}  // namespace penta
