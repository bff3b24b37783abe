#include "doctest.h"
#include "oracles.hpp"
#include "penta/embedding.hpp"
#include "penta/errors.hpp"

using namespace penta;

namespace {

const RotationSystem kTetrahedron{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

Embedding embed(const Graph& g) {
  auto r = planar_embed(g);
  REQUIRE(std::holds_alternative<Embedding>(r));
  return std::get<Embedding>(std::move(r));
}

}  // namespace

TEST_CASE("tetrahedron faces") {
  const Embedding e = Embedding::from_rotations(kTetrahedron);
  CHECK(e.graph() == oracle::complete(4));
  CHECK(e.faces().size() == 4);
  for (const auto& f : e.faces()) CHECK(f.boundary.size() == 3);
  CHECK(is_triangulation(e));
  CHECK(e.successor(0, 1) == 2);
  CHECK(e.successor(0, 3) == 1);
}

TEST_CASE("invalid rotation systems are rejected") {
  // K5 has no sphere embedding, so any rotation must fail Euler.
  RotationSystem k5(5);
  for (int v = 0; v < 5; ++v)
    for (int w = 0; w < 5; ++w)
      if (w != v) k5[v].push_back(w);
  CHECK_THROWS_AS(Embedding::from_rotations(k5), InvariantError);
  // Rotation does not match the graph.
  CHECK_THROWS_AS(Embedding(oracle::cycle(4), kTetrahedron), InvariantError);
  // Asymmetric adjacency.
  CHECK_THROWS_AS(Embedding::from_rotations({{1}, {}}), InvariantError);
}

TEST_CASE("planarity of small classics") {
  CHECK_FALSE(is_planar(oracle::complete(5)));
  const std::vector<Edge> k33{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
  CHECK_FALSE(is_planar(Graph::from_edges(6, k33)));
  const auto np = planar_embed(oracle::complete(5));
  REQUIRE(std::holds_alternative<NotPlanar>(np));
  CHECK_FALSE(std::get<NotPlanar>(np).diagnostic.empty());

  const Embedding k5e = embed(oracle::complete(5).without_edge(0, 1));
  CHECK(is_triangulation(k5e));
  CHECK(k5e.faces().size() == 6);
  CHECK(is_triangulation(embed(oracle::octahedron())));
  CHECK_FALSE(is_triangulation(embed(oracle::cycle(5))));
  CHECK_FALSE(is_triangulation(embed(oracle::complete(3).without_edge(0, 1))));
}

TEST_CASE("Euler's formula on random planar graphs") {
  std::mt19937_64 rng(21);
  int planar = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + t % 11;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    auto r = planar_embed(g);
    if (!std::holds_alternative<Embedding>(r)) continue;
    ++planar;
    const auto& e = std::get<Embedding>(r);
    const int c = connected_components(g);
    // Faces are traced per component (V - E + F = 2 each); isolated
    // vertices contribute no facial walk.
    int isolated = 0;
    for (int v = 0; v < n; ++v) isolated += degree(g, v) == 0;
    const int expected_faces = static_cast<int>(g.size()) - (n - isolated) + 2 * (c - isolated);
    CHECK(static_cast<int>(e.faces().size()) == expected_faces);
    CHECK(is_triangulation(e) == (n >= 3 && g.size() == static_cast<std::size_t>(3 * n - 6) && c == 1));
  }
  CHECK(planar > 100);
}

TEST_CASE("neighborhood cycle") {
  const Embedding oct = embed(oracle::octahedron());
  for (int v = 0; v < 6; ++v) {
    const auto cyc = neighborhood_cycle(oct, v);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 4);
    for (std::size_t i = 0; i < cyc->size(); ++i) CHECK(oct.graph().adjacent((*cyc)[i], (*cyc)[(i + 1) % 4]));
  }
  CHECK_FALSE(neighborhood_cycle(embed(oracle::cycle(5)), 0).has_value());
}

TEST_CASE("rotation text round trip") {
  const Embedding e = Embedding::from_rotations(kTetrahedron);
  const std::string text = to_rotation_text(e);
  CHECK(text == "0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
  const Embedding back = from_rotation_text(text);
  CHECK(back.rotations() == e.rotations());
  CHECK_THROWS_AS(from_rotation_text("0: 1\n1 0\n"), ParseError);
}

TEST_CASE("edge deletion keeps a sphere embedding") {
  const Embedding oct = embed(oracle::octahedron());
  auto edges = oct.graph().edges();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::shuffle(edges.begin(), edges.end(), rng);
    const std::vector<Edge> drop(edges.begin(), edges.begin() + 1 + t % 8);
    const Embedding d = delete_edges(oct, drop);
    CHECK(d.graph().size() == 12 - drop.size());
    for (const auto& e : drop) CHECK_FALSE(d.graph().adjacent(e.u, e.v));
  }
  const std::vector<Edge> missing{{0, 3}};
  CHECK_THROWS_AS(delete_edges(oct, missing), UsageError);
}

TEST_CASE("triangular faces") {
  CHECK(triangular_faces(Embedding::from_rotations(kTetrahedron)).size() == 4);
  CHECK(triangular_faces(embed(oracle::cycle(5))).empty());
}
