#include "penta/constructions.hpp"

#include <array>
#include <charconv>
#include <string>
#include <vector>

#include "penta/errors.hpp"

namespace penta {

namespace {

// Every catalog graph is an induced subgraph of this 11-vertex triangulation
// (labels as documented on build_A).
constexpr std::array<Edge, 27> kCatalogEdges{{
    {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},  // v1 v2 v3 and v
    {0, 4}, {1, 4}, {2, 4},                          // u
    {1, 5}, {2, 5}, {4, 5},                          // w23
    {0, 6}, {2, 6}, {4, 6},                          // w31
    {0, 7}, {1, 7}, {4, 7},                          // w12
    {0, 8}, {4, 8}, {7, 8},                          // face u w12 v1
    {1, 9}, {4, 9}, {7, 9},                          // face u w12 v2
    {0, 10}, {1, 10}, {7, 10},                       // face v1 v2 w12
}};

constexpr int kCatalogOrder = 11;

// Vertex subsets of the master graph, in label order.
const std::array<std::vector<int>, 6>& exceptional_subsets() {
  static const std::array<std::vector<int>, 6> subsets{{
      {0, 1, 2, 3, 4, 5, 6},
      {0, 1, 2, 3, 4, 5, 6, 7},
      {0, 1, 2, 3, 4, 5, 7, 8, 10},
      {0, 1, 2, 3, 4, 5, 7, 9, 10},
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
  }};
  return subsets;
}

const Graph& catalog_master() {
  static const Graph g = Graph::from_edges(kCatalogOrder, kCatalogEdges);
  return g;
}

// Canonical forms were frozen after checking that each graph is the only
// triangulation of its order with its 5-cycle count and no degree-4 vertex.
constexpr std::array<GoldenEntry, 8> kGolden{{
    {{Family::A, 8, 0}, 60, R"(G?z\z{)"},
    {{Family::A, 11, 0}, 144, "J??F?zZlz^_"},
    {{Family::Exceptional, 7, 0}, 36, "FEl~w"},
    {{Family::Exceptional, 8, 1}, 60, R"(G?z\z{)"},
    {{Family::Exceptional, 9, 2}, 79, "H?hU\\|~"},
    {{Family::Exceptional, 9, 3}, 80, "H?otY~~"},
    {{Family::Exceptional, 10, 4}, 110, "I?B@tlnvw"},
    {{Family::Exceptional, 11, 5}, 144, "J??F?zZlz^_"},
}};

constexpr std::array<int, 6> kExceptionalOrders{7, 8, 9, 9, 10, 11};

}  // namespace

Graph build_D(int n) {
  if (n < 5) throw UsageError("D_n requires n >= 5, got " + std::to_string(n));
  const int cycle = n - 2;
  std::vector<Edge> es;
  for (int i = 0; i < cycle; ++i) {
    es.push_back({i, (i + 1) % cycle});
    es.push_back({i, n - 2});
    es.push_back({i, n - 1});
  }
  return Graph::from_edges(n, es);
}

Graph build_E(int n) {
  if (n < 5) throw UsageError("E_n requires n >= 5, got " + std::to_string(n));
  const int path = n - 2;
  std::vector<Edge> es{{n - 2, n - 1}};
  for (int i = 0; i < path; ++i) {
    if (i + 1 < path) es.push_back({i, i + 1});
    es.push_back({i, n - 2});
    es.push_back({i, n - 1});
  }
  return Graph::from_edges(n, es);
}

Graph build_A(int n) {
  if (n == 8) return build_exceptional(1);
  if (n == 11) return build_exceptional(5);
  throw UsageError("A_n exists only for n in {8, 11}, got " + std::to_string(n));
}

Graph build_exceptional(int index) {
  if (index < 0 || index >= 6) throw UsageError("exceptional index must be 0..5, got " + std::to_string(index));
  VertexSet s(kCatalogOrder);
  for (int v : exceptional_subsets()[index]) s.insert(v);
  return induced_subgraph(catalog_master(), s).graph;
}

Graph expand(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::D:
      return build_D(spec.n);
    case Family::E:
      return build_E(spec.n);
    case Family::A:
      return build_A(spec.n);
    case Family::Exceptional:
      if (spec.exc_index >= 0 && spec.exc_index < 6 && spec.n != kExceptionalOrders[spec.exc_index]) {
        throw UsageError("exceptional graph " + std::to_string(spec.exc_index) + " has " +
                         std::to_string(kExceptionalOrders[spec.exc_index]) + " vertices, not " +
                         std::to_string(spec.n));
      }
      return build_exceptional(spec.exc_index);
  }
  throw UsageError("unknown family");
}

std::span<const GoldenEntry> golden_catalog() { return kGolden; }

FamilySpec parse_family(std::string_view name, std::optional<int> n) {
  if (name == "dn" || name == "en") {
    if (!n) throw UsageError("family " + std::string(name) + " needs --n");
    if (*n < 5) throw UsageError("family " + std::string(name) + " needs n >= 5");
    return {name == "dn" ? Family::D : Family::E, *n, 0};
  }
  if (name == "a8") return {Family::A, 8, 0};
  if (name == "a11") return {Family::A, 11, 0};
  if (name.starts_with("exc") && name.size() == 4) {
    int index = -1;
    std::from_chars(name.data() + 3, name.data() + 4, index);
    if (index >= 0 && index < 6) return {Family::Exceptional, kExceptionalOrders[index], index};
  }
  throw UsageError("unknown family \"" + std::string(name) + "\" (expected dn, en, a8, a11, exc0..exc5)");
}

std::string family_name(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::D:
      return "dn";
    case Family::E:
      return "en";
    case Family::A:
      return "a" + std::to_string(spec.n);
    case Family::Exceptional:
      return "exc" + std::to_string(spec.exc_index);
  }
  return "?";
}

}  // namespace penta
