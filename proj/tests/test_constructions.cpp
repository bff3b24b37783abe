#include "doctest.h"
#include "oracles.hpp"
#include "penta/canonical.hpp"
#include "penta/constructions.hpp"
#include "penta/embedding.hpp"
#include "penta/errors.hpp"

using namespace penta;

namespace {

bool triangulation(const Graph& g) {
  const auto r = planar_embed(g);
  return std::holds_alternative<Embedding>(r) && is_triangulation(std::get<Embedding>(r));
}

}  // namespace

TEST_CASE("D_n shape and counts") {
  for (int n = 5; n <= 16; ++n) {
    const Graph d = build_D(n);
    CHECK(d.order() == n);
    CHECK(d.size() == static_cast<std::size_t>(3 * n - 6));
    CHECK_FALSE(d.adjacent(n - 2, n - 1));
    CHECK(triangulation(d));
    CHECK(count_cycles(d, 5) == oracle::cycles(d, 5));
  }
  CHECK(count_cycles(build_D(5), 5) == 6);  // K5 minus an edge
  CHECK(count_cycles(build_D(6), 5) == 24);
  CHECK(count_cycles(build_D(7), 5) == 41);
  for (int n = 8; n <= 60; ++n) CHECK(count_cycles(build_D(n), 5) == 2 * n * n - 10 * n + 12);
  CHECK_THROWS_AS(build_D(4), UsageError);
}

TEST_CASE("E_n shape and counts") {
  for (int n = 5; n <= 14; ++n) {
    const Graph e = build_E(n);
    CHECK(e.size() == static_cast<std::size_t>(3 * n - 6));
    CHECK(e.adjacent(n - 2, n - 1));
    CHECK(triangulation(e));
    CHECK(count_cycles(e, 5) == oracle::cycles(e, 5));
  }
  // Closed form confirmed against the DFS oracle above for n <= 14.
  CHECK(count_cycles(build_E(6), 5) == 18);
  for (int n = 5; n <= 60; ++n) CHECK(count_cycles(build_E(n), 5) == 2 * n * n - 10 * n + 6);
  CHECK_THROWS_AS(build_E(3), UsageError);
}

TEST_CASE("sporadic graphs") {
  const Graph a8 = build_A(8);
  const Graph a11 = build_A(11);
  CHECK(a8.order() == 8);
  CHECK(a11.order() == 11);
  CHECK(triangulation(a8));
  CHECK(triangulation(a11));
  CHECK(count_cycles(a8, 5) == 60);
  CHECK(oracle::cycles(a8, 5) == 60);
  CHECK(count_cycles(a11, 5) == 144);
  CHECK(oracle::cycles(a11, 5) == 144);
  CHECK_THROWS_AS(build_A(9), UsageError);
  CHECK(canonical_form(a8) != canonical_form(build_D(8)));
  CHECK(canonical_form(a11) != canonical_form(build_D(11)));
}

TEST_CASE("exceptional catalog") {
  const int orders[] = {7, 8, 9, 9, 10, 11};
  const Count counts[] = {36, 60, 79, 80, 110, 144};
  for (int i = 0; i < 6; ++i) {
    const Graph g = build_exceptional(i);
    CHECK(g.order() == orders[i]);
    CHECK(triangulation(g));
    CHECK(oracle::cycles(g, 5) == counts[i]);
    CHECK(count_cycles(g, 5) == counts[i]);
  }
  CHECK(oracle::isomorphic(build_exceptional(1), build_A(8)));
  CHECK(canonical_form(build_exceptional(5)) == canonical_form(build_A(11)));
  CHECK_THROWS_AS(build_exceptional(6), UsageError);
  CHECK_THROWS_AS(build_exceptional(-1), UsageError);
}

TEST_CASE("golden catalog is consistent with the builders") {
  const auto catalog = golden_catalog();
  CHECK(catalog.size() == 8);
  for (const auto& entry : catalog) {
    const Graph g = expand(entry.spec);
    CHECK(g.order() == entry.spec.n);
    CHECK(count_cycles(g, 5) == entry.expected_c5);
    CHECK(canonical_form(g).graph6 == entry.canonical_graph6);
  }
}

TEST_CASE("family names") {
  CHECK(parse_family("dn", 7).family == Family::D);
  CHECK(parse_family("en", 7).n == 7);
  CHECK(parse_family("a11", std::nullopt).n == 11);
  CHECK(parse_family("exc3", std::nullopt).exc_index == 3);
  CHECK(parse_family("exc3", std::nullopt).n == 9);
  CHECK_THROWS_AS(parse_family("dn", std::nullopt), UsageError);
  CHECK_THROWS_AS(parse_family("dn", 4), UsageError);
  CHECK_THROWS_AS(parse_family("exc6", std::nullopt), UsageError);
  CHECK_THROWS_AS(parse_family("petersen", std::nullopt), UsageError);
  for (const char* name : {"a8", "a11", "exc0", "exc1", "exc2", "exc3", "exc4", "exc5"}) {
    CHECK(family_name(parse_family(name, std::nullopt)) == name);
  }
  CHECK(family_name(parse_family("dn", 9)) == "dn");
}
