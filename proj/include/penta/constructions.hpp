#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "penta/counting.hpp"
#include "penta/graph.hpp"

namespace penta {

enum class Family { D, E, A, Exceptional };

struct FamilySpec {
  Family family = Family::D;
  int n = 0;
  int exc_index = 0;  // only for Family::Exceptional
};

/// Cycle c_0..c_{n-3} (labels 0..n-3) plus non-adjacent apexes n-2 and n-1,
/// each joined to every cycle vertex. Requires n >= 5.
Graph build_D(int n);

/// Path p_0..p_{n-3} (labels 0..n-3) plus adjacent apexes n-2 and n-1, each
/// joined to every path vertex. Requires n >= 5.
Graph build_E(int n);

/// The sporadic maximizers on 8 and 11 vertices.
///
/// Labels: 0, 1, 2 are the central triangle v1 v2 v3; 3 is the degree-3
/// vertex v inside it; 4 is the vertex u on the other side, adjacent to
/// v1, v2, v3; 5, 6, 7 are the vertices w23, w31, w12 with N(w_ij) =
/// {u, v_i, v_j}. That is all of A_8. A_11 additionally has 8 and 9, of
/// degree 3 in the faces u w12 v1 and u w12 v2, and 10 in the face v1 v2 w12.
Graph build_A(int n);

/// Six exceptional triangulations on 7, 8, 9, 9, 10, 11 vertices with 36, 60,
/// 79, 80, 110, 144 five-cycles; index 1 is A_8 and index 5 is A_11.
Graph build_exceptional(int index);

Graph expand(const FamilySpec& spec);

struct GoldenEntry {
  FamilySpec spec;
  Count expected_c5 = 0;
  std::string_view canonical_graph6;
};

/// Frozen golden values for the catalog graphs (A_8, A_11 and the six
/// exceptional graphs).
std::span<const GoldenEntry> golden_catalog();

/// "dn", "en", "a8", "a11", "exc0".."exc5". `n` is required for dn/en and
/// ignored otherwise. Throws UsageError on unknown names.
FamilySpec parse_family(std::string_view name, std::optional<int> n);

std::string family_name(const FamilySpec& spec);

}  // namespace penta
