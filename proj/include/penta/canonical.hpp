#pragma once

#include <string>
#include <vector>

#include "penta/graph.hpp"

namespace penta {

/// Isomorphism-class fingerprint: the graph6 string of a canonically
/// relabeled copy. Equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string graph6;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> labeling;  // vertex -> canonical label
};

/// Exact canonical labeling by individualization-refinement with
/// automorphism pruning. Returns the lexicographically smallest graph6
/// string over all leaves of the search tree.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace penta
