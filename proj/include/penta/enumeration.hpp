#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "penta/canonical.hpp"
#include "penta/embedding.hpp"

namespace penta {

inline constexpr int kMinEnumerationOrder = 4;
inline constexpr int kMaxEnumerationOrder = 14;

struct EnumerationOptions {
  int workers = 0;  // 0 = hardware concurrency
};

/// One isomorphism class of triangulations.
struct CorpusEntry {
  Embedding embedding;
  CanonicalForm form;
};

struct EnumerationCertificate {
  int n = 0;
  std::size_t count = 0;
  std::string digest;  // FNV-1a 64 over the sorted canonical forms
  bool operator==(const EnumerationCertificate&) const = default;
};

/// All planar triangulations on n vertices up to isomorphism, sorted by
/// canonical form. Generated from K4 by vertex insertion into a face (E3),
/// edge splitting into a degree-4 vertex (E4) and fan replacement by a
/// degree-5 vertex (E5); duplicates are rejected with a canonical planar
/// code. The result does not depend on the worker count.
std::vector<CorpusEntry> triangulation_corpus(int n, const EnumerationOptions& options = {});

/// Calls visitor once per class, possibly from several threads at once.
EnumerationCertificate enumerate_triangulations(int n, const std::function<void(const CorpusEntry&)>& visitor,
                                                const EnumerationOptions& options = {});

EnumerationCertificate certify_corpus(int n, std::span<const CorpusEntry> corpus);

std::string corpus_digest(std::span<const CanonicalForm> sorted_forms);

/// Filters every n-vertex graph with 3n-6 edges through planarity and face
/// checks. Independent of the generator; 4 <= n <= 7 only.
std::vector<CanonicalForm> bruteforce_triangulations(int n);

/// Minimum planar code over all starting darts and both orientations of a
/// 3-connected plane graph. Equal codes iff the graphs are isomorphic.
std::string planar_code(const RotationSystem& rotations);

}  // namespace penta
