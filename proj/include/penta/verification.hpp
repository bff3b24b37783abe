#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "penta/canonical.hpp"
#include "penta/counting.hpp"
#include "penta/embedding.hpp"

namespace penta {

/// Tally of one bound checked over many instances. Slack is bound - value;
/// it stays empty for checks without a numeric bound.
struct LemmaStats {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<Count> min_slack;
  std::optional<Count> max_slack;

  void record(Count bound, Count value);
  void record(bool ok);
  void merge(const LemmaStats& other);
  bool operator==(const LemmaStats&) const = default;
};

struct LemmaReport {
  LemmaStats lemma1;          // path forest + triangulation iff, per edge
  LemmaStats lemma2;          // paths3(u,v) <= 2(k-3), per edge
  LemmaStats lemma3;          // face paths <= 4(k-1), per triangular face
  LemmaStats lemma3_no_apex;  // face paths <= 4k-9 when no apex exists

  void merge(const LemmaReport& other);
  std::size_t violations() const;
  bool operator==(const LemmaReport&) const = default;
};

LemmaStats verify_lemma1(std::span<const Embedding> corpus, int workers = 0);
LemmaStats verify_lemma2(std::span<const Embedding> corpus, int workers = 0);
/// Returns {all faces vs 4(k-1), apex-free faces vs 4k-9}.
std::pair<LemmaStats, LemmaStats> verify_lemma3(std::span<const Embedding> corpus, int workers = 0);
LemmaReport verify_lemmas(std::span<const Embedding> corpus, int workers = 0);

/// `count` planar graphs obtained by deleting random edges from random
/// members of `sources`, keeping the inherited rotation system. Deterministic
/// for a given seed and source order.
std::vector<Embedding> edge_deleted_variants(std::span<const Embedding> sources, std::size_t count,
                                             std::uint64_t seed);

/// The theorem's value of f(n, C5): 6 at n = 5, g(n) for n >= 6.
Count expected_max_c5(int n);

struct ExtremalGraph {
  CanonicalForm form;
  std::string family;  // "D", "A" or "unknown"
  bool operator==(const ExtremalGraph&) const = default;
};

struct VerifyOptions {
  int workers = 0;
  bool theorem = true;
  bool lemmas = true;
  std::size_t variants = 0;  // edge-deleted variants added to the lemma corpus
  std::uint64_t seed = 42;
  bool allow_large = false;  // permit 13 <= n <= 14
};

struct VerificationCertificate {
  int n = 0;
  std::size_t corpus_count = 0;
  std::string corpus_digest;
  bool theorem_checked = false;
  Count max_c5 = 0;
  Count g_n = 0;
  Count expected_max = 0;
  std::optional<Count> second_best;  // empty when every class is extremal
  bool strict_gap = false;
  std::vector<ExtremalGraph> extremal;
  bool extremal_match = false;
  bool theorem_match = false;
  bool lemmas_checked = false;
  std::size_t lemma_variants = 0;
  LemmaReport lemmas;

  /// Every requested check passed.
  bool ok() const;
  bool operator==(const VerificationCertificate&) const = default;
};

/// Exhaustive check over all triangulations on n vertices (5 <= n <= 12, or
/// up to 14 with allow_large): maximum 5-cycle count, the set of maximizers
/// recognized against D_n and A_n, a strict gap to the runner-up, and the
/// lemma suites.
VerificationCertificate verify_theorem(int n, const VerifyOptions& options = {});

struct MonotonicityResult {
  std::size_t samples = 0;
  std::size_t additions_checked = 0;
  bool pass = true;
  std::string counterexample;  // graph6 of G and the added edge, when failing
};

/// Samples planar graphs (random triangulations with random edges removed)
/// and checks that adding any edge that keeps the graph planar never lowers
/// the 5-cycle count.
MonotonicityResult verify_monotonicity(std::size_t samples, std::uint64_t seed);

/// Random triangulation on n >= 4 vertices grown from K4 by random E3/E4/E5
/// expansions.
Embedding random_triangulation(int n, std::mt19937_64& rng);

}  // namespace penta
