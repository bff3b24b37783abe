#include "penta/verification.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "penta/constructions.hpp"
#include "penta/enumeration.hpp"
#include "penta/errors.hpp"
#include "penta/graph_io.hpp"
#include "penta/parallel.hpp"
#include "rotation_ops.hpp"

namespace penta {

void LemmaStats::record(Count bound, Count value) {
  ++checked;
  if (value > bound) ++violations;
  const Count slack = bound - value;
  min_slack = min_slack ? std::min(*min_slack, slack) : slack;
  max_slack = max_slack ? std::max(*max_slack, slack) : slack;
}

void LemmaStats::record(bool ok) {
  ++checked;
  if (!ok) ++violations;
}

void LemmaStats::merge(const LemmaStats& o) {
  checked += o.checked;
  violations += o.violations;
  if (o.min_slack) min_slack = min_slack ? std::min(*min_slack, *o.min_slack) : *o.min_slack;
  if (o.max_slack) max_slack = max_slack ? std::max(*max_slack, *o.max_slack) : *o.max_slack;
}

void LemmaReport::merge(const LemmaReport& o) {
  lemma1.merge(o.lemma1);
  lemma2.merge(o.lemma2);
  lemma3.merge(o.lemma3);
  lemma3_no_apex.merge(o.lemma3_no_apex);
}

std::size_t LemmaReport::violations() const {
  return lemma1.violations + lemma2.violations + lemma3.violations + lemma3_no_apex.violations;
}

namespace {

LemmaStats lemma1_on(const Graph& g) {
  LemmaStats s;
  for (const auto& e : g.edges()) {
    const VertexSet common = common_neighbors(g, e.u, e.v);
    const PathForest pf = is_path_forest(induced_subgraph(g, common).graph);
    VertexSet closed = common;
    closed.insert(e.u);
    closed.insert(e.v);
    const auto result = planar_embed(induced_subgraph(g, closed).graph);
    const auto* emb = std::get_if<Embedding>(&result);
    const bool triangulated = emb != nullptr && is_triangulation(*emb);
    s.record(emb != nullptr && pf.is_path_forest && triangulated == pf.single_path);
  }
  return s;
}

LemmaStats lemma2_on(const Graph& g) {
  LemmaStats s;
  const Count k = g.order();
  if (k < 3) return s;
  for (const auto& e : g.edges()) s.record(2 * (k - 3), count_paths3(g, e.u, e.v));
  return s;
}

std::pair<LemmaStats, LemmaStats> lemma3_on(const Embedding& emb) {
  std::pair<LemmaStats, LemmaStats> s;
  const Graph& g = emb.graph();
  const Count k = g.order();
  if (k < 4) return s;
  for (const auto& face : triangular_faces(emb)) {
    const Count paths = count_face_paths3(g, face);
    s.first.record(4 * (k - 1), paths);
    if (!apex_exists(g, face)) s.second.record(4 * k - 9, paths);
  }
  return s;
}

LemmaReport lemmas_on(const Embedding& emb) {
  LemmaReport r;
  r.lemma1 = lemma1_on(emb.graph());
  r.lemma2 = lemma2_on(emb.graph());
  std::tie(r.lemma3, r.lemma3_no_apex) = lemma3_on(emb);
  return r;
}

// Per-item results land in their own slot and are folded in index order, so
// the totals do not depend on scheduling.
template <typename Result, typename Fn>
std::vector<Result> map_items(std::size_t count, int workers, Fn&& fn) {
  std::vector<Result> out(count);
  parallel_for(count, workers, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace

LemmaStats verify_lemma1(std::span<const Embedding> corpus, int workers) {
  LemmaStats total;
  for (const auto& s : map_items<LemmaStats>(corpus.size(), workers, [&](std::size_t i) { return lemma1_on(corpus[i].graph()); })) {
    total.merge(s);
  }
  return total;
}

LemmaStats verify_lemma2(std::span<const Embedding> corpus, int workers) {
  LemmaStats total;
  for (const auto& s : map_items<LemmaStats>(corpus.size(), workers, [&](std::size_t i) { return lemma2_on(corpus[i].graph()); })) {
    total.merge(s);
  }
  return total;
}

std::pair<LemmaStats, LemmaStats> verify_lemma3(std::span<const Embedding> corpus, int workers) {
  std::pair<LemmaStats, LemmaStats> total;
  using Pair = std::pair<LemmaStats, LemmaStats>;
  for (const auto& s : map_items<Pair>(corpus.size(), workers, [&](std::size_t i) { return lemma3_on(corpus[i]); })) {
    total.first.merge(s.first);
    total.second.merge(s.second);
  }
  return total;
}

LemmaReport verify_lemmas(std::span<const Embedding> corpus, int workers) {
  LemmaReport total;
  for (const auto& r : map_items<LemmaReport>(corpus.size(), workers, [&](std::size_t i) { return lemmas_on(corpus[i]); })) {
    total.merge(r);
  }
  return total;
}

std::vector<Embedding> edge_deleted_variants(std::span<const Embedding> sources, std::size_t count,
                                             std::uint64_t seed) {
  if (sources.empty() && count > 0) throw UsageError("edge_deleted_variants: no source graphs");
  std::mt19937_64 rng(seed);
  std::vector<Embedding> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Embedding& src = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
    auto edges = src.graph().edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    const std::size_t drop =
        edges.empty() ? 0 : std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, edges.size() / 2))(rng);
    edges.resize(std::min(drop, edges.size()));
    out.push_back(delete_edges(src, edges));
  }
  return out;
}

Count expected_max_c5(int n) {
  if (n < 5) throw UsageError("expected_max_c5 requires n >= 5");
  return n == 5 ? 6 : g_formula(n);
}

bool VerificationCertificate::ok() const {
  if (theorem_checked && !theorem_match) return false;
  if (lemmas_checked && lemmas.violations() != 0) return false;
  return true;
}

VerificationCertificate verify_theorem(int n, const VerifyOptions& options) {
  const int max_n = options.allow_large ? kMaxEnumerationOrder : 12;
  if (n < 5 || n > max_n) {
    throw UsageError("verify_theorem supports 5 <= n <= " + std::to_string(max_n) + ", got " + std::to_string(n) +
                     (options.allow_large ? "" : " (use the large-n override for 13..14)"));
  }
  VerificationCertificate cert;
  cert.n = n;
  const auto corpus = triangulation_corpus(n, {options.workers});
  const auto ec = certify_corpus(n, corpus);
  cert.corpus_count = ec.count;
  cert.corpus_digest = ec.digest;

  if (options.theorem) {
    cert.theorem_checked = true;
    cert.g_n = g_formula(n);
    cert.expected_max = expected_max_c5(n);
    const auto counts = map_items<Count>(corpus.size(), options.workers,
                                         [&](std::size_t i) { return count_cycles(corpus[i].embedding.graph(), 5); });
    cert.max_c5 = *std::max_element(counts.begin(), counts.end());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < cert.max_c5) cert.second_best = std::max(cert.second_best.value_or(counts[i]), counts[i]);
    }
    cert.strict_gap = !cert.second_best || *cert.second_best < cert.max_c5;

    const CanonicalForm d_form = canonical_form(build_D(n));
    std::optional<CanonicalForm> a_form;
    if (n == 8 || n == 11) a_form = canonical_form(build_A(n));
    std::multiset<std::string> families;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] != cert.max_c5) continue;
      std::string family = "unknown";
      if (corpus[i].form == d_form) family = "D";
      if (a_form && corpus[i].form == *a_form) family = "A";
      families.insert(family);
      cert.extremal.push_back({corpus[i].form, family});
    }
    std::multiset<std::string> expected{"D"};
    if (a_form) expected.insert("A");
    cert.extremal_match = families == expected;
    cert.theorem_match = cert.max_c5 == cert.expected_max && cert.extremal_match && cert.strict_gap;
  }

  if (options.lemmas) {
    cert.lemmas_checked = true;
    std::vector<Embedding> graphs;
    graphs.reserve(corpus.size());
    for (const auto& e : corpus) graphs.push_back(e.embedding);
    auto variants = edge_deleted_variants(graphs, options.variants, options.seed + static_cast<std::uint64_t>(n));
    cert.lemma_variants = variants.size();
    graphs.insert(graphs.end(), std::make_move_iterator(variants.begin()), std::make_move_iterator(variants.end()));
    cert.lemmas = verify_lemmas(graphs, options.workers);
  }
  return cert;
}

Embedding random_triangulation(int n, std::mt19937_64& rng) {
  if (n < 4) throw UsageError("random_triangulation requires n >= 4");
  RotationSystem rot = detail::tetrahedron();
  std::vector<RotationSystem> children;
  while (static_cast<int>(rot.size()) < n) {
    children.clear();
    detail::expand(rot, [&](RotationSystem&& child) { children.push_back(std::move(child)); });
    rot = std::move(children[std::uniform_int_distribution<std::size_t>(0, children.size() - 1)(rng)]);
  }
  return Embedding::from_rotations(std::move(rot));
}

MonotonicityResult verify_monotonicity(std::size_t samples, std::uint64_t seed) {
  MonotonicityResult result;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = std::uniform_int_distribution<int>(5, 10)(rng);
    const Embedding tri = random_triangulation(n, rng);
    auto edges = tri.graph().edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::uniform_int_distribution<std::size_t>(1, edges.size() / 2)(rng));
    const Graph g = delete_edges(tri, edges).graph();
    const Count base = count_cycles(g, 5);
    ++result.samples;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        const Graph h = g.with_edge(u, v);
        if (!is_planar(h)) continue;
        ++result.additions_checked;
        if (count_cycles(h, 5) < base && result.pass) {
          result.pass = false;
          result.counterexample = to_graph6(g) + " + {" + std::to_string(u) + "," + std::to_string(v) + "}";
        }
      }
    }
  }
  return result;
}

}  // namespace penta
