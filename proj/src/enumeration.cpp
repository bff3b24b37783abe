#include "penta/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "penta/errors.hpp"
#include "penta/parallel.hpp"
#include "rotation_ops.hpp"

namespace penta {

using detail::expand;
using detail::position;
using detail::tetrahedron;

namespace {

// --- canonical planar code ---------------------------------------------------

// BFS numbering from dart (u -> v) walking rotations forwards or backwards.
// Entries are 1-based vertex numbers with 0 closing each vertex's list.
// Returns false as soon as the code exceeds `bound` (when bound is nonempty).
bool code_from(const RotationSystem& rot, int u, int v, bool mirror, const std::vector<std::uint8_t>& bound,
               std::vector<std::uint8_t>& code, std::vector<int>& number, std::vector<int>& first) {
  const int n = static_cast<int>(rot.size());
  number.assign(static_cast<std::size_t>(n), -1);
  first.assign(static_cast<std::size_t>(n), -1);
  code.clear();
  std::vector<int> queue(static_cast<std::size_t>(n));
  int head = 0;
  int tail = 0;
  int next_number = 0;
  number[u] = next_number++;
  first[u] = v;
  queue[tail++] = u;
  bool tied = !bound.empty();
  auto emit = [&](std::uint8_t value) {
    const std::size_t k = code.size();
    code.push_back(value);
    if (tied) {
      if (value > bound[k]) return false;
      if (value < bound[k]) tied = false;
    }
    return true;
  };
  while (head < tail) {
    const int w = queue[head++];
    const auto& r = rot[w];
    const int d = static_cast<int>(r.size());
    const int start = position(r, first[w]);
    for (int i = 0; i < d; ++i) {
      const int z = r[static_cast<std::size_t>(mirror ? (start - i + d) % d : (start + i) % d)];
      if (number[z] < 0) {
        number[z] = next_number++;
        first[z] = w;
        queue[tail++] = z;
      }
      if (!emit(static_cast<std::uint8_t>(number[z] + 1))) return false;
    }
    if (!emit(0)) return false;
  }
  return true;
}

struct CanonicalMap {
  std::string code;
  RotationSystem rotations;  // relabeled by BFS number, each list starting at its first neighbor
};

CanonicalMap canonical_map(const RotationSystem& rot) {
  const int n = static_cast<int>(rot.size());
  std::size_t max_deg = 0;
  for (const auto& r : rot) max_deg = std::max(max_deg, r.size());
  // Starting darts restricted to an isomorphism-invariant set: tail of maximum
  // degree, head of the largest degree among its neighbors.
  std::vector<std::pair<int, int>> starts;
  std::size_t best_head = 0;
  for (int u = 0; u < n; ++u) {
    if (rot[u].size() != max_deg) continue;
    for (int v : rot[u]) best_head = std::max(best_head, rot[v].size());
  }
  for (int u = 0; u < n; ++u) {
    if (rot[u].size() != max_deg) continue;
    for (int v : rot[u]) {
      if (rot[v].size() == best_head) starts.emplace_back(u, v);
    }
  }

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> code;
  std::vector<int> number;
  std::vector<int> first;
  std::vector<int> best_number;
  std::vector<int> best_first;
  bool best_mirror = false;
  for (const auto& [u, v] : starts) {
    for (bool mirror : {false, true}) {
      if (!code_from(rot, u, v, mirror, best, code, number, first)) continue;
      if (best.empty() || code < best) {
        best = code;
        best_number = number;
        best_first = first;
        best_mirror = mirror;
      }
    }
  }

  // A mirrored traversal stores the reflected map, which is just as valid a
  // sphere embedding; the lists are then exactly the ones the code spells out.
  CanonicalMap out;
  out.code.assign(best.begin(), best.end());
  out.rotations.resize(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) {
    const auto& r = rot[w];
    const int d = static_cast<int>(r.size());
    const int start = position(r, best_first[w]);
    auto& dst = out.rotations[best_number[w]];
    for (int i = 0; i < d; ++i) {
      dst.push_back(best_number[r[static_cast<std::size_t>(best_mirror ? (start - i + d) % d : (start + i) % d)]]);
    }
  }
  return out;
}

// --- level-by-level generation ----------------------------------------------

class ClassSet {
 public:
  bool insert(CanonicalMap&& m) {
    auto& shard = shards_[std::hash<std::string>{}(m.code) % shards_.size()];
    std::lock_guard lock(shard.mutex);
    return shard.map.try_emplace(std::move(m.code), std::move(m.rotations)).second;
  }

  std::vector<RotationSystem> sorted() {
    std::vector<std::pair<std::string, RotationSystem>> all;
    for (auto& s : shards_) {
      for (auto& kv : s.map) all.emplace_back(kv.first, std::move(kv.second));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RotationSystem> out;
    out.reserve(all.size());
    for (auto& kv : all) out.push_back(std::move(kv.second));
    return out;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<std::string, RotationSystem> map;
  };
  std::array<Shard, 64> shards_;
};

std::vector<RotationSystem> generate_level(int n, int workers) {
  std::vector<RotationSystem> level{canonical_map(tetrahedron()).rotations};
  for (int k = 5; k <= n; ++k) {
    ClassSet classes;
    parallel_for(level.size(), workers, [&](std::size_t i) {
      expand(level[i], [&](RotationSystem&& child) { classes.insert(canonical_map(child)); });
    });
    level = classes.sorted();
  }
  return level;
}

void check_order(int n) {
  if (n < kMinEnumerationOrder || n > kMaxEnumerationOrder) {
    throw UsageError("triangulation enumeration supports " + std::to_string(kMinEnumerationOrder) +
                     " <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::string planar_code(const RotationSystem& rotations) { return canonical_map(rotations).code; }

std::vector<CorpusEntry> triangulation_corpus(int n, const EnumerationOptions& options) {
  check_order(n);
  auto level = generate_level(n, options.workers);
  std::vector<CorpusEntry> corpus(level.size());
  parallel_for(level.size(), options.workers, [&](std::size_t i) {
    corpus[i].embedding = Embedding::from_rotations(std::move(level[i]));
    corpus[i].form = canonical_form(corpus[i].embedding.graph());
  });
  std::sort(corpus.begin(), corpus.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.form < b.form; });
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    if (corpus[i].form == corpus[i - 1].form) {
      throw InvariantError("enumeration produced two isomorphic classes: " + corpus[i].form.graph6);
    }
  }
  return corpus;
}

std::string corpus_digest(std::span<const CanonicalForm> sorted_forms) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const auto& f : sorted_forms) {
    for (char c : f.graph6) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

EnumerationCertificate certify_corpus(int n, std::span<const CorpusEntry> corpus) {
  std::vector<CanonicalForm> forms;
  forms.reserve(corpus.size());
  for (const auto& e : corpus) forms.push_back(e.form);
  std::sort(forms.begin(), forms.end());
  return {n, corpus.size(), corpus_digest(forms)};
}

EnumerationCertificate enumerate_triangulations(int n, const std::function<void(const CorpusEntry&)>& visitor,
                                                const EnumerationOptions& options) {
  const auto corpus = triangulation_corpus(n, options);
  if (visitor) parallel_for(corpus.size(), options.workers, [&](std::size_t i) { visitor(corpus[i]); });
  return certify_corpus(n, corpus);
}

std::vector<CanonicalForm> bruteforce_triangulations(int n) {
  if (n < 4 || n > 7) throw UsageError("bruteforce_triangulations supports 4 <= n <= 7, got " + std::to_string(n));
  std::vector<Edge> pairs;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) pairs.push_back({u, v});
  }
  const int edges = 3 * n - 6;
  const auto total = static_cast<std::uint32_t>(pairs.size());
  std::vector<CanonicalForm> forms;
  // Gosper's hack over all subsets of `edges` pairs.
  std::uint64_t mask = (std::uint64_t{1} << edges) - 1;
  const std::uint64_t limit = std::uint64_t{1} << total;
  while (mask < limit) {
    std::vector<Edge> es;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (std::uint64_t w = mask; w != 0; w &= w - 1) {
      const auto& e = pairs[static_cast<std::size_t>(std::countr_zero(w))];
      es.push_back(e);
      ++deg[e.u];
      ++deg[e.v];
    }
    if (*std::min_element(deg.begin(), deg.end()) >= 3) {
      const Graph g = Graph::from_edges(n, es);
      auto result = planar_embed(g);
      if (const auto* e = std::get_if<Embedding>(&result); e != nullptr && is_triangulation(*e)) {
        forms.push_back(canonical_form(g));
      }
    }
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

}  // namespace penta
