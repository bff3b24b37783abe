#include "penta/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "penta/graph_io.hpp"

namespace penta {

namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 256;

// Refines an ordered coloring to the coarsest equitable one. A vertex's new
// color is the rank of (old color, sorted neighbor colors), so the result is
// isomorphism-invariant and respects the previous cell order.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  int cells = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& [c, nb] = sig[v];
      c = color[v];
      nb.clear();
      for (int w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      color[order[i]] = rank;
    }
    const int new_cells = n == 0 ? 0 : rank + 1;
    if (new_cells == cells) return;
    cells = new_cells;
  }
}

// graph6 data bytes (without the size prefix) of g relabeled by `label`.
std::string relabeled_body(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<int> vertex_at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertex_at[label[v]] = v;
  std::string out;
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(vertex_at[i], vertex_at[j]) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    std::vector<int> color(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) color[v] = static_cast<int>(g_.neighbors(v).size());
    // Degrees are invariant; compress them to ranks.
    std::vector<int> degs = color;
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (auto& c : color) c = static_cast<int>(std::lower_bound(degs.begin(), degs.end(), c) - degs.begin());
    std::vector<int> prefix;
    visit(std::move(color), prefix);
    return {CanonicalForm{to_graph6(g_.relabeled(best_label_))}, best_label_};
  }

 private:
  void visit(std::vector<int> color, std::vector<int>& prefix) {
    refine(g_, color);
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v) {
      if (color[v] == target) cell.push_back(v);
    }
    std::vector<int> explored;
    for (int w : cell) {
      if (!explored.empty() && same_orbit_as_any(w, explored, prefix)) continue;
      explored.push_back(w);
      std::vector<int> child = color;
      for (int v = 0; v < n_; ++v) {
        if (child[v] > target || (child[v] == target && v != w)) ++child[v];
      }
      prefix.push_back(w);
      visit(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const std::vector<int>& label) {
    std::string code = relabeled_body(g_, label);
    if (!have_leaf_) {
      have_leaf_ = true;
      best_ = first_ = code;
      best_label_ = first_label_ = label;
      return;
    }
    if (code == first_) {
      record_automorphism(first_label_, label);
    } else if (code == best_) {
      record_automorphism(best_label_, label);
    } else if (code < best_) {
      best_ = std::move(code);
      best_label_ = label;
    }
  }

  void record_automorphism(const std::vector<int>& stored, const std::vector<int>& found) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> vertex_at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) vertex_at[stored[v]] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = vertex_at[found[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  // Orbits of the group generated by stored automorphisms that fix the prefix pointwise.
  bool same_orbit_as_any(int w, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; })) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    const int rw = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == rw; });
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  std::string best_;
  std::string first_;
  std::vector<int> best_label_;
  std::vector<int> first_label_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

}  // namespace penta
