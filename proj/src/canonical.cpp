#include <algorithm>
#include <array>
#include <numeric>

#include "fanq/enumeration.hpp"
#include "fanq/error.hpp"

namespace fanq {
namespace {

// Ordered partition of the vertex set into cells.
struct Partition {
  int count = 0;
  std::array<VertexSet, kMaxVertices> cells{};

  bool discrete(int n) const { return count == n; }
};

using Perm = std::array<int, kMaxVertices>;

// Adjacency rows in canonical position order; compared lexicographically.
struct Code {
  std::array<VertexSet, kMaxVertices> rows{};
};

Partition unit_partition(const Graph& g) {
  Partition p;
  if (g.order() > 0) {
    p.count = 1;
    p.cells[0] = g.vertices();
  }
  return p;
}

// Splits cell x by the number of neighbours each member has in w. Sub-cells
// are ordered by increasing count. Returns false if x is not split.
bool split_cell(const Graph& g, Partition& p, int x, VertexSet w) {
  const VertexSet cell = p.cells[static_cast<std::size_t>(x)];
  std::array<int, kMaxVertices> counts{};
  int lo = kMaxVertices + 1;
  int hi = -1;
  for (VertexSet s = cell; s != 0; s &= s - 1) {
    const int v = lowest(s);
    const int c = popcount(g.neighbors(v) & w);
    counts[static_cast<std::size_t>(v)] = c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (lo == hi) return false;

  std::array<VertexSet, kMaxVertices> pieces{};
  int made = 0;
  for (int c = lo; c <= hi; ++c) {
    VertexSet piece = 0;
    for (VertexSet s = cell; s != 0; s &= s - 1) {
      const int v = lowest(s);
      if (counts[static_cast<std::size_t>(v)] == c) piece |= bit(v);
    }
    if (piece != 0) pieces[static_cast<std::size_t>(made++)] = piece;
  }
  // Shift the tail right to make room for the extra pieces.
  for (int i = p.count - 1; i > x; --i) p.cells[static_cast<std::size_t>(i + made - 1)] = p.cells[static_cast<std::size_t>(i)];
  for (int i = 0; i < made; ++i) p.cells[static_cast<std::size_t>(x + i)] = pieces[static_cast<std::size_t>(i)];
  p.count += made - 1;
  return true;
}

// Refines to the coarsest equitable partition finer than p. Depends only on
// the cell order and adjacency counts, so it commutes with relabelling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.count && !changed; ++w) {
      const VertexSet splitter = p.cells[static_cast<std::size_t>(w)];
      for (int x = 0; x < p.count; ++x) {
        if (popcount(p.cells[static_cast<std::size_t>(x)]) == 1) continue;
        if (split_cell(g, p, x, splitter)) {
          changed = true;
          break;
        }
      }
    }
  }
}

// Union-find over vertices, joined by permutations.
class Orbits {
 public:
  explicit Orbits(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;
  }

  void absorb(const Perm& perm, int n) {
    for (int v = 0; v < n; ++v) join(v, perm[static_cast<std::size_t>(v)]);
  }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(const Partition& root) {
    path_.clear();
    descend(root);
  }

  const Perm& best_labeling() const { return best_lab_; }
  const std::vector<Perm>& generators() const { return generators_; }

 private:
  Code code_of(const Perm& lab) const {
    Perm position{};
    for (int i = 0; i < n_; ++i) position[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    Code code;
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for (VertexSet s = g_.neighbors(lab[static_cast<std::size_t>(i)]); s != 0; s &= s - 1)
        row |= bit(position[static_cast<std::size_t>(lowest(s))]);
      code.rows[static_cast<std::size_t>(i)] = row;
    }
    return code;
  }

  int compare(const Code& a, const Code& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a.rows[static_cast<std::size_t>(i)] != b.rows[static_cast<std::size_t>(i)])
        return a.rows[static_cast<std::size_t>(i)] < b.rows[static_cast<std::size_t>(i)] ? -1 : 1;
    }
    return 0;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    generators_.push_back(gamma);
  }

  // Returns the depth the search should resume at: its own depth to carry on
  // normally, something shallower to abandon the enclosing subtrees.
  int leaf(const Partition& p) {
    const int depth = static_cast<int>(path_.size());
    Perm lab{};
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(i)] = lowest(p.cells[static_cast<std::size_t>(i)]);
    Code code = code_of(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      first_path_ = best_path_ = path_;
      return depth;
    }
    if (compare(code, first_code_) == 0) {
      record_automorphism(first_lab_, lab);
      return common_prefix(path_, first_path_);
    }
    const int cmp = compare(code, best_code_);
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
      return common_prefix(path_, best_path_);
    }
    if (cmp > 0) {
      best_lab_ = lab;
      best_code_ = code;
      best_path_ = path_;
    }
    return depth;
  }

  int descend(const Partition& p) {
    if (p.discrete(n_)) return leaf(p);
    const int depth = static_cast<int>(path_.size());

    int target = 0;
    while (popcount(p.cells[static_cast<std::size_t>(target)]) == 1) ++target;
    const VertexSet cell = p.cells[static_cast<std::size_t>(target)];

    VertexSet tried = 0;
    for (VertexSet s = cell; s != 0; s &= s - 1) {
      const int v = lowest(s);
      if (tried != 0 && equivalent_to_tried(v, tried)) continue;
      tried |= bit(v);

      Partition child = p;
      for (int i = child.count - 1; i > target; --i) child.cells[static_cast<std::size_t>(i + 1)] = child.cells[static_cast<std::size_t>(i)];
      child.cells[static_cast<std::size_t>(target)] = bit(v);
      child.cells[static_cast<std::size_t>(target + 1)] = cell & ~bit(v);
      ++child.count;
      refine(g_, child);

      path_.push_back(v);
      const int resume = descend(child);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  // Is v in the orbit of an already explored sibling under the automorphisms
  // found so far that fix the current path pointwise?
  bool equivalent_to_tried(int v, VertexSet tried) {
    Orbits orbits(n_);
    bool any = false;
    for (const Perm& gamma : generators_) {
      bool fixes = true;
      for (int u : path_) fixes = fixes && gamma[static_cast<std::size_t>(u)] == u;
      if (!fixes) continue;
      orbits.absorb(gamma, n_);
      any = true;
    }
    if (!any) return false;
    const int root = orbits.find(v);
    for (VertexSet s = tried; s != 0; s &= s - 1)
      if (orbits.find(lowest(s)) == root) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  bool have_first_ = false;
  Perm first_lab_{};
  Perm best_lab_{};
  Code first_code_;
  Code best_code_;
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  std::vector<Perm> generators_;
};

Graph relabel(const Graph& g, const Perm& lab) {
  return g.permuted(std::span<const int>(lab.data(), static_cast<std::size_t>(g.order())));
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  Partition root = unit_partition(g);
  refine(g, root);
  CanonSearch search(g);
  if (n > 0) search.run(root);

  CanonicalLabeling out;
  const Perm& lab = search.best_labeling();
  out.labeling.assign(lab.begin(), lab.begin() + n);
  out.canonical = relabel(g, lab);
  Orbits orbits(n);
  for (const Perm& gamma : search.generators()) {
    orbits.absorb(gamma, n);
    out.generators.emplace_back(gamma.begin(), gamma.begin() + n);
  }
  for (int v = 0; v < n; ++v) out.orbits.push_back(orbits.find(v));
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_labeling(g).canonical)}; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<int> complete_split_parameter(const Graph& g) {
  const int n = g.order();
  const int e = g.size();
  for (int k = 1; k < n; ++k) {
    if (k * (k - 1) / 2 + k * (n - k) != e) continue;
    if (isomorphic(g, make_split(n, k))) return k;
  }
  return std::nullopt;
}

bool is_canonical_extension(const Graph& g, int v, Graph* canonical) {
  const int n = g.order();
  require(v >= 0 && v < n, "vertex out of range");
  // Every automorphism preserves the refined root partition, and the vertex
  // labelled last always comes from its last cell.
  Partition root = unit_partition(g);
  refine(g, root);
  if (!contains(root.cells[static_cast<std::size_t>(root.count - 1)], v)) return false;

  CanonSearch search(g);
  search.run(root);
  const int last = search.best_labeling()[static_cast<std::size_t>(n - 1)];
  if (last != v) {
    Orbits orbits(n);
    for (const Perm& gamma : search.generators()) orbits.absorb(gamma, n);
    if (orbits.find(last) != orbits.find(v)) return false;
  }
  if (canonical != nullptr) *canonical = relabel(g, search.best_labeling());
  return true;
}

}  // namespace fanq
