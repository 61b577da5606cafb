#include "fanq/matching.hpp"

#include <algorithm>
#include <climits>

#include "fanq/error.hpp"

namespace fanq {
namespace {

int greedy_matching_size(const Graph& g, VertexSet alive) {
  int size = 0;
  while (alive != 0) {
    const int v = lowest(alive);
    alive &= ~bit(v);
    const VertexSet nb = g.neighbors(v) & alive;
    if (nb != 0) {
      alive &= ~bit(lowest(nb));
      ++size;
    }
  }
  return size;
}

// Depth-first search in lexicographic order of the (sorted) pair list. With
// stop_at == INT_MAX it finds the lexicographically first maximum matching;
// otherwise it stops at the first matching of stop_at edges.
class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

  void run(VertexSet alive) { descend(alive); }

  const std::vector<Edge>& best() const { return best_; }
  bool reached() const { return static_cast<int>(best_.size()) >= stop_at_; }

 private:
  void descend(VertexSet alive) {
    VertexSet live = 0;
    for (VertexSet s = alive; s != 0; s &= s - 1) {
      const int v = lowest(s);
      if (g_.neighbors(v) & alive) live |= bit(v);
    }
    const int have = static_cast<int>(current_.size());
    if (have > static_cast<int>(best_.size())) best_ = current_;
    if (live == 0 || reached()) return;

    const int bound = have + std::min(popcount(live) / 2, 2 * greedy_matching_size(g_, live));
    if (stop_at_ == INT_MAX) {
      if (bound <= static_cast<int>(best_.size())) return;
    } else if (bound < stop_at_) {
      return;
    }

    const int v = lowest(live);
    const VertexSet rest = live & ~bit(v);
    for (VertexSet nb = g_.neighbors(v) & rest; nb != 0; nb &= nb - 1) {
      const int u = lowest(nb);
      current_.emplace_back(v, u);
      descend(rest & ~bit(u));
      current_.pop_back();
      if (reached()) return;
    }
    descend(rest);
  }

  const Graph& g_;
  int stop_at_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
};

}  // namespace

MatchingResult maximum_matching(const Graph& g, VertexSet within) {
  MatchingSearch search(g, INT_MAX);
  search.run(within & g.vertices());
  MatchingResult out{static_cast<int>(search.best().size()), search.best()};
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

MatchingResult matching_number(const Graph& g) { return maximum_matching(g, g.vertices()); }

std::optional<std::vector<Edge>> find_matching_of_size(const Graph& g, VertexSet within, int k) {
  require(k >= 0, "matching size must be non-negative");
  if (k == 0) return std::vector<Edge>{};
  MatchingSearch search(g, k);
  search.run(within & g.vertices());
  if (!search.reached()) return std::nullopt;
  return search.best();
}

bool has_matching_of_size(const Graph& g, VertexSet within, int k) {
  return find_matching_of_size(g, within, k).has_value();
}

bool is_kk2_free(const Graph& g, int k) {
  require(k >= 1, "kK2 needs k >= 1");
  return !has_matching_of_size(g, g.vertices(), k);
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::clique: return "clique-regime";
    case Regime::split: return "split-regime";
    case Regime::boundary: return "boundary";
  }
  return "unknown";
}

EdgeMaximum max_edges_matching(int n, int alpha) {
  require(alpha >= 0, "matching number must be non-negative");
  require(n >= 2 * alpha + 1, "need n >= 2*alpha + 1 (n=" + std::to_string(n) + ", alpha=" +
                                  std::to_string(alpha) + ")");
  const std::int64_t a = alpha;
  const std::int64_t clique = (2 * a + 1) * (2 * a) / 2;
  const std::int64_t split = a * n - a * (a + 1) / 2;
  EdgeMaximum out;
  out.value = std::max(clique, split);
  const std::int64_t twice_n = 2 * std::int64_t{n};
  const std::int64_t threshold = 5 * a + 3;
  out.regime = twice_n > threshold ? Regime::split : twice_n == threshold ? Regime::boundary : Regime::clique;
  return out;
}

EdgeMaximum turan_kk2(int n, int k) {
  require(k >= 2, "ex(n, kK2) needs k >= 2");
  require(n >= 2 * k - 1, "ex(n, kK2) needs n >= 2k-1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  return max_edges_matching(n, k - 1);
}

std::vector<Graph> kk2_extremal_graphs(int n, int k) {
  const Regime regime = turan_kk2(n, k).regime;
  std::vector<Graph> out;
  if (regime != Regime::split) {
    Graph clique = make_complete(2 * k - 1);
    out.push_back(n > 2 * k - 1 ? disjoint_union(clique, make_empty(n - 2 * k + 1)) : clique);
  }
  if (regime != Regime::clique) out.push_back(make_split(n, k - 1));
  return out;
}

}  // namespace fanq
