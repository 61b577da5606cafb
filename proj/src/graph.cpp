#include "fanq/graph.hpp"

#include <algorithm>
#include <queue>

#include "fanq/error.hpp"

namespace fanq {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

Graph::Graph(int n) : n_(n) {
  require(n >= 0 && n <= kMaxVertices,
          "graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  require(v >= 0 && v < n_, "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, "loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : members(neighbors(u) & ~first_n(u + 1))) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : members(~neighbors(u) & vertices() & ~first_n(u + 1))) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

Graph Graph::permuted(std::span<const int> perm) const {
  require(static_cast<int>(perm.size()) == n_, "permutation length does not match graph order");
  std::vector<int> position(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    int v = perm[static_cast<std::size_t>(i)];
    require(v >= 0 && v < n_ && position[static_cast<std::size_t>(v)] < 0, "not a permutation");
    position[static_cast<std::size_t>(v)] = i;
  }
  Graph out(n_);
  for (int i = 0; i < n_; ++i) {
    VertexSet row = 0;
    for (int w : members(neighbors(perm[static_cast<std::size_t>(i)])))
      row |= bit(position[static_cast<std::size_t>(w)]);
    out.adj_[static_cast<std::size_t>(i)] = row;
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph make_empty(int n) {
  require(n >= 1, "graph order must be positive");
  return Graph(n);
}

Graph make_complete(int n) {
  Graph g = make_empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_split(int n, int k) {
  require(k >= 1 && k < n, "complete split graph needs 1 <= k < n (got n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + ")");
  require(n <= kMaxVertices, "complete split graph order exceeds " + std::to_string(kMaxVertices));
  return join(make_complete(k), make_empty(n - k));
}

Graph make_fan(int k) {
  require(k >= 1, "fan needs k >= 1");
  require(2 * k + 1 <= kMaxVertices, "fan order exceeds vertex cap");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, 2 * i + 1);
    g.add_edge(0, 2 * i + 2);
    g.add_edge(2 * i + 1, 2 * i + 2);
  }
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite parts must be non-empty");
  return join(make_empty(a), make_empty(b));
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_path(int n) {
  Graph g = make_empty(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  require(n <= kMaxVertices, "combined order " + std::to_string(n) + " exceeds vertex cap");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph make_named(const NamedGraphSpec& spec) {
  auto arity = [&](std::size_t want) {
    require(spec.params.size() == want, "wrong number of parameters for named graph");
  };
  const auto& p = spec.params;
  switch (spec.kind) {
    case NamedKind::complete: arity(1); return make_complete(p[0]);
    case NamedKind::split: arity(2); return make_split(p[0], p[1]);
    case NamedKind::fan: arity(1); return make_fan(p[0]);
    case NamedKind::complete_bipartite: arity(2); return make_complete_bipartite(p[0], p[1]);
    case NamedKind::cycle: arity(1); return make_cycle(p[0]);
    case NamedKind::path: arity(1); return make_path(p[0]);
    case NamedKind::empty: arity(1); return make_empty(p[0]);
  }
  fail(ErrorCode::invalid_argument, "unknown named graph kind");
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.vertices();
  InducedSubgraph out{Graph(popcount(s)), members(s)};
  for (std::size_t i = 0; i < out.original_vertex.size(); ++i)
    for (std::size_t j = i + 1; j < out.original_vertex.size(); ++j)
      if (g.adjacent(out.original_vertex[i], out.original_vertex[j]))
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

int edges_within(const Graph& g, VertexSet s) {
  int twice = 0;
  for (int v : members(s & g.vertices())) twice += popcount(g.neighbors(v) & s);
  return twice / 2;
}

int cut_edges(const Graph& g, VertexSet s, VertexSet t) {
  require((s & t) == 0, "cut_edges needs disjoint vertex sets");
  int count = 0;
  for (int v : members(s & g.vertices())) count += popcount(g.neighbors(v) & t);
  return count;
}

VertexSet second_neighborhood(const Graph& g, int v) {
  require(v >= 0 && v < g.order(), "vertex out of range");
  VertexSet reach = 0;
  for (int w : members(g.neighbors(v))) reach |= g.neighbors(w);
  return reach & ~g.neighbors(v) & ~bit(v);
}

std::vector<int> distances_from(const Graph& g, int v) {
  require(v >= 0 && v < g.order(), "vertex out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(v)] = 0;
  queue.push(v);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : members(g.neighbors(u))) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push(w);
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = bit(0);
  VertexSet frontier = bit(0);
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (auto [u, v] : g.non_edges()) out.add_edge(u, v);
  return out;
}

}  // namespace fanq
