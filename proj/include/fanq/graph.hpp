#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanq {

/// A set of vertices of one graph, bit v set when vertex v is a member.
using VertexSet = std::uint64_t;

/// Largest supported order. Each adjacency row is a single 64-bit word.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Lowest member of a non-empty set.
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<int> members(VertexSet s);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept symmetric and loop-free by every mutator, so a Graph
/// that exists is always valid. Order 0 is allowed (it is what an induced
/// subgraph on the empty set returns); every named constructor produces
/// n >= 1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool adjacent(int u, int v) const { return contains(neighbors(u), v); }
  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Non-adjacent pairs (u, v), u < v, in lexicographic order.
  std::vector<Edge> non_edges() const;
  int max_degree() const;
  int min_degree() const;

  /// Relabels so that old vertex perm[i] becomes vertex i.
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

struct InducedSubgraph {
  Graph graph;
  /// original_vertex[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> original_vertex;
};

// Named constructions.
Graph make_empty(int n);
Graph make_complete(int n);
/// K_k joined to an independent set of n-k vertices: clique on 0..k-1.
Graph make_split(int n, int k);
/// k triangles sharing vertex 0; triangle i uses vertices 2i+1 and 2i+2.
Graph make_fan(int k);
/// Parts 0..a-1 and a..a+b-1.
Graph make_complete_bipartite(int a, int b);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_petersen();
/// g on 0..|g|-1 followed by h.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between g and h.
Graph join(const Graph& g, const Graph& h);

enum class NamedKind { complete, split, fan, complete_bipartite, cycle, path, empty };

struct NamedGraphSpec {
  NamedKind kind;
  std::vector<int> params;
};

Graph make_named(const NamedGraphSpec& spec);

// Structural queries.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
/// Number of edges with both ends in s.
int edges_within(const Graph& g, VertexSet s);
/// Number of edges with one end in s and the other in t; s and t must be disjoint.
int cut_edges(const Graph& g, VertexSet s, VertexSet t);
/// Vertices at distance exactly 2 from v.
VertexSet second_neighborhood(const Graph& g, int v);
/// Breadth-first distances from v; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, int v);
bool is_connected(const Graph& g);
Graph complement(const Graph& g);

// graph6 codec (https://users.cecs.anu.edu.au/~bdm/data/formats.txt).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace fanq
