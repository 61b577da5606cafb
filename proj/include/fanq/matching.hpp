#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fanq/graph.hpp"

namespace fanq {

struct MatchingResult {
  int size = 0;
  /// Pairwise disjoint edges (u < v), sorted; the lexicographically smallest
  /// maximum matching.
  std::vector<Edge> pairs;
};

/// Exact matching number with a witness.
///
/// Branch and bound over the lowest uncovered vertex: match it to each
/// neighbour in increasing order, then leave it unmatched. A branch is cut
/// when the current size plus twice a greedy maximal matching of the rest
/// (a vertex-cover bound) cannot beat the incumbent.
MatchingResult matching_number(const Graph& g);

/// Same, restricted to the subgraph induced by `within`. Pairs use the
/// labels of g.
MatchingResult maximum_matching(const Graph& g, VertexSet within);

/// Lexicographically smallest matching of exactly `k` edges inside `within`,
/// or nullopt when the induced matching number is below k.
std::optional<std::vector<Edge>> find_matching_of_size(const Graph& g, VertexSet within, int k);

/// True when G[within] has k disjoint edges. Early-exit variant of the above.
bool has_matching_of_size(const Graph& g, VertexSet within, int k);

/// No k pairwise disjoint edges.
bool is_kk2_free(const Graph& g, int k);

enum class Regime { clique, split, boundary };

std::string_view regime_name(Regime r);

struct EdgeMaximum {
  std::int64_t value = 0;
  Regime regime = Regime::clique;
};

/// Largest size of an order-n graph with matching number alpha: the larger of
/// C(2a+1, 2) (K_{2a+1} plus isolated vertices) and a*n - a(a+1)/2 (S_{n,a}).
/// The regime compares 2n with 5a+3.
EdgeMaximum max_edges_matching(int n, int alpha);

/// ex(n, kK2) for k >= 2, n >= 2k-1; equals max_edges_matching(n, k-1).
EdgeMaximum turan_kk2(int n, int k);

/// The extremal graphs predicted for ex(n, kK2): K_{2k-1} plus isolated
/// vertices, S_{n,k-1}, or both on the boundary.
std::vector<Graph> kk2_extremal_graphs(int n, int k);

}  // namespace fanq
