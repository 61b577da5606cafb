#include "fanq/error.hpp"
#include "fanq/fan.hpp"
#include "fanq/search.hpp"

namespace fanq {

EfggValue efgg_value(int n, int k) {
  require(k >= 1, "fan parameter k must be positive");
  require(n >= 0, "order must be non-negative");
  const std::int64_t nn = n;
  const std::int64_t kk = k;
  const std::int64_t extra = k % 2 == 1 ? kk * kk - kk : kk * kk - 3 * kk / 2;
  return {nn * nn / 4 + extra, nn >= 50 * kk * kk};
}

Graph even_fan_embedding(int k) {
  require(k >= 2 && k % 2 == 0, "even embedding needs an even k >= 2");
  const int m = 2 * k - 1;
  require(m <= kMaxVertices, "embedding order exceeds vertex cap");
  Graph h(m);
  for (int i = 0; i < m; ++i)
    for (int off = 1; off <= (k - 2) / 2; ++off) h.add_edge(i, (i + off) % m);
  // Vertex m-1 is the one left at degree k-2.
  for (int i = 0; i < k - 1; ++i) h.add_edge(i, i + k - 1);
  return h;
}

Construction efgg_construction(int n, int k) {
  require(k >= 1, "fan parameter k must be positive");
  const bool odd = k % 2 == 1;
  const int need = odd ? 4 * k - 1 : 4 * k - 3;
  require(n >= need, "construction for k=" + std::to_string(k) + " needs n >= " + std::to_string(need));
  require(n <= kMaxVertices, "construction order exceeds vertex cap");

  const int small = n / 2;
  Construction out{make_complete_bipartite(small, n - small), {}};
  ConstructionSpec& spec = out.spec;
  spec.n = n;
  spec.k = k;
  spec.odd = odd;

  Graph embedded;
  if (odd) {
    embedded = disjoint_union(make_complete(k), make_complete(k));
    spec.embedded = "two vertex-disjoint copies of K_" + std::to_string(k);
  } else {
    embedded = even_fan_embedding(k);
    spec.embedded = std::to_string(2 * k - 1) + "-vertex graph with " + std::to_string(k * k - 3 * k / 2) +
                    " edges and maximum degree " + std::to_string(k - 1);
  }
  for (int v = 0; v < embedded.order(); ++v) spec.embedded_vertices.push_back(small + v);
  for (auto [u, v] : embedded.edges()) out.graph.add_edge(small + u, small + v);
  spec.embedded_edges = embedded.size();
  spec.embedded_max_degree = embedded.max_degree();

  const bool shape_ok = odd ? (embedded.order() == 2 * k && spec.embedded_edges == k * (k - 1))
                            : (embedded.order() == 2 * k - 1 && spec.embedded_edges == k * k - 3 * k / 2 &&
                               spec.embedded_max_degree == k - 1);
  if (!shape_ok) fail(ErrorCode::internal, "embedded part violates its vertex, edge or degree constraint");
  if (out.graph.size() != efgg_value(n, k).value)
    fail(ErrorCode::internal, "construction edge count differs from the formula value");
  if (!is_fan_free(out.graph, k)) fail(ErrorCode::internal, "construction contains F_" + std::to_string(k));
  return out;
}

}  // namespace fanq
