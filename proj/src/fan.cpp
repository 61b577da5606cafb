#include "fanq/fan.hpp"

#include "fanq/error.hpp"
#include "fanq/matching.hpp"

namespace fanq {

std::optional<FanWitness> contains_fan(const Graph& g, int k) {
  require(k >= 1, "fan needs k >= 1");
  for (int v = 0; v < g.order(); ++v) {
    // A k-matching needs 2k vertices.
    if (g.degree(v) < 2 * k) continue;
    if (auto pairs = find_matching_of_size(g, g.neighbors(v), k)) {
      FanWitness w{v, std::move(*pairs)};
      if (!validate_fan_witness(g, w, k)) fail(ErrorCode::internal, "fan witness failed validation");
      return w;
    }
  }
  return std::nullopt;
}

bool is_fan_free(const Graph& g, int k) { return !contains_fan(g, k).has_value(); }

bool validate_fan_witness(const Graph& g, const FanWitness& w, int k) {
  if (w.center < 0 || w.center >= g.order()) return false;
  if (static_cast<int>(w.pairs.size()) != k) return false;
  VertexSet used = bit(w.center);
  for (auto [a, b] : w.pairs) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b) return false;
    if (!g.adjacent(a, b) || !g.adjacent(w.center, a) || !g.adjacent(w.center, b)) return false;
    if (contains(used, a) || contains(used, b)) return false;
    used |= bit(a) | bit(b);
  }
  return true;
}

std::optional<Edge> first_unsaturated_pair(const Graph& g, int k) {
  if (auto w = contains_fan(g, k))
    fail(ErrorCode::precondition, "graph already contains F_" + std::to_string(k) + " centred at vertex " +
                                      std::to_string(w->center));
  for (auto [u, v] : g.non_edges()) {
    Graph augmented = g;
    augmented.add_edge(u, v);
    if (is_fan_free(augmented, k)) return Edge{u, v};
  }
  return std::nullopt;
}

bool is_fan_saturated(const Graph& g, int k) { return !first_unsaturated_pair(g, k).has_value(); }

bool common_neighbor_check(const Graph& g) {
  for (auto [u, v] : g.non_edges())
    if ((g.neighbors(u) & g.neighbors(v)) == 0) return false;
  return true;
}

}  // namespace fanq
