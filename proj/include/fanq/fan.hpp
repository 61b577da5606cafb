#pragma once

#include <optional>
#include <vector>

#include "fanq/graph.hpp"

namespace fanq {

/// An embedding of F_k: `center` together with k disjoint edges of G[N(center)].
struct FanWitness {
  int center = -1;
  std::vector<Edge> pairs;

  friend bool operator==(const FanWitness&, const FanWitness&) = default;
};

/// G contains F_k exactly when some vertex v has k disjoint edges inside
/// N(v). Returns the witness with the smallest center and, for that center,
/// the lexicographically smallest pair list.
std::optional<FanWitness> contains_fan(const Graph& g, int k);

bool is_fan_free(const Graph& g, int k);

/// Checks a witness from scratch: pairs are edges, pairwise disjoint, both
/// endpoints adjacent to the center, exactly k of them.
bool validate_fan_witness(const Graph& g, const FanWitness& w, int k);

/// First non-edge (in lexicographic order) whose addition does not create an
/// F_k. Throws a precondition error if g already contains F_k.
std::optional<Edge> first_unsaturated_pair(const Graph& g, int k);

/// Adding any missing edge creates an F_k. g must be F_k-free.
bool is_fan_saturated(const Graph& g, int k);

/// Every pair of non-adjacent vertices has a common neighbour.
bool common_neighbor_check(const Graph& g);

}  // namespace fanq
