#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanq/graph.hpp"

namespace fanq {

/// graph6 text of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// labeling[i] is the vertex of the input placed at canonical position i.
  std::vector<int> labeling;
  Graph canonical;
  /// Smallest vertex of each vertex's automorphism orbit.
  std::vector<int> orbits;
  /// Automorphisms found during the search (image of each vertex); they
  /// generate the full automorphism group.
  std::vector<std::vector<int>> generators;
};

/// Individualisation-refinement search seeded by degree refinement, with
/// pruning by the automorphisms found so far.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// k when g is isomorphic to the complete split graph S_{n,k}.
std::optional<int> complete_split_parameter(const Graph& g);

/// Canonical augmentation test: is `v` in the automorphism orbit of the vertex
/// the canonical labelling puts last? On success, *canonical receives the
/// canonically relabelled graph.
bool is_canonical_extension(const Graph& g, int v, Graph* canonical = nullptr);

inline constexpr int kMaxEnumerationOrder = 11;

struct Shard {
  int index = 0;
  int count = 1;
};

struct EnumerationTask {
  int n = 1;
  bool connected_only = false;
  std::optional<Shard> shard;

  void validate() const;
};

using GraphSink = std::function<void(const Graph&)>;

/// Streams one canonical representative per isomorphism class of order n.
///
/// Orderly generation: a graph is grown from its parent (itself canonical) by
/// one vertex adjacent to some subset, and kept only when that vertex lies in
/// the canonical last orbit. Within one parent, children are emitted in
/// lexicographic order of canonical form. A shard keeps the parents on level
/// n-1 whose index is congruent to shard.index modulo shard.count.
///
/// Returns the number of graphs passed to the sink.
std::uint64_t enumerate(const EnumerationTask& task, const GraphSink& sink);
std::vector<Graph> enumerate_all(const EnumerationTask& task);

struct StreamOptions {
  /// Stop at the first malformed line; otherwise skip it and record a diagnostic.
  bool fail_fast = true;
};

struct StreamDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct StreamStats {
  std::size_t graphs = 0;
  std::size_t skipped = 0;
  std::vector<StreamDiagnostic> diagnostics;
};

/// Reads newline-separated graph6 lines. Blank lines are ignored. With
/// fail_fast a malformed line throws ErrorCode::parse naming its line number.
StreamStats stream_graph6(std::istream& in, const GraphSink& sink, const StreamOptions& options = {});
void write_graph6(std::ostream& out, std::span<const Graph> graphs);

}  // namespace fanq
