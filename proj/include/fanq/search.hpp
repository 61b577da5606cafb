#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fanq/config.hpp"
#include "fanq/enumeration.hpp"
#include "fanq/graph.hpp"
#include "fanq/matching.hpp"

namespace fanq {

/// Where an exhaustive scan gets its graphs: the internal generator, or an
/// external graph6 stream holding one graph per isomorphism class.
struct GraphSource {
  enum class Kind { enumeration, graph6_text };

  Kind kind = Kind::enumeration;
  /// graph6 lines, used when kind == graph6_text.
  std::string text;
  bool fail_fast = true;

  static GraphSource enumeration() { return {}; }
  static GraphSource graph6(std::string text, bool fail_fast = true) {
    return {Kind::graph6_text, std::move(text), fail_fast};
  }
};

struct SearchOptions {
  Tolerances tolerances;
  /// Enumeration is split into this many shards (ignored for graph6 sources).
  int shards = 1;
  /// Worker threads; 0 means one per available processor.
  int jobs = 1;
};

struct RankedGraph {
  CanonicalForm form;
  double q1 = 0.0;
};

enum class Verdict {
  /// Inside the theorem's regime and the complete split graph is the unique maximiser.
  confirmed,
  /// Inside the regime and something else attains (or ties) the maximum.
  counterexample,
  /// k = 1 or n < 3k^2 - k - 2: the scan is reported without a uniqueness claim.
  outside_theorem_regime,
};

std::string_view verdict_name(Verdict v);

/// Smallest n covered by the split-graph maximality statement: 3k^2 - k - 2.
int theorem_threshold(int k);
bool in_theorem_regime(int n, int k);

struct SearchCertificate {
  int n = 0;
  int k = 0;
  CanonicalForm winner;
  double winner_q1 = 0.0;
  bool winner_is_split = false;
  /// Only one graph survives exact tie re-verification.
  bool unique = false;
  double runner_up_q1 = 0.0;
  double margin = 0.0;
  std::uint64_t scanned = 0;
  std::uint64_t total = 0;
  double elapsed = 0.0;
  Tolerances tolerances;
  bool in_theorem_regime = false;
  Verdict verdict = Verdict::outside_theorem_regime;
  /// Best five F_k-free graphs by (q1 descending, canonical form ascending).
  std::vector<RankedGraph> top;
  /// All graphs within the equality margin of the maximum.
  std::vector<RankedGraph> near_maximal;
};

/// Scans every isomorphism class of order n, keeps the F_k-free ones, and
/// ranks them by q1.
SearchCertificate certify_max_q1(int n, int k, const GraphSource& source = GraphSource::enumeration(),
                                 const SearchOptions& options = {});

enum class PatternKind { matching, fan };

/// kK2 (k disjoint edges) or F_k.
struct Pattern {
  PatternKind kind = PatternKind::fan;
  int k = 1;

  bool avoided_by(const Graph& g) const;
  std::string describe() const;
};

struct TuranRecord {
  int n = 0;
  Pattern pattern;
  int max_edges = 0;
  /// Canonical forms of every extremal graph, sorted.
  std::vector<CanonicalForm> extremal;
  /// Predicted regime; only defined for kK2 with n >= 2k - 1.
  std::optional<Regime> regime;
  std::uint64_t total = 0;
};

TuranRecord turan_bruteforce(int n, const Pattern& pattern, const GraphSource& source = GraphSource::enumeration());

struct EfggValue {
  std::int64_t value = 0;
  /// n >= 50k^2, where the formula is a theorem rather than a construction count.
  bool guaranteed = false;
};

/// floor(n^2/4) + k^2 - k for odd k, floor(n^2/4) + k^2 - 3k/2 for even k.
EfggValue efgg_value(int n, int k);

struct ConstructionSpec {
  int n = 0;
  int k = 0;
  bool odd = true;
  std::string embedded;
  /// Vertices of the embedded part (all in the larger side).
  std::vector<int> embedded_vertices;
  int embedded_edges = 0;
  int embedded_max_degree = 0;
};

struct Construction {
  Graph graph;
  ConstructionSpec spec;
};

/// Complete bipartite graph with parts floor(n/2) and ceil(n/2); the larger
/// side (vertices floor(n/2)..n-1) carries two disjoint K_k (odd k) or a
/// (2k-1)-vertex graph with k^2 - 3k/2 edges and maximum degree k-1 (even k).
/// Needs n >= 4k-1 (odd) or n >= 4k-3 (even). The result is re-checked to be
/// F_k-free with efgg_value(n, k) edges before it is returned.
Construction efgg_construction(int n, int k);

/// The embedded part for even k: circulant with offsets 1..(k-2)/2 on 2k-1
/// vertices plus the matching {i, i+k-1} for i < k-1.
Graph even_fan_embedding(int k);

// Certificates are single JSON documents with fixed field names; reals carry
// 15 significant digits and canonical forms are graph6 text.
std::string certificate_json(const SearchCertificate& cert);
std::string turan_json(const TuranRecord& record);
void emit_certificate(const SearchCertificate& cert, std::ostream& out);
void emit_certificate(const TuranRecord& record, std::ostream& out);
SearchCertificate parse_certificate(const std::string& json);

/// Rounds to 15 significant digits.
double round15(double x);

}  // namespace fanq
