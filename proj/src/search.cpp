#include "fanq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "fanq/error.hpp"
#include "fanq/fan.hpp"
#include "fanq/spectral.hpp"

namespace fanq {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::counterexample: return "counterexample";
    case Verdict::outside_theorem_regime: return "outside theorem regime";
  }
  return "unknown";
}

int theorem_threshold(int k) { return 3 * k * k - k - 2; }

bool in_theorem_regime(int n, int k) { return k >= 2 && n >= theorem_threshold(k); }

bool Pattern::avoided_by(const Graph& g) const {
  return kind == PatternKind::matching ? is_kk2_free(g, k) : is_fan_free(g, k);
}

std::string Pattern::describe() const {
  return kind == PatternKind::matching ? std::to_string(k) + "K2" : "F_" + std::to_string(k);
}

namespace {

constexpr std::size_t kTopCount = 5;

bool ranks_before(const RankedGraph& a, const RankedGraph& b) {
  if (a.q1 != b.q1) return a.q1 > b.q1;
  return a.form < b.form;
}

// Per-shard running state of the scan.
struct Tally {
  std::uint64_t total = 0;
  std::uint64_t scanned = 0;
  std::vector<RankedGraph> top;
  std::vector<RankedGraph> near;
  double best = -std::numeric_limits<double>::infinity();

  bool wants(double q, double margin) const {
    return top.size() < kTopCount || q >= top.back().q1 || q >= best - margin;
  }

  void offer(RankedGraph entry, double margin) {
    if (entry.q1 > best) {
      best = entry.q1;
      std::erase_if(near, [&](const RankedGraph& r) { return r.q1 < best - margin; });
    }
    if (entry.q1 >= best - margin) near.push_back(entry);
    auto at = std::lower_bound(top.begin(), top.end(), entry, ranks_before);
    top.insert(at, std::move(entry));
    if (top.size() > kTopCount) top.pop_back();
  }

  void merge(const Tally& other, double margin) {
    total += other.total;
    scanned += other.scanned;
    for (const RankedGraph& r : other.near) {
      if (r.q1 > best) {
        best = r.q1;
        std::erase_if(near, [&](const RankedGraph& x) { return x.q1 < best - margin; });
      }
      if (r.q1 >= best - margin) near.push_back(r);
    }
    top.insert(top.end(), other.top.begin(), other.top.end());
    std::sort(top.begin(), top.end(), ranks_before);
    if (top.size() > kTopCount) top.resize(kTopCount);
  }
};

// Feeds every graph of the source to visit(graph, already_canonical).
template <class Visit>
void scan_source(int n, const GraphSource& source, const std::optional<Shard>& shard, Visit&& visit) {
  if (source.kind == GraphSource::Kind::enumeration) {
    EnumerationTask task{n, false, shard};
    enumerate(task, [&](const Graph& g) { visit(g, true); });
    return;
  }
  std::istringstream in(source.text);
  StreamOptions options{source.fail_fast};
  stream_graph6(in, [&](const Graph& g) {
    if (g.order() != n)
      fail(ErrorCode::invalid_argument, "graph6 source holds a graph of order " + std::to_string(g.order()) +
                                            ", expected " + std::to_string(n));
    visit(g, false);
  }, options);
}

Tally scan_shard(int n, int k, const GraphSource& source, const std::optional<Shard>& shard, const Tolerances& tol) {
  Tally tally;
  scan_source(n, source, shard, [&](const Graph& input, bool canonical) {
    ++tally.total;
    if (!is_fan_free(input, k)) return;
    ++tally.scanned;
    // q1 is always taken on the canonical relabelling so equal classes give
    // bit-identical values whatever the source.
    const Graph g = canonical ? input : canonical_labeling(input).canonical;
    const double q = q1(g, tol);
    if (tally.wants(q, tol.margin)) tally.offer({CanonicalForm{graph6_encode(g)}, q}, tol.margin);
  });
  return tally;
}

}  // namespace

SearchCertificate certify_max_q1(int n, int k, const GraphSource& source, const SearchOptions& options) {
  require(k >= 1, "fan parameter k must be positive");
  require(n >= 1 && n <= kMaxVertices, "order out of range");
  if (source.kind == GraphSource::Kind::enumeration) EnumerationTask{n, false, std::nullopt}.validate();
  require(options.shards >= 1, "shard count must be positive");
  const Tolerances& tol = options.tolerances;
  require(tol.eigen > 0 && tol.margin > 0 && tol.tie_exact > 0, "tolerances must be positive");

  const auto start = std::chrono::steady_clock::now();
  Tally result;
  if (source.kind == GraphSource::Kind::graph6_text || options.shards == 1) {
    result = scan_shard(n, k, source, std::nullopt, tol);
  } else {
    const int shards = options.shards;
    int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    jobs = std::min(jobs, shards);
    std::vector<Tally> partial(static_cast<std::size_t>(shards));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next++; i < shards; i = next++) {
        try {
          partial[static_cast<std::size_t>(i)] = scan_shard(n, k, source, Shard{i, shards}, tol);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const Tally& t : partial) result.merge(t, tol.margin);
  }

  if (result.top.empty()) fail(ErrorCode::internal, "no F_k-free graph found; the edgeless graph always qualifies");

  SearchCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.tolerances = tol;
  cert.total = result.total;
  cert.scanned = result.scanned;
  cert.top = result.top;
  cert.winner = result.top.front().form;
  cert.winner_q1 = result.top.front().q1;
  cert.runner_up_q1 = result.top.size() > 1 ? result.top[1].q1 : 0.0;
  cert.margin = cert.winner_q1 - cert.runner_up_q1;

  std::sort(result.near.begin(), result.near.end(), ranks_before);
  cert.near_maximal = result.near;

  // Never claim uniqueness on a floating-point tie: re-solve every near-maximal
  // graph with a tightened eigensolver and count those still level with the best.
  Tolerances tight = tol;
  tight.offdiag_factor = std::min(tol.offdiag_factor, 1e-14);
  const double best = q1(graph6_decode(cert.winner.bytes), tight);
  std::size_t level = 0;
  for (const RankedGraph& r : cert.near_maximal) {
    if (std::abs(q1(graph6_decode(r.form.bytes), tight) - best) <= tol.tie_exact) ++level;
  }
  cert.unique = level == 1;

  const double check = q1(graph6_decode(cert.winner.bytes), tol);
  if (std::abs(check - cert.winner_q1) > tol.eigen)
    fail(ErrorCode::internal, "winner q1 does not reproduce on an independent eigensolve");

  cert.winner_is_split = n > k && cert.winner == canonical_form(make_split(n, k));
  cert.in_theorem_regime = in_theorem_regime(n, k);
  if (!cert.in_theorem_regime) {
    cert.verdict = Verdict::outside_theorem_regime;
  } else {
    cert.verdict = cert.winner_is_split && cert.unique ? Verdict::confirmed : Verdict::counterexample;
  }
  cert.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

TuranRecord turan_bruteforce(int n, const Pattern& pattern, const GraphSource& source) {
  require(pattern.k >= 1, "pattern parameter must be positive");
  require(n >= 1 && n <= kMaxVertices, "order out of range");
  TuranRecord record;
  record.n = n;
  record.pattern = pattern;
  record.max_edges = -1;
  scan_source(n, source, std::nullopt, [&](const Graph& input, bool canonical) {
    ++record.total;
    const int e = input.size();
    if (e < record.max_edges || !pattern.avoided_by(input)) return;
    if (e > record.max_edges) {
      record.max_edges = e;
      record.extremal.clear();
    }
    record.extremal.push_back(canonical ? CanonicalForm{graph6_encode(input)} : canonical_form(input));
  });
  if (record.max_edges < 0) fail(ErrorCode::invalid_argument, "graph source was empty");
  std::sort(record.extremal.begin(), record.extremal.end());
  record.extremal.erase(std::unique(record.extremal.begin(), record.extremal.end()), record.extremal.end());
  if (pattern.kind == PatternKind::matching && pattern.k >= 2 && n >= 2 * pattern.k - 1)
    record.regime = turan_kk2(n, pattern.k).regime;
  return record;
}

}  // namespace fanq
