#include "fanq/fanq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fanq/enumeration.hpp"
#include "fanq/error.hpp"
#include "fanq/fan.hpp"
#include "fanq/matching.hpp"
#include "fanq/search.hpp"
#include "fanq/spectral.hpp"
#include "json.hpp"

struct fanq_graph {
  fanq::Graph graph;
};

struct fanq_certificate {
  fanq::SearchCertificate cert;
};

namespace {

thread_local std::string last_error;

struct NullArgument {
  std::string message;
};

fanq_status status_of(fanq::ErrorCode code) {
  switch (code) {
    case fanq::ErrorCode::invalid_argument: return FANQ_ERR_INVALID_ARGUMENT;
    case fanq::ErrorCode::parse: return FANQ_ERR_PARSE;
    case fanq::ErrorCode::precondition: return FANQ_ERR_PRECONDITION;
    case fanq::ErrorCode::internal: return FANQ_ERR_INTERNAL;
    case fanq::ErrorCode::io: return FANQ_ERR_IO;
  }
  return FANQ_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class Body>
fanq_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return FANQ_OK;
  } catch (const NullArgument& e) {
    last_error = e.message;
    return FANQ_ERR_NULL_POINTER;
  } catch (const fanq::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FANQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FANQ_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw NullArgument{std::string(name) + " is null"};
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fanq::Tolerances to_tolerances(const fanq_tolerances& t) {
  fanq::Tolerances out;
  out.eigen = t.eigen;
  out.margin = t.margin;
  out.tie_exact = t.tie_exact;
  return out;
}

fanq_regime to_regime(fanq::Regime r) {
  switch (r) {
    case fanq::Regime::clique: return FANQ_REGIME_CLIQUE;
    case fanq::Regime::split: return FANQ_REGIME_SPLIT;
    case fanq::Regime::boundary: return FANQ_REGIME_BOUNDARY;
  }
  return FANQ_REGIME_CLIQUE;
}

fanq::GraphSource source_of(const char* graph6_text, int fail_fast) {
  if (graph6_text == nullptr) return fanq::GraphSource::enumeration();
  return fanq::GraphSource::graph6(graph6_text, fail_fast != 0);
}

const fanq::Graph& graph_of(const fanq_graph* g) {
  need(g, "graph");
  return g->graph;
}

}  // namespace

extern "C" {

FANQ_API const char* fanq_version(void) { return "0.1.0"; }

FANQ_API const char* fanq_last_error(void) { return last_error.c_str(); }

FANQ_API const char* fanq_status_name(fanq_status status) {
  switch (status) {
    case FANQ_OK: return "ok";
    case FANQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FANQ_ERR_PARSE: return "parse error";
    case FANQ_ERR_PRECONDITION: return "precondition violated";
    case FANQ_ERR_INTERNAL: return "internal error";
    case FANQ_ERR_IO: return "i/o error";
    case FANQ_ERR_NULL_POINTER: return "null pointer";
  }
  return "unknown status";
}

FANQ_API void fanq_string_free(char* s) { std::free(s); }

FANQ_API fanq_tolerances fanq_default_tolerances(void) {
  const fanq::Tolerances t;
  return {t.eigen, t.margin, t.tie_exact};
}

FANQ_API fanq_search_options fanq_default_search_options(void) { return {fanq_default_tolerances(), 1, 1}; }

FANQ_API fanq_status fanq_graph_new(int n, fanq_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fanq_graph{fanq::Graph(n)};
  });
}

FANQ_API fanq_status fanq_graph_from_graph6(const char* text, fanq_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new fanq_graph{fanq::graph6_decode(text)};
  });
}

FANQ_API fanq_status fanq_graph_make(fanq_named_kind kind, int a, int b, fanq_graph** out) {
  return guarded([&] {
    need(out, "out");
    fanq::NamedGraphSpec spec;
    switch (kind) {
      case FANQ_COMPLETE: spec = {fanq::NamedKind::complete, {a}}; break;
      case FANQ_SPLIT: spec = {fanq::NamedKind::split, {a, b}}; break;
      case FANQ_FAN: spec = {fanq::NamedKind::fan, {a}}; break;
      case FANQ_COMPLETE_BIPARTITE: spec = {fanq::NamedKind::complete_bipartite, {a, b}}; break;
      case FANQ_CYCLE: spec = {fanq::NamedKind::cycle, {a}}; break;
      case FANQ_PATH: spec = {fanq::NamedKind::path, {a}}; break;
      case FANQ_EMPTY: spec = {fanq::NamedKind::empty, {a}}; break;
      default: throw fanq::Error(fanq::ErrorCode::invalid_argument, "unknown named graph kind");
    }
    *out = new fanq_graph{fanq::make_named(spec)};
  });
}

FANQ_API fanq_status fanq_graph_join(const fanq_graph* g, const fanq_graph* h, fanq_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fanq_graph{fanq::join(graph_of(g), graph_of(h))};
  });
}

FANQ_API fanq_status fanq_graph_clone(const fanq_graph* g, fanq_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fanq_graph{graph_of(g)};
  });
}

FANQ_API void fanq_graph_free(fanq_graph* g) { delete g; }

FANQ_API fanq_status fanq_graph_add_edge(fanq_graph* g, int u, int v) {
  return guarded([&] {
    need(g, "graph");
    g->graph.add_edge(u, v);
  });
}

FANQ_API int fanq_graph_order(const fanq_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

FANQ_API int fanq_graph_size(const fanq_graph* g) { return g == nullptr ? -1 : g->graph.size(); }

FANQ_API int fanq_graph_adjacent(const fanq_graph* g, int u, int v) {
  if (g == nullptr || u < 0 || v < 0 || u >= g->graph.order() || v >= g->graph.order()) return 0;
  return g->graph.adjacent(u, v) ? 1 : 0;
}

FANQ_API fanq_status fanq_graph_to_graph6(const fanq_graph* g, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = duplicate(fanq::graph6_encode(graph_of(g)));
  });
}

FANQ_API fanq_status fanq_graph_canonical_form(const fanq_graph* g, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = duplicate(fanq::canonical_form(graph_of(g)).bytes);
  });
}

FANQ_API fanq_status fanq_graph_split_parameter(const fanq_graph* g, int* k_out) {
  return guarded([&] {
    need(k_out, "k_out");
    *k_out = fanq::complete_split_parameter(graph_of(g)).value_or(0);
  });
}

FANQ_API fanq_status fanq_graph_second_neighborhood(const fanq_graph* g, int v, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::second_neighborhood(graph_of(g), v);
  });
}

FANQ_API fanq_status fanq_graph_cut_edges(const fanq_graph* g, uint64_t s, uint64_t t, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::cut_edges(graph_of(g), s, t);
  });
}

FANQ_API fanq_status fanq_q1(const fanq_graph* g, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::q1(graph_of(g));
  });
}

FANQ_API fanq_status fanq_signless_spectrum(const fanq_graph* g, double* eigenvalues, size_t capacity) {
  return guarded([&] {
    const fanq::Graph& graph = graph_of(g);
    need(eigenvalues, "eigenvalues");
    if (capacity < static_cast<size_t>(graph.order()))
      throw fanq::Error(fanq::ErrorCode::invalid_argument, "eigenvalue buffer smaller than graph order");
    const auto result = fanq::spectrum(fanq::signless_laplacian(graph));
    std::copy(result.eigenvalues.begin(), result.eigenvalues.end(), eigenvalues);
  });
}

FANQ_API fanq_status fanq_merris_bound(const fanq_graph* g, double* value, int* vertex) {
  return guarded([&] {
    need(value, "value");
    const auto bound = fanq::merris_bound(graph_of(g));
    *value = bound.value;
    if (vertex != nullptr) *vertex = bound.vertex;
  });
}

FANQ_API fanq_status fanq_q1_split_closed_form(int n, int k, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::q1_split_closed_form(n, k);
  });
}

FANQ_API fanq_status fanq_q1_split_lower_bound(int n, int k, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::q1_split_lower_bound(n, k);
  });
}

FANQ_API fanq_status fanq_degree_sum_identity(const fanq_graph* g, int v, int64_t* lhs, int64_t* rhs, int* equal) {
  return guarded([&] {
    const auto r = fanq::degree_sum_identity(graph_of(g), v);
    if (lhs != nullptr) *lhs = r.lhs;
    if (rhs != nullptr) *rhs = r.rhs;
    if (equal != nullptr) *equal = r.equal ? 1 : 0;
  });
}

FANQ_API fanq_status fanq_matching_number(const fanq_graph* g, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::matching_number(graph_of(g)).size;
  });
}

FANQ_API fanq_status fanq_is_kk2_free(const fanq_graph* g, int k, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::is_kk2_free(graph_of(g), k) ? 1 : 0;
  });
}

FANQ_API fanq_status fanq_max_edges_matching(int n, int alpha, int64_t* value, fanq_regime* regime) {
  return guarded([&] {
    need(value, "value");
    const auto r = fanq::max_edges_matching(n, alpha);
    *value = r.value;
    if (regime != nullptr) *regime = to_regime(r.regime);
  });
}

FANQ_API fanq_status fanq_turan_kk2(int n, int k, int64_t* value, fanq_regime* regime) {
  return guarded([&] {
    need(value, "value");
    const auto r = fanq::turan_kk2(n, k);
    *value = r.value;
    if (regime != nullptr) *regime = to_regime(r.regime);
  });
}

FANQ_API fanq_status fanq_contains_fan(const fanq_graph* g, int k, int* contains, int* center, int* pairs) {
  return guarded([&] {
    need(contains, "contains");
    const auto w = fanq::contains_fan(graph_of(g), k);
    *contains = w ? 1 : 0;
    if (center != nullptr) *center = w ? w->center : -1;
    if (w && pairs != nullptr) {
      for (std::size_t i = 0; i < w->pairs.size(); ++i) {
        pairs[2 * i] = w->pairs[i].first;
        pairs[2 * i + 1] = w->pairs[i].second;
      }
    }
  });
}

FANQ_API fanq_status fanq_is_fan_saturated(const fanq_graph* g, int k, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::is_fan_saturated(graph_of(g), k) ? 1 : 0;
  });
}

FANQ_API fanq_status fanq_common_neighbor_check(const fanq_graph* g, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = fanq::common_neighbor_check(graph_of(g)) ? 1 : 0;
  });
}

FANQ_API fanq_status fanq_enumerate(int n, int connected_only, int shard_index, int shard_count,
                                    fanq_graph_callback callback, void* user, uint64_t* count) {
  struct Stop {};
  return guarded([&] {
    fanq::EnumerationTask task{n, connected_only != 0, std::nullopt};
    if (shard_count > 0) task.shard = fanq::Shard{shard_index, shard_count};
    std::uint64_t seen = 0;
    fanq_graph handle;
    try {
      fanq::enumerate(task, [&](const fanq::Graph& g) {
        handle.graph = g;
        ++seen;
        if (callback != nullptr && callback(&handle, user) != 0) throw Stop{};
      });
    } catch (const Stop&) {
    }
    if (count != nullptr) *count = seen;
  });
}

FANQ_API fanq_status fanq_certify(int n, int k, const fanq_search_options* options, const char* graph6_text,
                                  int fail_fast, fanq_certificate** out) {
  return guarded([&] {
    need(out, "out");
    const fanq_search_options opts = options != nullptr ? *options : fanq_default_search_options();
    fanq::SearchOptions search;
    search.tolerances = to_tolerances(opts.tolerances);
    search.shards = opts.shards;
    search.jobs = opts.jobs;
    *out = new fanq_certificate{fanq::certify_max_q1(n, k, source_of(graph6_text, fail_fast), search)};
  });
}

FANQ_API void fanq_certificate_free(fanq_certificate* cert) { delete cert; }

FANQ_API fanq_verdict fanq_certificate_verdict(const fanq_certificate* cert) {
  if (cert == nullptr) return FANQ_VERDICT_OUTSIDE_REGIME;
  switch (cert->cert.verdict) {
    case fanq::Verdict::confirmed: return FANQ_VERDICT_CONFIRMED;
    case fanq::Verdict::counterexample: return FANQ_VERDICT_COUNTEREXAMPLE;
    case fanq::Verdict::outside_theorem_regime: return FANQ_VERDICT_OUTSIDE_REGIME;
  }
  return FANQ_VERDICT_OUTSIDE_REGIME;
}

FANQ_API double fanq_certificate_winner_q1(const fanq_certificate* cert) {
  return cert == nullptr ? 0.0 : cert->cert.winner_q1;
}

FANQ_API int fanq_certificate_winner_is_split(const fanq_certificate* cert) {
  return cert != nullptr && cert->cert.winner_is_split ? 1 : 0;
}

FANQ_API int fanq_certificate_exit_code(const fanq_certificate* cert) {
  if (cert == nullptr) return 1;
  return cert->cert.verdict == fanq::Verdict::counterexample ? 2 : 0;
}

FANQ_API fanq_status fanq_certificate_json(const fanq_certificate* cert, char** out) {
  return guarded([&] {
    need(cert, "certificate");
    need(out, "out");
    *out = duplicate(fanq::certificate_json(cert->cert));
  });
}

FANQ_API fanq_status fanq_turan(int n, fanq_pattern pattern, int k, const char* graph6_text, int fail_fast,
                                char** json_out) {
  return guarded([&] {
    need(json_out, "json_out");
    fanq::Pattern p{pattern == FANQ_PATTERN_KK2 ? fanq::PatternKind::matching : fanq::PatternKind::fan, k};
    if (pattern != FANQ_PATTERN_KK2 && pattern != FANQ_PATTERN_FAN)
      throw fanq::Error(fanq::ErrorCode::invalid_argument, "unknown pattern");
    *json_out = duplicate(fanq::turan_json(fanq::turan_bruteforce(n, p, source_of(graph6_text, fail_fast))));
  });
}

FANQ_API fanq_status fanq_efgg_value(int n, int k, int64_t* value, int* guaranteed) {
  return guarded([&] {
    need(value, "value");
    const auto v = fanq::efgg_value(n, k);
    *value = v.value;
    if (guaranteed != nullptr) *guaranteed = v.guaranteed ? 1 : 0;
  });
}

FANQ_API fanq_status fanq_efgg_construction(int n, int k, fanq_graph** out, char** spec_json) {
  return guarded([&] {
    need(out, "out");
    auto built = fanq::efgg_construction(n, k);
    std::string spec;
    if (spec_json != nullptr) {
      nlohmann::ordered_json j;
      j["n"] = built.spec.n;
      j["k"] = built.spec.k;
      j["parity"] = built.spec.odd ? "odd" : "even";
      j["embedded"] = built.spec.embedded;
      j["embedded_vertices"] = built.spec.embedded_vertices;
      j["embedded_edges"] = built.spec.embedded_edges;
      j["embedded_max_degree"] = built.spec.embedded_max_degree;
      j["edges"] = built.graph.size();
      j["graph6"] = fanq::graph6_encode(built.graph);
      spec = j.dump();
    }
    *out = new fanq_graph{std::move(built.graph)};
    if (spec_json != nullptr) *spec_json = duplicate(spec);
  });
}

}  // extern "C"
