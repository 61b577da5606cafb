#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "fanq/fanq.h"

namespace {

struct GraphHandle {
  fanq_graph* g = nullptr;
  ~GraphHandle() { fanq_graph_free(g); }
};

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  fanq_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status reporting") {
  CHECK(std::string(fanq_version()) == "0.1.0");
  CHECK(std::string(fanq_status_name(FANQ_ERR_PARSE)) == "parse error");
  GraphHandle h;
  CHECK(fanq_graph_from_graph6("Bx", &h.g) == FANQ_ERR_PARSE);
  CHECK(h.g == nullptr);
  CHECK(std::strlen(fanq_last_error()) > 0);
  CHECK(fanq_graph_from_graph6(nullptr, &h.g) == FANQ_ERR_NULL_POINTER);
  CHECK(fanq_graph_new(65, &h.g) == FANQ_ERR_INVALID_ARGUMENT);
  CHECK(fanq_graph_new(3, &h.g) == FANQ_OK);
  CHECK(fanq_graph_add_edge(h.g, 1, 1) == FANQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graphs through the C API") {
  GraphHandle k3;
  REQUIRE(fanq_graph_from_graph6("Bw", &k3.g) == FANQ_OK);
  CHECK(fanq_graph_order(k3.g) == 3);
  CHECK(fanq_graph_size(k3.g) == 3);
  CHECK(fanq_graph_adjacent(k3.g, 0, 2) == 1);
  char* text = nullptr;
  REQUIRE(fanq_graph_to_graph6(k3.g, &text) == FANQ_OK);
  CHECK(take(text) == "Bw");

  GraphHandle a, b, j;
  REQUIRE(fanq_graph_make(FANQ_COMPLETE, 2, 0, &a.g) == FANQ_OK);
  REQUIRE(fanq_graph_make(FANQ_EMPTY, 3, 0, &b.g) == FANQ_OK);
  REQUIRE(fanq_graph_join(a.g, b.g, &j.g) == FANQ_OK);
  CHECK(fanq_graph_size(j.g) == 7);
  int k = -1;
  REQUIRE(fanq_graph_split_parameter(j.g, &k) == FANQ_OK);
  CHECK(k == 2);

  GraphHandle s;
  REQUIRE(fanq_graph_make(FANQ_SPLIT, 10, 2, &s.g) == FANQ_OK);
  uint64_t n2 = 0;
  REQUIRE(fanq_graph_second_neighborhood(s.g, 5, &n2) == FANQ_OK);
  CHECK(n2 == (0x3FCULL & ~(1ULL << 5)));
  int cut = 0;
  REQUIRE(fanq_graph_cut_edges(s.g, 0x3, 0x3FC, &cut) == FANQ_OK);
  CHECK(cut == 16);
  CHECK(fanq_graph_cut_edges(s.g, 0x3, 0x6, &cut) == FANQ_ERR_INVALID_ARGUMENT);

  GraphHandle c;
  REQUIRE(fanq_graph_clone(s.g, &c.g) == FANQ_OK);
  char* f1 = nullptr;
  char* f2 = nullptr;
  REQUIRE(fanq_graph_canonical_form(s.g, &f1) == FANQ_OK);
  REQUIRE(fanq_graph_canonical_form(c.g, &f2) == FANQ_OK);
  CHECK(take(f1) == take(f2));
}

TEST_CASE("spectral functions through the C API") {
  GraphHandle s;
  REQUIRE(fanq_graph_make(FANQ_SPLIT, 10, 2, &s.g) == FANQ_OK);
  double q = 0;
  REQUIRE(fanq_q1(s.g, &q) == FANQ_OK);
  CHECK(std::abs(q - (6 + 4 * std::sqrt(2.0))) < 1e-9);
  double closed = 0;
  REQUIRE(fanq_q1_split_closed_form(10, 2, &closed) == FANQ_OK);
  CHECK(std::abs(q - closed) < 1e-9);
  double lower = 0;
  REQUIRE(fanq_q1_split_lower_bound(10, 2, &lower) == FANQ_OK);
  CHECK(lower <= closed);
  CHECK(fanq_q1_split_lower_bound(8, 3, &lower) == FANQ_ERR_INVALID_ARGUMENT);

  std::vector<double> ev(10);
  REQUIRE(fanq_signless_spectrum(s.g, ev.data(), ev.size()) == FANQ_OK);
  CHECK(ev[0] == q);
  CHECK(fanq_signless_spectrum(s.g, ev.data(), 3) == FANQ_ERR_INVALID_ARGUMENT);

  GraphHandle c5;
  REQUIRE(fanq_graph_make(FANQ_CYCLE, 5, 0, &c5.g) == FANQ_OK);
  double merris = 0;
  int vertex = -1;
  REQUIRE(fanq_merris_bound(c5.g, &merris, &vertex) == FANQ_OK);
  CHECK(std::abs(merris - 4) < 1e-12);
  CHECK(vertex == 0);
  int64_t lhs = 0, rhs = 0;
  int equal = 0;
  REQUIRE(fanq_degree_sum_identity(c5.g, 0, &lhs, &rhs, &equal) == FANQ_OK);
  CHECK(lhs == 4);
  CHECK(rhs == 4);
  CHECK(equal == 1);

  GraphHandle e;
  REQUIRE(fanq_graph_make(FANQ_EMPTY, 3, 0, &e.g) == FANQ_OK);
  CHECK(fanq_merris_bound(e.g, &merris, &vertex) == FANQ_ERR_PRECONDITION);
}

TEST_CASE("matchings and fans through the C API") {
  int64_t value = 0;
  fanq_regime regime = FANQ_REGIME_CLIQUE;
  REQUIRE(fanq_max_edges_matching(9, 3, &value, &regime) == FANQ_OK);
  CHECK(value == 21);
  CHECK(regime == FANQ_REGIME_BOUNDARY);
  REQUIRE(fanq_turan_kk2(7, 2, &value, &regime) == FANQ_OK);
  CHECK(value == 6);
  CHECK(regime == FANQ_REGIME_SPLIT);

  GraphHandle k5;
  REQUIRE(fanq_graph_make(FANQ_COMPLETE, 5, 0, &k5.g) == FANQ_OK);
  int m = 0;
  REQUIRE(fanq_matching_number(k5.g, &m) == FANQ_OK);
  CHECK(m == 2);
  int free = 1;
  REQUIRE(fanq_is_kk2_free(k5.g, 3, &free) == FANQ_OK);
  CHECK(free == 1);

  int contains = 0, center = -1;
  int pairs[4] = {};
  REQUIRE(fanq_contains_fan(k5.g, 2, &contains, &center, pairs) == FANQ_OK);
  CHECK(contains == 1);
  CHECK(center == 0);
  CHECK(pairs[0] == 1);
  CHECK(pairs[3] == 4);
  int saturated = 0;
  CHECK(fanq_is_fan_saturated(k5.g, 2, &saturated) == FANQ_ERR_PRECONDITION);

  GraphHandle s;
  REQUIRE(fanq_graph_make(FANQ_SPLIT, 8, 2, &s.g) == FANQ_OK);
  REQUIRE(fanq_is_fan_saturated(s.g, 2, &saturated) == FANQ_OK);
  CHECK(saturated == 1);
  int common = 0;
  REQUIRE(fanq_common_neighbor_check(s.g, &common) == FANQ_OK);
  CHECK(common == 1);
}

TEST_CASE("enumeration through the C API") {
  uint64_t count = 0;
  REQUIRE(fanq_enumerate(5, 0, 0, 0, nullptr, nullptr, &count) == FANQ_OK);
  CHECK(count == 34);

  struct State {
    int seen = 0;
  } state;
  auto stop_after_three = [](const fanq_graph* g, void* user) -> int {
    auto* st = static_cast<State*>(user);
    CHECK(fanq_graph_order(g) == 6);
    return ++st->seen == 3 ? 1 : 0;
  };
  REQUIRE(fanq_enumerate(6, 0, 0, 0, stop_after_three, &state, &count) == FANQ_OK);
  CHECK(state.seen == 3);
  CHECK(count == 3);

  uint64_t total = 0;
  for (int i = 0; i < 3; ++i) {
    REQUIRE(fanq_enumerate(6, 1, i, 3, nullptr, nullptr, &count) == FANQ_OK);
    total += count;
  }
  CHECK(total == 112);
  CHECK(fanq_enumerate(12, 0, 0, 0, nullptr, nullptr, &count) == FANQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("certification through the C API") {
  fanq_search_options opts = fanq_default_search_options();
  CHECK(opts.tolerances.eigen == 1e-9);
  CHECK(opts.tolerances.margin == 1e-6);
  fanq_certificate* cert = nullptr;
  REQUIRE(fanq_certify(8, 2, &opts, nullptr, 1, &cert) == FANQ_OK);
  CHECK(fanq_certificate_verdict(cert) == FANQ_VERDICT_CONFIRMED);
  CHECK(fanq_certificate_exit_code(cert) == 0);
  CHECK(fanq_certificate_winner_is_split(cert) == 1);
  CHECK(std::abs(fanq_certificate_winner_q1(cert) - (5 + std::sqrt(21.0))) < 1e-9);
  char* json = nullptr;
  REQUIRE(fanq_certificate_json(cert, &json) == FANQ_OK);
  CHECK(take(json).find("\"verdict\": \"confirmed\"") != std::string::npos);
  fanq_certificate_free(cert);

  cert = nullptr;
  REQUIRE(fanq_certify(6, 2, nullptr, nullptr, 1, &cert) == FANQ_OK);
  CHECK(fanq_certificate_verdict(cert) == FANQ_VERDICT_OUTSIDE_REGIME);
  CHECK(fanq_certificate_exit_code(cert) == 0);
  fanq_certificate_free(cert);

  CHECK(fanq_certify(7, 2, nullptr, "Bw\n", 1, &cert) != FANQ_OK);

  char* turan = nullptr;
  REQUIRE(fanq_turan(6, FANQ_PATTERN_FAN, 1, nullptr, 1, &turan) == FANQ_OK);
  CHECK(take(turan).find("\"max_edges\": 9") != std::string::npos);

  int64_t value = 0;
  int guaranteed = 1;
  REQUIRE(fanq_efgg_value(101, 3, &value, &guaranteed) == FANQ_OK);
  CHECK(value == 2556);
  CHECK(guaranteed == 0);

  GraphHandle g;
  char* spec = nullptr;
  REQUIRE(fanq_efgg_construction(11, 3, &g.g, &spec) == FANQ_OK);
  CHECK(fanq_graph_size(g.g) == 36);
  CHECK(take(spec).find("\"k\":3") != std::string::npos);
}
