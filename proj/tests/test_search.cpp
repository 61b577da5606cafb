#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fanq/error.hpp"
#include "fanq/fan.hpp"
#include "fanq/search.hpp"
#include "fanq/spectral.hpp"

using namespace fanq;

TEST_CASE("theorem regime") {
  CHECK(theorem_threshold(2) == 8);
  CHECK(theorem_threshold(3) == 22);
  CHECK(in_theorem_regime(8, 2));
  CHECK_FALSE(in_theorem_regime(7, 2));
  CHECK_FALSE(in_theorem_regime(100, 1));
}

TEST_CASE("efgg values") {
  CHECK(efgg_value(100, 1).value == 2500);
  CHECK(efgg_value(100, 2).value == 2501);
  CHECK(efgg_value(101, 3).value == 2556);
  CHECK_FALSE(efgg_value(100, 2).guaranteed);
  CHECK(efgg_value(200, 2).guaranteed);
  CHECK(efgg_value(49, 1).guaranteed == false);
  CHECK(efgg_value(50, 1).guaranteed);
}

TEST_CASE("efgg constructions") {
  const Construction k1 = efgg_construction(8, 1);
  CHECK(k1.graph.size() == 16);
  CHECK(k1.graph == make_complete_bipartite(4, 4));

  const Construction k2 = efgg_construction(7, 2);
  CHECK(k2.graph.size() == 13);
  CHECK(is_fan_free(k2.graph, 2));
  CHECK_FALSE(k2.spec.odd);
  CHECK(k2.spec.embedded_vertices.size() == 3);
  CHECK(k2.spec.embedded_edges == 1);
  CHECK(k2.spec.embedded_max_degree == 1);

  const Construction k3 = efgg_construction(11, 3);
  CHECK(k3.graph.size() == 36);
  CHECK(is_fan_free(k3.graph, 3));
  CHECK_FALSE(is_fan_free(k3.graph, 2));
  for (int v : k3.spec.embedded_vertices) CHECK(v >= 5);

  CHECK_THROWS_AS(efgg_construction(10, 3), Error);
  CHECK_THROWS_AS(efgg_construction(4, 2), Error);

  for (int k = 2; k <= 10; k += 2) {
    const Graph e = even_fan_embedding(k);
    CHECK(e.order() == 2 * k - 1);
    CHECK(2 * e.size() == 2 * k * k - 3 * k);
    CHECK(e.max_degree() == k - 1);
  }
}

TEST_CASE("Turan brute force") {
  const TuranRecord t = turan_bruteforce(7, {PatternKind::matching, 2});
  CHECK(t.max_edges == 6);
  REQUIRE(t.extremal.size() == 1);
  CHECK(t.extremal[0] == canonical_form(make_split(7, 1)));
  CHECK(t.regime == Regime::split);
  CHECK(t.total == 1044);

  CHECK(turan_bruteforce(6, {PatternKind::fan, 1}).max_edges == 9);
  const TuranRecord tri = turan_bruteforce(7, {PatternKind::fan, 1});
  CHECK(tri.max_edges == 12);
  REQUIRE(tri.extremal.size() == 1);
  CHECK(tri.extremal[0] == canonical_form(make_complete_bipartite(3, 4)));
  CHECK_FALSE(tri.regime.has_value());

  const TuranRecord k5 = turan_bruteforce(5, {PatternKind::matching, 3});
  CHECK(k5.max_edges == 10);
  REQUIRE(k5.extremal.size() == 1);
  CHECK(k5.extremal[0] == canonical_form(make_complete(5)));

  CHECK(Pattern{PatternKind::matching, 2}.describe() == "2K2");
  CHECK(Pattern{PatternKind::fan, 1}.describe() == "F_1");
}

TEST_CASE("certify outside the theorem regime") {
  const SearchCertificate c = certify_max_q1(6, 2);
  CHECK(c.verdict == Verdict::outside_theorem_regime);
  CHECK_FALSE(c.in_theorem_regime);
  CHECK(c.total == 156);
  CHECK(c.scanned > 0);
  CHECK(c.scanned <= c.total);

  // k = 1: triangle-free maximisers are the complete bipartite graphs on 6 vertices.
  const SearchCertificate t = certify_max_q1(6, 1);
  CHECK(std::abs(t.winner_q1 - 6.0) < 1e-9);
  CHECK_FALSE(t.unique);
  CHECK(t.near_maximal.size() == 3);  // K_{1,5}, K_{2,4}, K_{3,3}
  CHECK(t.verdict == Verdict::outside_theorem_regime);
}

TEST_CASE("certify at the regime boundary") {
  const SearchCertificate c = certify_max_q1(8, 2);
  CHECK(c.verdict == Verdict::confirmed);
  CHECK(c.winner_is_split);
  CHECK(c.unique);
  CHECK(c.winner == canonical_form(make_split(8, 2)));
  CHECK(std::abs(c.winner_q1 - (5.0 + std::sqrt(21.0))) < 1e-9);
  CHECK(c.margin > 1e-6);
  CHECK(c.total == 12346);
  CHECK(c.top.size() == 5);
  CHECK(c.top[0].form == c.winner);
  CHECK(c.runner_up_q1 == doctest::Approx(c.top[1].q1));

  SearchOptions sharded;
  sharded.shards = 4;
  sharded.jobs = 2;
  const SearchCertificate s = certify_max_q1(8, 2, GraphSource::enumeration(), sharded);
  CHECK(s.winner == c.winner);
  CHECK(s.winner_q1 == c.winner_q1);
  CHECK(s.scanned == c.scanned);
  CHECK(s.margin == c.margin);
  REQUIRE(s.top.size() == c.top.size());
  for (std::size_t i = 0; i < s.top.size(); ++i) {
    CHECK(s.top[i].form == c.top[i].form);
    CHECK(s.top[i].q1 == c.top[i].q1);
  }
}

TEST_CASE("certify from a graph6 source") {
  std::ostringstream text;
  write_graph6(text, enumerate_all({7, false, std::nullopt}));
  const SearchCertificate a = certify_max_q1(7, 2, GraphSource::graph6(text.str()));
  const SearchCertificate b = certify_max_q1(7, 2);
  CHECK(a.winner == b.winner);
  CHECK(a.scanned == b.scanned);
  CHECK(a.total == 1044);

  CHECK_THROWS_AS(certify_max_q1(7, 2, GraphSource::graph6("Bw\n")), Error);
  CHECK_THROWS_AS(certify_max_q1(7, 2, GraphSource::graph6("F????\nBx\n")), Error);
  CHECK_THROWS_AS(certify_max_q1(7, 2, GraphSource::graph6("")), Error);
  CHECK_THROWS_AS(certify_max_q1(0, 2), Error);
}

TEST_CASE("certificate JSON") {
  const SearchCertificate c = certify_max_q1(8, 2);
  const std::string text = certificate_json(c);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["winner"] == canonical_form(make_split(8, 2)).bytes);
  CHECK(j["winner_is_split"] == true);
  CHECK(j["verdict"] == "confirmed");
  CHECK(j["tolerances"]["eigen"] == 1e-9);

  const SearchCertificate back = parse_certificate(text);
  CHECK(back.winner == c.winner);
  CHECK(back.total == c.total);
  CHECK(back.verdict == c.verdict);
  CHECK(std::abs(q1(graph6_decode(back.winner.bytes)) - back.winner_q1) < 1e-9);
  CHECK(certificate_json(back) == text);

  std::ostringstream out;
  emit_certificate(turan_bruteforce(7, {PatternKind::matching, 2}), out);
  const auto t = nlohmann::json::parse(out.str());
  CHECK(t["max_edges"] == 6);
  CHECK(t["regime"] == "split-regime");

  CHECK(round15(1.0 / 3.0) == 0.333333333333333);
  CHECK_THROWS_AS(parse_certificate("{"), Error);
}
