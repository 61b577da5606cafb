#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "fanq/enumeration.hpp"
#include "fanq/error.hpp"
#include "support/oracles.hpp"

using namespace fanq;

namespace {

std::set<CanonicalForm> forms(const EnumerationTask& task) {
  std::set<CanonicalForm> out;
  std::size_t emitted = 0;
  enumerate(task, [&](const Graph& g) {
    out.insert(canonical_form(g));
    ++emitted;
  });
  CHECK(out.size() == emitted);  // no duplicates
  return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  const Graph c5 = make_cycle(5);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) CHECK(canonical_form(c5.permuted(oracle::random_permutation(5, rng))) == canonical_form(c5));
  CHECK(canonical_form(make_complete(3)) != canonical_form(make_path(3)));

  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(8, 0.5, rng);
    const CanonicalForm f = canonical_form(g);
    for (int i = 0; i < 100; ++i) CHECK(canonical_form(g.permuted(oracle::random_permutation(8, rng))) == f);
  }

  // Highly symmetric and larger inputs.
  for (const Graph& g : {make_petersen(), make_complete(12), make_empty(12), make_cycle(20),
                         make_complete_bipartite(6, 7), make_split(30, 4)}) {
    const CanonicalForm f = canonical_form(g);
    for (int i = 0; i < 10; ++i) CHECK(canonical_form(g.permuted(oracle::random_permutation(g.order(), rng))) == f);
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  // Both 3-regular on 8 vertices: the cube and two disjoint K4.
  Graph cube(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) cube.add_edge(v, v ^ (1 << b));
  const Graph two_k4 = disjoint_union(make_complete(4), make_complete(4));
  CHECK_FALSE(isomorphic(cube, two_k4));
  CHECK(isomorphic(make_split(6, 5), make_complete(6)));
  CHECK_FALSE(isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3))));
}

TEST_CASE("labelling is a permutation producing the canonical graph") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    const CanonicalLabeling c = canonical_labeling(g);
    std::vector<int> sorted = c.labeling;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 9; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
    CHECK(c.canonical == g.permuted(c.labeling));
    for (const auto& gamma : c.generators)
      for (auto [u, v] : g.edges()) CHECK(g.adjacent(gamma[static_cast<std::size_t>(u)], gamma[static_cast<std::size_t>(v)]));
  }
}

TEST_CASE("automorphism orbits match brute force") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> order(1, 7);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    CHECK(canonical_labeling(g).orbits == oracle::orbits(g));
  }
  for (const Graph& g : {make_cycle(7), make_split(7, 3), make_fan(3), make_complete_bipartite(3, 4)})
    CHECK(canonical_labeling(g).orbits == oracle::orbits(g));
}

TEST_CASE("complete split parameter") {
  CHECK(complete_split_parameter(make_split(8, 2)) == 2);
  std::mt19937_64 rng(3);
  CHECK(complete_split_parameter(make_split(9, 4).permuted(oracle::random_permutation(9, rng))) == 4);
  CHECK_FALSE(complete_split_parameter(make_cycle(5)).has_value());
  CHECK_FALSE(complete_split_parameter(make_empty(4)).has_value());
}

TEST_CASE("enumeration counts match the labeled oracle up to order 6") {
  const std::uint64_t expected[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto classes = oracle::labeled_classes(n);
    CHECK(classes.size() == expected[n - 1]);
    CHECK(enumerate({n, false, std::nullopt}, [](const Graph&) {}) == expected[n - 1]);

    // Same classes, not just the same number: compare complete invariants.
    const oracle::PairIndex idx(n);
    const auto perms = oracle::all_permutations(n);
    std::set<std::uint64_t> ours;
    enumerate({n, false, std::nullopt}, [&](const Graph& g) { ours.insert(oracle::min_mask(idx, idx.mask(g), perms)); });
    CHECK(ours == classes);

    std::set<std::uint64_t> connected;
    enumerate({n, true, std::nullopt}, [&](const Graph& g) {
      CHECK(is_connected(g));
      connected.insert(oracle::min_mask(idx, idx.mask(g), perms));
    });
    CHECK(connected == oracle::labeled_classes(n, true));
  }
}

TEST_CASE("enumeration of order 7 matches the networkx graph atlas") {
  std::ifstream in(FANQ_TEST_DATA_DIR "/atlas_n7.g6");
  REQUIRE(in.good());
  std::set<CanonicalForm> atlas;
  const StreamStats stats = stream_graph6(in, [&](const Graph& g) { atlas.insert(canonical_form(g)); });
  CHECK(stats.graphs == 1044);
  CHECK(atlas.size() == 1044);
  CHECK(forms({7, false, std::nullopt}) == atlas);
  CHECK(enumerate({7, true, std::nullopt}, [](const Graph&) {}) == 853);
}

TEST_CASE("emitted graphs are canonical and in a fixed order") {
  std::vector<std::string> first;
  std::vector<std::string> second;
  enumerate({6, false, std::nullopt}, [&](const Graph& g) {
    CHECK(canonical_labeling(g).canonical == g);
    first.push_back(graph6_encode(g));
  });
  enumerate({6, false, std::nullopt}, [&](const Graph& g) { second.push_back(graph6_encode(g)); });
  CHECK(first == second);
}

TEST_CASE("shards partition the enumeration") {
  for (int n : {5, 7}) {
    for (int count : {1, 2, 3, 8}) {
      std::set<CanonicalForm> merged;
      std::uint64_t total = 0;
      for (int i = 0; i < count; ++i) {
        const auto part = forms({n, false, Shard{i, count}});
        total += part.size();
        merged.insert(part.begin(), part.end());
      }
      CHECK(total == merged.size());
      CHECK(merged == forms({n, false, std::nullopt}));
    }
  }
}

TEST_CASE("enumeration task validation") {
  CHECK_THROWS_AS(enumerate({0, false, std::nullopt}, [](const Graph&) {}), Error);
  CHECK_THROWS_AS(enumerate({kMaxEnumerationOrder + 1, false, std::nullopt}, [](const Graph&) {}), Error);
  CHECK_THROWS_AS(enumerate({5, false, Shard{2, 2}}, [](const Graph&) {}), Error);
  CHECK_THROWS_AS(enumerate({5, false, Shard{0, 0}}, [](const Graph&) {}), Error);
}

TEST_CASE("graph6 streams") {
  std::istringstream empty("");
  CHECK(stream_graph6(empty, [](const Graph&) { FAIL("no graphs expected"); }).graphs == 0);

  std::istringstream one("Bw\n");
  Graph got;
  CHECK(stream_graph6(one, [&](const Graph& g) { got = g; }).graphs == 1);
  CHECK(got == make_complete(3));

  std::istringstream crlf("Bw\r\n\nBg\r\n");
  CHECK(stream_graph6(crlf, [](const Graph&) {}).graphs == 2);

  std::istringstream bad("Bw\nBx\nBg\n");
  try {
    stream_graph6(bad, [](const Graph&) {});
    FAIL("accepted a malformed line");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::istringstream skip("Bw\nBx\nBg\n~\n");
  int seen = 0;
  const StreamStats s = stream_graph6(skip, [&](const Graph&) { ++seen; }, {false});
  CHECK(seen == 2);
  CHECK(s.graphs == 2);
  CHECK(s.skipped == 2);
  REQUIRE(s.diagnostics.size() == 2);
  CHECK(s.diagnostics[0].line == 2);
  CHECK(s.diagnostics[1].line == 4);

  // Round trip through write_graph6 for the whole n = 6 enumeration.
  const auto all = enumerate_all({6, false, std::nullopt});
  std::ostringstream out;
  write_graph6(out, all);
  std::istringstream back(out.str());
  std::vector<Graph> read;
  stream_graph6(back, [&](const Graph& g) { read.push_back(g); });
  CHECK(read == all);
}
