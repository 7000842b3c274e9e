/*
Copyright 2026 the hoct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include <cmath>

#include "hoct/checks.hpp"
#include "hoct/walks.hpp"
#include "support/oracles.hpp"

using namespace hoct;

namespace {

Graph k_complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(edges, n);
}

}  // namespace

TEST_CASE("vertex-mode transition probabilities") {
  TransitionMatrix k3 = twodrw_vertex_transition(k_complete(3), false);
  CHECK(k3.at(0, 1) == Rational(1, 2));
  CHECK(k3.at(0, 2) == Rational(1, 2));
  CHECK(k3.at(0, 0) == Rational(0));

  TransitionMatrix k4 = twodrw_vertex_transition(k_complete(4), false);
  for (int u = 1; u < 4; ++u) CHECK(k4.at(0, u) == Rational(1, 3));

  // path: no common neighbors anywhere -> absorbing rows
  Graph path = Graph::from_edge_list_text("0 1\n1 2");
  TransitionMatrix p = twodrw_vertex_transition(path, false);
  for (int v = 0; v < 3; ++v) CHECK(p.at(v, v) == Rational(1));

  QueryLedger ledger;
  Rng rng(3);
  CHECK(!twodrw_vertex_step(path, 1, rng, ledger).has_value());
}

TEST_CASE("edge-mode transition probabilities") {
  std::vector<Edge> order;
  TransitionMatrix k3 = twodrw_edge_transition(k_complete(3), false, &order);
  REQUIRE(order.size() == 3);
  // from (0,1): candidates (0,2) and (1,2), uniform
  auto idx = [&](Edge e) {
    return std::lower_bound(order.begin(), order.end(), e) - order.begin();
  };
  CHECK(k3.at(idx({0, 1}), idx({0, 2})) == Rational(1, 2));
  CHECK(k3.at(idx({0, 1}), idx({1, 2})) == Rational(1, 2));

  std::vector<Edge> order4;
  TransitionMatrix k4 = twodrw_edge_transition(k_complete(4), false, &order4);
  auto idx4 = [&](Edge e) {
    return std::lower_bound(order4.begin(), order4.end(), e) -
           order4.begin();
  };
  for (Edge target : {Edge{0, 2}, Edge{1, 2}, Edge{0, 3}, Edge{1, 3}})
    CHECK(k4.at(idx4({0, 1}), idx4(target)) == Rational(1, 4));

  // star: triangle-free, edge walk stops immediately
  Graph star = Graph::from_edge_list_text("0 1\n0 2\n0 3");
  QueryLedger ledger;
  Rng rng(5);
  CHECK(!twodrw_edge_step(star, {0, 1}, rng, ledger).has_value());
  CHECK_THROWS_AS(twodrw_edge_step(star, {1, 2}, rng, ledger),
                  std::invalid_argument);
}

TEST_CASE("lazy walk basics") {
  Graph k3 = k_complete(3);
  QueryLedger ledger;
  Rng rng(17);
  WalkState zero = lazy_walk(k3, WalkPosition::vertex(1), 0, rng, ledger);
  CHECK(zero.pos.v == 1);
  CHECK(!zero.stopped);

  Graph star = Graph::from_edge_list_text("0 1\n0 2\n0 3");
  for (int seed = 0; seed < 10; ++seed) {
    Rng r(seed);
    QueryLedger lg;
    WalkState st = lazy_walk(star, WalkPosition::vertex(1), 30, r, lg);
    CHECK(st.pos.v == 1);  // triangle-free: stays until it stops
  }
}

TEST_CASE("walk step query accounting") {
  // K4 vertex step: deg(v) + sum_u deg(u) = 3 + 9 neighbor reads,
  // 1 + deg(v) degree reads.
  Graph g4 = k_complete(4);
  QueryLedger ledger;
  Rng rng(1);
  auto moved = twodrw_vertex_step(g4, 0, rng, ledger);
  CHECK(moved.has_value());
  CHECK(ledger.neighbor_queries == 12);
  CHECK(ledger.degree_queries == 4);
  // uncached model re-reads adj(v) per neighbor: + deg(v)^2
  CHECK(ledger.neighbor_queries_uncached == 12 + 9);

  // edge step: deg(x) + deg(y) neighbor reads, 2 + 1 degree reads
  QueryLedger el;
  auto emoved = twodrw_edge_step(g4, {0, 1}, rng, el);
  CHECK(emoved.has_value());
  CHECK(el.neighbor_queries == 6);
  CHECK(el.degree_queries == 3);

  // per-step bound over a whole walk: neighbor + degree queries per
  // non-lazy step stay within deg(v) + sum deg(u) + deg(v) (+1 for the
  // start's degree query).
  QueryLedger wl;
  Rng wr(123);
  std::int64_t l = 40;
  lazy_walk(g4, WalkPosition::vertex(0), l, wr, wl);
  std::uint64_t per_step = 3 + 9 + 3;
  CHECK(wl.total() <= per_step * l + 1);
}

TEST_CASE("endpoint distribution mixes on K3 and K5") {
  Graph k3 = k_complete(3);
  QueryLedger ledger;
  EndpointSample s3 =
      endpoint_distribution(k3, WalkPosition::vertex(0), 20, 10000, 42,
                            ledger);
  CHECK(s3.stopped_count == 0);
  std::vector<std::pair<std::int64_t, double>> uniform3 = {
      {0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}};
  CHECK(testsupport::tv_distance(s3.endpoints, uniform3) < 0.05);

  Graph k5 = k_complete(5);
  QueryLedger l5;
  EndpointSample s5 =
      endpoint_distribution(k5, WalkPosition::vertex(2), 20, 100000, 43, l5);
  std::vector<std::pair<std::int64_t, double>> uniform5;
  for (int v = 0; v < 5; ++v) uniform5.push_back({v, 0.2});
  CHECK(testsupport::tv_distance(s5.endpoints, uniform5) < 0.02);

  // triangle-free origin: every endpoint equals the origin
  Graph star = Graph::from_edge_list_text("0 1\n0 2\n0 3");
  QueryLedger ls;
  EndpointSample stuck =
      endpoint_distribution(star, WalkPosition::vertex(0), 10, 200, 7, ls);
  CHECK(stuck.stopped_count == 200);
  for (std::int64_t e : stuck.endpoints) CHECK(e == 0);
}

TEST_CASE("endpoint distribution is deterministic and thread-invariant") {
  Graph k5 = k_complete(5);
  QueryLedger l1, l2, l4;
  EndpointSample a =
      endpoint_distribution(k5, WalkPosition::vertex(0), 15, 4000, 99, l1, 1);
  EndpointSample b =
      endpoint_distribution(k5, WalkPosition::vertex(0), 15, 4000, 99, l2, 1);
  EndpointSample c =
      endpoint_distribution(k5, WalkPosition::vertex(0), 15, 4000, 99, l4, 4);
  CHECK(a.endpoints == b.endpoints);
  CHECK(a.endpoints == c.endpoints);
  CHECK(l1.neighbor_queries == l2.neighbor_queries);
  CHECK(l1.neighbor_queries == l4.neighbor_queries);
  CHECK(l1.degree_queries == l4.degree_queries);
}

TEST_CASE("endpoint sample serializes to origin,endpoint,count CSV") {
  Graph k3 = k_complete(3);
  QueryLedger ledger;
  EndpointSample s =
      endpoint_distribution(k3, WalkPosition::vertex(0), 4, 50, 3, ledger);
  std::string csv = s.to_csv();
  CHECK(csv.rfind("origin,endpoint,count\n", 0) == 0);
  std::int64_t total = 0;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    auto last = line.rfind(',');
    total += std::stoll(line.substr(last + 1));
    CHECK(line.rfind("0,", 0) == 0);  // origin column
  }
  CHECK(total == 50);
}

TEST_CASE("empirical step frequencies match the exact transition row") {
  Graph g = Graph::from_edge_list_text("0 1\n0 2\n1 2\n1 3\n2 3\n0 3\n2 4\n3 4");
  TransitionMatrix exact = twodrw_vertex_transition(g, false);
  Rng rng(2024);
  QueryLedger ledger;
  std::vector<int> counts(g.n(), 0);
  const int trials = 60000;
  for (int t = 0; t < trials; ++t) {
    auto mv = twodrw_vertex_step(g, 2, rng, ledger);
    REQUIRE(mv.has_value());
    ++counts[*mv];
  }
  for (int u = 0; u < g.n(); ++u) {
    double expect = exact.at(2, u).to_double();
    double got = static_cast<double>(counts[u]) / trials;
    CHECK(std::abs(got - expect) < 0.01);
  }
}

TEST_CASE("high-order walk step matches the vertex walk on K4") {
  ComplexView x = ComplexView::raise(k_complete(4), 2);
  TransitionMatrix up_down = highorder_transition(x, 0, false);
  TransitionMatrix direct = twodrw_vertex_transition(k_complete(4), false);
  REQUIRE(up_down.n == direct.n);
  for (std::int64_t i = 0; i < direct.n; ++i)
    for (std::int64_t j = 0; j < direct.n; ++j)
      CHECK(up_down.at(i, j) == direct.at(i, j));

  // sampled steps: uniform over the three neighbors
  Rng rng(5);
  std::vector<int> counts(4, 0);
  for (int t = 0; t < 30000; ++t) {
    int nxt = highorder_walk_step(x, 0, 0, rng);
    REQUIRE(nxt >= 0);
    ++counts[nxt];
  }
  CHECK(counts[0] == 0);
  for (int v = 1; v < 4; ++v)
    CHECK(std::abs(counts[v] / 30000.0 - 1.0 / 3) < 0.02);

  // isolated face STOPs
  Graph path = Graph::from_edge_list_text("0 1\n1 2");
  ComplexView xp = ComplexView::raise(path, 2);
  CHECK(highorder_walk_step(xp, 0, 0, rng) == -1);
}

TEST_CASE("exact endpoint distributions converge to the stationary law") {
  Graph k3 = k_complete(3);
  auto dist = exact_vertex_endpoint_distribution(k3, 0, 50, true);
  for (int v = 0; v < 3; ++v) CHECK(std::abs(dist[v] - 1.0 / 3) < 1e-9);

  auto [edist, edges] =
      exact_edge_endpoint_distribution(k3, {0, 1}, 50, true);
  for (std::size_t i = 0; i < edges.size(); ++i)
    CHECK(std::abs(edist[i] - 1.0 / 3) < 1e-9);
}

TEST_CASE("spectral mixing rate") {
  // K4: complete-graph spectrum {1, -1/3, -1/3, -1/3}
  WeightedGraph k4 = WeightedGraph::from_graph(k_complete(4));
  CHECK(std::abs(spectral_mixing_rate(k4, false) - 1.0 / 3) < 1e-7);
  // lazy transform maps the spectrum through (1 + x) / 2
  CHECK(std::abs(spectral_mixing_rate(k4, true) - 1.0 / 3) < 1e-7);

  // C4: bipartite, alpha = 1
  Graph c4 = Graph::from_edge_list_text("0 1\n1 2\n2 3\n0 3");
  CHECK(std::abs(spectral_mixing_rate(WeightedGraph::from_graph(c4), false) -
                 1.0) < 1e-7);

  Graph disconnected = Graph::from_edge_list_text("0 1\n2 3");
  CHECK_THROWS_AS(
      spectral_mixing_rate(WeightedGraph::from_graph(disconnected), false),
      std::domain_error);

  // against the independent Jacobi oracle on random weighted graphs
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng.below(6));
    Graph g = hoct::checks::random_connected_graph(n, 0.6, rng);
    ComplexView x = ComplexView::raise(g, 2);
    WeightedGraph w = induced_i_graph(x, 0);
    bool degenerate = false;
    for (auto d : w.wdeg)
      if (d == 0) degenerate = true;
    if (degenerate) continue;
    bool lazy = rng.coin();
    double oracle = testsupport::jacobi_mixing_rate(w, lazy);
    try {
      double got = spectral_mixing_rate(w, lazy);
      CHECK(std::abs(got - oracle) < 1e-6);
    } catch (const std::domain_error&) {
      // disconnected induced graph: fine, nothing to compare
    }
  }
}
