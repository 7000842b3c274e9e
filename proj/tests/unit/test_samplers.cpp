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

#include <stdexcept>

#include <cmath>
#include <map>

#include "hoct/samplers.hpp"

using namespace hoct;

TEST_CASE("vertex sampling") {
  Graph single = Graph::from_edge_list_text("", 1);
  SampleSet s = sample_vertices(single, 5, 9);
  CHECK(s.vertices == std::vector<VertexId>{0, 0, 0, 0, 0});

  Graph four = Graph::from_edge_list_text("", 4);
  SampleSet big = sample_vertices(four, 100000, 11);
  std::map<VertexId, int> counts;
  for (VertexId v : big.vertices) ++counts[v];
  for (int v = 0; v < 4; ++v)
    CHECK(std::abs(counts[v] / 100000.0 - 0.25) < 0.25 * 0.01 + 0.003);

  CHECK(sample_vertices(four, 50, 3).vertices ==
        sample_vertices(four, 50, 3).vertices);
  CHECK_THROWS_AS(sample_vertices(four, 0, 1), std::invalid_argument);
}

TEST_CASE("edge sampling is uniform") {
  Graph k3 = Graph::from_edge_list_text("0 1\n1 2\n0 2");
  QueryLedger ledger;
  SampleSet s = sample_edges(k3, 100000, 0.5, 21, ledger);
  std::map<Edge, int> counts;
  for (Edge e : s.edges) ++counts[e];
  for (const auto& [e, c] : counts)
    CHECK(std::abs(c / 100000.0 - 1.0 / 3) < 0.02 / 3 + 0.004);
  CHECK(ledger.neighbor_queries == s.trials);

  Graph one = Graph::from_edge_list_text("0 1");
  QueryLedger l1;
  SampleSet so = sample_edges(one, 100, 0.5, 4, l1);
  for (Edge e : so.edges) CHECK(e == Edge{0, 1});

  // star: rejection corrects the degree skew
  Graph star = Graph::from_edge_list_text("0 1\n0 2\n0 3");
  QueryLedger l2;
  SampleSet st = sample_edges(star, 100000, 0.5, 5, l2);
  std::map<Edge, int> sc;
  for (Edge e : st.edges) ++sc[e];
  REQUIRE(sc.size() == 3);
  for (const auto& [e, c] : sc) CHECK(std::abs(c / 100000.0 - 1.0 / 3) < 0.01);
}

TEST_CASE("edge sampler acceptance rate and errors") {
  // random bounded-degree graph: acceptance ~ 2|E| / (n * dmax)
  Graph g = Graph::from_edge_list_text(
      "0 1\n0 2\n1 2\n2 3\n3 4\n4 5\n5 0\n1 4\n2 5");
  QueryLedger ledger;
  SampleSet s = sample_edges(g, 50000, 0.5, 33, ledger);
  double expected = 2.0 * g.m() / (static_cast<double>(g.n()) * g.dmax());
  CHECK(std::abs(s.acceptance_rate() - expected) < 0.05 * expected);

  Graph edgeless = Graph::from_edge_list_text("", 4);
  QueryLedger l2;
  CHECK_THROWS_AS(sample_edges(edgeless, 1, 0.5, 1, l2), std::runtime_error);
  // declared positive dmax but still no edges: retry cap path
  Graph padded = Graph::from_edges({}, 4, 3);
  CHECK_THROWS_AS(sample_edges(padded, 1, 0.5, 1, l2), std::runtime_error);
  CHECK_THROWS_AS(sample_edges(g, 1, -0.1, 1, l2), std::invalid_argument);
}

TEST_CASE("edge sampler passes a chi-square uniformity test") {
  // K8: 28 edges; 1e5 draws; chi^2 against uniform, df = 27,
  // critical value at 1% significance = 46.963.
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) edges.push_back({i, j});
  Graph k8 = Graph::from_edges(edges, 8);
  QueryLedger ledger;
  SampleSet s = sample_edges(k8, 100000, 0.5, 77, ledger);
  std::map<Edge, int> counts;
  for (Edge e : s.edges) ++counts[e];
  REQUIRE(counts.size() == 28);
  double expected = 100000.0 / 28.0;
  double chi2 = 0;
  for (const auto& [e, c] : counts) {
    double d = c - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 46.963);
}
