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

#include "hoct/gen.hpp"
#include "hoct/tester.hpp"

using namespace hoct;

namespace {

EndpointSample constant_sample(std::int64_t value, std::int64_t m) {
  EndpointSample s;
  s.mode = WalkMode::vertex;
  s.origin = value;
  s.l = 1;
  s.m = m;
  s.endpoints.assign(m, value);
  return s;
}

Graph two_triangles() {
  return Graph::from_edge_list_text("0 1\n1 2\n0 2\n3 4\n4 5\n3 5");
}

}  // namespace

TEST_CASE("parameter schedule, paper mode") {
  TesterParams p = compute_params(1000000, 1, 0.5, 0.5, ParamMode::paper);
  CHECK(p.s == 22017);  // 1536 * ln(36) / 0.25
  CHECK(p.theta == doctest::Approx(6.341).epsilon(0.001));
  CHECK(p.delta == doctest::Approx(1.0 / (24.0 * 22017.0 * 22017.0)));
  double l_expected = 11.0 * std::pow(1.0, 1.0) * std::log(1e6) / 0.25;
  CHECK(p.l == std::llround(l_expected));
  double m_expected =
      384.0 * 22017.0 * std::sqrt(22017.0 * 1e6) * std::log(22017.0);
  CHECK(static_cast<double>(p.m) == doctest::Approx(m_expected).epsilon(1e-6));

  CHECK_THROWS_AS(compute_params(1, 1, 0.5, 0.5, ParamMode::paper),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_params(100, 0, 0.5, 0.5, ParamMode::paper),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_params(100, 1, 0.0, 0.5, ParamMode::paper),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_params(100, 1, 0.5, 1.5, ParamMode::paper),
                  std::invalid_argument);
  // m overflows a 64-bit count at absurd n
  CHECK_THROWS_AS(
      compute_params(4000000000000000000LL, 1, 0.5, 0.5, ParamMode::paper),
      std::overflow_error);
}

TEST_CASE("parameter schedule, practical mode") {
  PracticalScale scale;  // defaults
  TesterParams p =
      compute_params(1000, 2, 0.5, 0.5, ParamMode::practical, scale);
  CHECK(p.s >= p.k + 1);
  CHECK(p.s < 100);
  CHECK(p.l > 10);
  CHECK(p.l < 500);
  CHECK(p.m > 100);
  CHECK(p.theta == doctest::Approx(288.0 * p.s * 2 / 1000.0));
  CHECK(p.delta == doctest::Approx(1.0 / (24.0 * p.s * p.s)));
}

TEST_CASE("k_cluster_test on synthetic samples") {
  // all samples one point mass: complete similarity graph, 1 component
  std::vector<EndpointSample> same;
  for (int i = 0; i < 5; ++i) same.push_back(constant_sample(7, 100));
  KClusterResult res = k_cluster_test(same, 100, 1, 3.0, 0.01, 1, false,
                                      false);
  CHECK(res.verdict == TestVerdict::accept);
  CHECK(res.similarity.components == 1);

  // two groups of point masses: 2 components
  std::vector<EndpointSample> grouped;
  for (int i = 0; i < 3; ++i) grouped.push_back(constant_sample(7, 100));
  for (int i = 0; i < 3; ++i) grouped.push_back(constant_sample(9, 100));
  KClusterResult two = k_cluster_test(grouped, 100, 2, 3.0, 0.01, 1, false,
                                      false);
  CHECK(two.similarity.components == 2);
  CHECK(two.verdict == TestVerdict::accept);
  KClusterResult one = k_cluster_test(grouped, 100, 1, 3.0, 0.01, 1, false,
                                      false);
  CHECK(one.verdict == TestVerdict::reject);

  // norm rejection aborts before any pair is tested
  KClusterResult norm = k_cluster_test(same, 100, 1, 0.5, 0.01, 1, false,
                                       false);
  CHECK(norm.verdict == TestVerdict::reject);
  CHECK(norm.norm_rejected);
  CHECK(norm.similarity.edges.empty());

  // the literal printed rule flips the component decision
  KClusterResult literal = k_cluster_test(grouped, 100, 1, 3.0, 0.01, 1,
                                          false, true);
  CHECK(literal.verdict == TestVerdict::accept);

  std::vector<EndpointSample> mismatched = {constant_sample(1, 100),
                                            constant_sample(1, 101)};
  CHECK_THROWS_AS(k_cluster_test(mismatched, 100, 1, 3, 0.01, 1, false,
                                 false),
                  std::invalid_argument);
}

TEST_CASE("tester separates one from two triangle components") {
  Graph g = two_triangles();
  TesterParams p;
  p.n = g.n();
  p.k = 1;
  p.s = 6;
  p.l = 24;
  p.m = 300;
  p.theta = 50;  // vacuous at this scale
  p.delta = 1.0 / (24 * 36);
  p.mode = ParamMode::practical;

  TestReport rejected = triangle_k_cluster_tester(g, p, 5);
  CHECK(rejected.verdict == TestVerdict::reject);

  p.k = 2;
  TestReport accepted = triangle_k_cluster_tester(g, p, 5);
  CHECK(accepted.verdict == TestVerdict::accept);
  CHECK(accepted.components_vertex == 2);
  CHECK(accepted.components_edge == 2);
}

TEST_CASE("phase ordering and determinism") {
  Graph g = two_triangles();
  TesterParams p;
  p.n = g.n();
  p.k = 1;
  p.s = 6;
  p.l = 24;
  p.m = 300;
  p.theta = 50;
  p.delta = 1e-3;
  p.mode = ParamMode::practical;

  TestReport a = triangle_k_cluster_tester(g, p, 17);
  TestReport b = triangle_k_cluster_tester(g, p, 17);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.ledger.neighbor_queries == b.ledger.neighbor_queries);

  // vertex-phase rejection never touches the edge sampler
  if (a.verdict == TestVerdict::reject &&
      a.phase_reached == Phase::vertex_phase) {
    CHECK(a.queries_edge_phase == 0);
    CHECK(a.components_edge == -1);
  }

  // thread count must not change the verdict or the query totals
  TestReport c = triangle_k_cluster_tester(g, p, 17, 4);
  CHECK(c.to_text() == a.to_text());

  // the ledger total partitions exactly into the two phases
  p.k = 2;
  TestReport full = triangle_k_cluster_tester(g, p, 23);
  CHECK(full.phase_reached == Phase::edge_phase);
  CHECK(full.queries_vertex_phase + full.queries_edge_phase ==
        full.ledger.total());
}

TEST_CASE("edgeless graph rejects in the edge phase with a diagnostic") {
  Graph empty = Graph::from_edge_list_text("", 8);
  TesterParams p;
  p.n = 8;
  p.k = 8;  // vertex phase passes trivially; the edge phase cannot run
  p.s = 3;
  p.l = 4;
  p.m = 50;
  p.theta = 50;
  p.delta = 1e-3;
  p.mode = ParamMode::practical;
  TestReport rep = triangle_k_cluster_tester(empty, p, 3);
  CHECK(rep.verdict == TestVerdict::reject);
  // vertex phase sees identical point masses (all walks stop at home), so
  // the abort happens entering the edge phase
  CHECK(rep.phase_reached == Phase::edge_phase);
  CHECK(rep.components_edge == -1);
}

namespace {

/// Draws m endpoints from an exact distribution over vertices.
EndpointSample sample_exact(const std::vector<double>& dist, VertexId origin,
                            std::int64_t m, std::uint64_t seed) {
  EndpointSample s;
  s.mode = WalkMode::vertex;
  s.origin = origin;
  s.l = 0;
  s.m = m;
  Rng rng(seed);
  for (std::int64_t i = 0; i < m; ++i) {
    double u = rng.uniform01(), acc = 0;
    std::int64_t pick = static_cast<std::int64_t>(dist.size()) - 1;
    for (std::size_t v = 0; v < dist.size(); ++v) {
      acc += dist[v];
      if (u < acc) {
        pick = static_cast<std::int64_t>(v);
        break;
      }
    }
    s.endpoints.push_back(pick);
  }
  return s;
}

}  // namespace

TEST_CASE("k_cluster_test on exact matrix-power distributions") {
  // two disjoint K4s: endpoint distributions converge to uniform over the
  // home component; closeness within, distance ~2/4 across
  std::vector<Edge> edges;
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        edges.push_back({base + i, base + j});
  Graph g = Graph::from_edges(edges, 8);

  std::vector<EndpointSample> samples;
  int idx = 0;
  for (VertexId v : {0, 1, 2, 4, 5, 6}) {
    auto dist = exact_vertex_endpoint_distribution(g, v, 40, true);
    samples.push_back(sample_exact(dist, v, 4000, 100 + idx++));
  }
  KClusterResult two =
      k_cluster_test(samples, g.n(), 2, 40.0, 1e-3, 1, false, false);
  CHECK(two.similarity.components == 2);
  CHECK(two.verdict == TestVerdict::accept);
  KClusterResult one =
      k_cluster_test(samples, g.n(), 1, 40.0, 1e-3, 1, false, false);
  CHECK(one.verdict == TestVerdict::reject);
}

TEST_CASE("shattered 9-vertex instance rejects for k=1 on exact samples") {
  Graph g = gen_far(9, 1, FarModel::shattered, 3);
  // three disjoint triangles
  std::vector<EndpointSample> samples;
  int idx = 0;
  for (VertexId v : {0, 1, 3, 4, 6, 7}) {
    auto dist = exact_vertex_endpoint_distribution(g, v, 40, true);
    samples.push_back(sample_exact(dist, v, 3000, 500 + idx++));
  }
  KClusterResult res =
      k_cluster_test(samples, g.n(), 1, 40.0, 1e-3, 1, false, false);
  CHECK(res.similarity.components == 3);
  CHECK(res.verdict == TestVerdict::reject);
}

TEST_CASE("clusterable instance accepts at practical scale") {
  Graph g = gen_clusterable(300, 2, IntraModel::tri_regular, 2, 71);
  TesterParams p = compute_params(g.n(), 2, 0.5, 0.5, ParamMode::practical);
  TestReport rep = triangle_k_cluster_tester(g, p, 1234, 2);
  CHECK(rep.verdict == TestVerdict::accept);
  CHECK(rep.components_vertex == 2);
  CHECK(rep.components_edge == 2);

  Graph far = gen_far(300, 2, FarModel::extra_components, 72);
  TestReport frep = triangle_k_cluster_tester(far, p, 1234, 2);
  CHECK(frep.verdict == TestVerdict::reject);
}
