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

#include "hoct/bench.hpp"
#include "hoct/complex.hpp"
#include "hoct/gen.hpp"

using namespace hoct;

namespace {

bool every_vertex_and_edge_in_triangle(const Graph& g) {
  for (VertexId v = 0; v < g.n(); ++v) {
    bool vertex_ok = false;
    for (VertexId u : g.neighbors_raw(v)) {
      int c = g.common_neighbors_raw(v, u);
      if (c == 0) return false;  // edge outside any triangle
      vertex_ok = true;
    }
    if (!vertex_ok) return false;  // isolated vertex
  }
  return true;
}

std::int64_t component_count(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::int64_t comps = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (seen[v]) continue;
    ++comps;
    std::vector<VertexId> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors_raw(x))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return comps;
}

}  // namespace

TEST_CASE("clique chain blocks") {
  Graph g = gen_clusterable(8, 2, IntraModel::clique_chain, 0, 1);
  // two disjoint K4s, exactly
  CHECK(g.m() == 12);
  CHECK(component_count(g) == 2);
  for (VertexId v = 0; v < 8; ++v) CHECK(g.degree_raw(v) == 3);
  ClusterReport rep =
      verify_cluster(g, {{0, 1, 2, 3}, {4, 5, 6, 7}}, 2, 1.0, 0.01);
  CHECK(rep.ok);
}

TEST_CASE("generated clusterable instances verify against the oracle") {
  GenOptions opt;
  opt.degree_target = 5;
  opt.dmax_cap = 8;
  for (auto intra : {IntraModel::clique_chain, IntraModel::tri_regular}) {
    Graph g = gen_clusterable(16, 2, intra, 0, 9, opt);
    CHECK(every_vertex_and_edge_in_triangle(g));
    std::vector<std::vector<VertexId>> parts(2);
    for (VertexId v = 0; v < 16; ++v) parts[v / 8].push_back(v);
    ClusterReport rep = verify_cluster(g, parts, 2, 0.05, 0.001, 24);
    CHECK(rep.ok);
    for (const auto& row : rep.rows) CHECK(row.external == Rational(0));
  }
}

TEST_CASE("single expander block certifies as a colorful expander") {
  GenOptions opt;
  opt.degree_target = 5;
  opt.dmax_cap = 8;
  Graph g = gen_clusterable(9, 1, IntraModel::tri_regular, 0, 5, opt);
  ComplexView x = ComplexView::raise(g, 2);
  CHECK(x.is_pure());
  auto scan = colorful_expansion(x, 24);
  REQUIRE(scan.eps_star.has_value());
  CHECK(scan.eps_star->to_double() > 0);
}

TEST_CASE("cross edges stay triangle-free and invisible to the walk") {
  Graph g = gen_clusterable(1000, 2, IntraModel::tri_regular, 3, 13);
  CHECK(component_count(g) == 1);
  // the two blocks cut: no crossing edge lies in a triangle, so the
  // normalized external conductance of the block cut is exactly zero
  std::vector<char> in_s(g.n(), 0);
  for (VertexId v = 0; v < 500; ++v) in_s[v] = 1;
  CHECK(triangle_cut_conductance(g, in_s) == Rational(0));
  std::int64_t cross = 0;
  for (VertexId v = 0; v < 500; ++v)
    for (VertexId u : g.neighbors_raw(v))
      if (u >= 500) {
        ++cross;
        CHECK(g.common_neighbors_raw(v, u) == 0);
      }
  CHECK(cross == 3);
}

TEST_CASE("far instances") {
  Graph extra = gen_far(300, 2, FarModel::extra_components, 4);
  CHECK(component_count(extra) == 3);
  CHECK(every_vertex_and_edge_in_triangle(extra));

  Graph shattered = gen_far(100, 2, FarModel::shattered, 4);
  CHECK(component_count(shattered) == 10);
  CHECK(every_vertex_and_edge_in_triangle(shattered));
}

TEST_CASE("generator validation and determinism") {
  CHECK_THROWS_AS(gen_clusterable(10, 3, IntraModel::tri_regular, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_clusterable(4, 2, IntraModel::tri_regular, 0, 1),
                  std::invalid_argument);
  GenOptions tight;
  tight.degree_target = 8;
  tight.dmax_cap = 2;
  CHECK_THROWS_AS(gen_clusterable(30, 1, IntraModel::tri_regular, 0, 1,
                                  tight),
                  std::runtime_error);

  Graph a = gen_clusterable(200, 2, IntraModel::tri_regular, 2, 77);
  Graph b = gen_clusterable(200, 2, IntraModel::tri_regular, 2, 77);
  CHECK(a.to_edge_list_text() == b.to_edge_list_text());
  Graph c = gen_clusterable(200, 2, IntraModel::tri_regular, 2, 78);
  CHECK(a.to_edge_list_text() != c.to_edge_list_text());

  CHECK(intra_model_from_string("clique_chain") == IntraModel::clique_chain);
  CHECK(far_model_from_string("shattered") == FarModel::shattered);
  CHECK_THROWS_AS(intra_model_from_string("nope"), std::invalid_argument);
}

TEST_CASE("experiment runner produces deterministic CSV") {
  const char* config = R"({
    "experiments": [ {
      "name": "smoke",
      "generator": { "model": "clusterable", "n": 120, "k": 2,
                     "intra": "tri_regular", "cross_edges": 1 },
      "k": 2, "eps": 0.5, "psi": 0.5, "mode": "practical",
      "scale": { "s": 4e-4, "l": 1e-2, "m": 2.5e-4 },
      "trials": 3, "seed": 5 } ] })";
  std::string csv1 = run_experiments(config);
  std::string csv2 = run_experiments(config);
  CHECK(csv1 == csv2);
  CHECK(csv1.find(experiment_csv_header()) == 0);
  CHECK(csv1.find("# summary,smoke,") != std::string::npos);
  // one row per trial + header + summary
  std::int64_t rows = std::count(csv1.begin(), csv1.end(), '\n');
  CHECK(rows == 1 + 3 + 1);

  CHECK_THROWS_AS(run_experiments("{}"), std::invalid_argument);
  CHECK_THROWS_AS(run_experiments(R"({"experiments":[{"name":"x"}]})"),
                  std::invalid_argument);
}
