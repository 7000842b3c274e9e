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

#include "hoct/complex.hpp"
#include "hoct/rng.hpp"
#include "support/oracles.hpp"

using namespace hoct;

namespace {

Graph k_complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(edges, n);
}

Graph two_triangles() {
  return Graph::from_edge_list_text("0 1\n1 2\n0 2\n3 4\n4 5\n3 5");
}

Cochain vertices_cochain(std::initializer_list<int> vs) {
  Cochain c;
  c.dim = 0;
  c.faces = vs;
  return c;
}

}  // namespace

TEST_CASE("raise_complex counts faces") {
  ComplexView x = ComplexView::raise(k_complete(4), 2);
  CHECK(x.faces(0).size() == 4);
  CHECK(x.faces(1).size() == 6);
  CHECK(x.faces(2).size() == 4);

  CHECK(ComplexView::raise(k_complete(3), 2).faces(2).size() == 1);
  Graph path = Graph::from_edge_list_text("0 1\n1 2");
  CHECK(ComplexView::raise(path, 2).faces(2).empty());
  CHECK_THROWS_AS(ComplexView::raise(path, 0), std::invalid_argument);
}

TEST_CASE("raised faces equal brute-force cliques and closure holds") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng.below(5));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform01() < 0.6) edges.push_back({i, j});
    Graph g = Graph::from_edges(edges, n);
    int d = 2 + static_cast<int>(rng.below(2));
    ComplexView x = ComplexView::raise(g, d);
    for (int i = 0; i <= d; ++i)
      CHECK(x.faces(i) == testsupport::brute_cliques(g, i + 1));
    // closure: every subface of a face is a face
    for (int i = 1; i <= d; ++i)
      for (FaceMask f : x.faces(i)) {
        for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
          FaceMask sub = f & ~(rest & (0 - rest));
          CHECK(x.face_index(i - 1, sub) >= 0);
        }
      }
    // face degrees against direct counting over top faces
    for (int i = 0; i < d; ++i)
      for (std::size_t j = 0; j < x.faces(i).size(); ++j) {
        std::int64_t count = 0;
        for (FaceMask top : x.faces(d))
          if ((top & x.faces(i)[j]) == x.faces(i)[j]) ++count;
        CHECK(x.degrees(i)[j] == count);
      }
  }
}

TEST_CASE("face_degree examples") {
  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  CHECK(x4.face_degree(0b0011) == 2);  // edge {0,1} in 2 triangles
  CHECK(x4.face_degree(0b0001) == 3);  // vertex {0} in 3 triangles
  ComplexView x3 = ComplexView::raise(k_complete(3), 2);
  CHECK(x3.face_degree(0b011) == 1);
  CHECK_THROWS_AS(x4.face_degree(0b1001000), std::invalid_argument);
}

TEST_CASE("cochain norms") {
  ComplexView xt = ComplexView::raise(two_triangles(), 2);
  // edges of one triangle: each edge has deg_2 = 1, total edge volume 6
  Cochain one_triangle_edges;
  one_triangle_edges.dim = 1;
  for (int j = 0; j < static_cast<int>(xt.faces(1).size()); ++j)
    if ((xt.faces(1)[j] & 0b111) == xt.faces(1)[j])
      one_triangle_edges.faces.push_back(j);
  REQUIRE(one_triangle_edges.faces.size() == 3);
  CHECK(cochain_norm(xt, one_triangle_edges) == Rational(1, 2));
  CHECK(cochain_norm(xt, xt.full_cochain(1)) == Rational(1));

  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  CHECK(cochain_norm(x4, vertices_cochain({0, 1})) == Rational(1, 2));

  Graph path = Graph::from_edge_list_text("0 1\n1 2");
  ComplexView xp = ComplexView::raise(path, 2);
  Cochain c = vertices_cochain({0});
  CHECK_THROWS_AS(cochain_norm(xp, c), std::domain_error);  // zero volume
}

TEST_CASE("expander_face examples") {
  ComplexView xt = ComplexView::raise(two_triangles(), 2);
  Cochain left = vertices_cochain({0, 1, 2});
  CHECK(expander_face(xt, left).faces.empty());

  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  CHECK(expander_face(x4, vertices_cochain({0})).faces.size() == 3);
  CHECK(expander_face(x4, vertices_cochain({0, 1})).faces.size() == 4);
  Cochain top;
  top.dim = 2;
  top.faces = {0};
  CHECK_THROWS_AS(expander_face(x4, top), std::invalid_argument);
}

TEST_CASE("normalized external conductance examples") {
  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  CHECK(normalized_external_conductance(x4, vertices_cochain({0, 1}),
                                        x4.full_cochain(0)) ==
        Rational(4, 3));

  ComplexView xt = ComplexView::raise(two_triangles(), 2);
  CHECK(normalized_external_conductance(xt, vertices_cochain({0, 1, 2}),
                                        xt.full_cochain(0)) == Rational(0));

  ComplexView x3 = ComplexView::raise(k_complete(3), 2);
  CHECK(normalized_external_conductance(x3, vertices_cochain({0}),
                                        x3.full_cochain(0)) == Rational(2));

  CHECK_THROWS_AS(normalized_external_conductance(x4, vertices_cochain({}),
                                                  x4.full_cochain(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(normalized_external_conductance(
                      x4, x4.full_cochain(0), x4.full_cochain(0)),
                  std::invalid_argument);
}

TEST_CASE("normalized internal conductance examples") {
  ComplexView xt = ComplexView::raise(two_triangles(), 2);
  auto disconnected = normalized_internal_conductance(xt, xt.full_cochain(1));
  REQUIRE(disconnected.has_value());
  CHECK(*disconnected == Rational(0));

  ComplexView x3 = ComplexView::raise(k_complete(3), 2);
  auto k3_internal = normalized_internal_conductance(x3, x3.full_cochain(0));
  REQUIRE(k3_internal.has_value());
  CHECK(*k3_internal == Rational(2));

  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  auto k4_internal = normalized_internal_conductance(x4, x4.full_cochain(0));
  REQUIRE(k4_internal.has_value());
  CHECK(*k4_internal == Rational(4, 3));

  // singleton ground set: no admissible split
  Cochain single = vertices_cochain({0});
  CHECK(!normalized_internal_conductance(x4, single).has_value());

  // cap: 21 ground faces must refuse at the default cap of 20
  ComplexView x7 = ComplexView::raise(k_complete(7), 2);
  CHECK_THROWS_AS(normalized_internal_conductance(x7, x7.full_cochain(1)),
                  CapExceeded);
}

TEST_CASE("classic conductances") {
  Graph g4 = k_complete(4);
  std::vector<VertexId> all{0, 1, 2, 3};
  CHECK(classic_conductance(g4, {0, 1}, all) == Rational(2, 3));
  auto internal = classic_internal_conductance(g4, all);
  REQUIRE(internal.has_value());
  CHECK(*internal == Rational(2, 3));

  Graph two = two_triangles();
  std::vector<VertexId> all6{0, 1, 2, 3, 4, 5};
  CHECK(classic_conductance(two, {0, 1, 2}, all6) == Rational(0));
  auto disc = classic_internal_conductance(two, all6);
  REQUIRE(disc.has_value());
  CHECK(*disc == Rational(0));

  CHECK_THROWS_AS(classic_conductance(g4, {}, all), std::invalid_argument);
  CHECK_THROWS_AS(classic_conductance(g4, {0, 1, 2, 3}, all),
                  std::invalid_argument);
}

TEST_CASE("triangle_cut_conductance matches the complex route") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.below(5));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform01() < 0.7) edges.push_back({i, j});
    Graph g = Graph::from_edges(edges, n);
    ComplexView x = ComplexView::raise(g, 2);
    if (x.volume(0) == 0 || x.volume(1) == 0) continue;
    std::uint32_t s_mask =
        1 + static_cast<std::uint32_t>(rng.below((1u << n) - 2));
    std::vector<char> in_s(n, 0);
    Cochain s;
    s.dim = 0;
    bool any = false, all = true;
    std::int64_t vol_s = 0;
    for (int v = 0; v < n; ++v) {
      if (s_mask >> v & 1) {
        in_s[v] = 1;
        s.faces.push_back(v);
        vol_s += x.degrees(0)[v];
        any = true;
      } else {
        all = false;
      }
    }
    if (!any || all) continue;
    if (vol_s == 0 || vol_s == x.volume(0)) continue;  // degenerate side
    CHECK(triangle_cut_conductance(g, in_s) ==
          normalized_external_conductance(x, s, x.full_cochain(0)));
  }
}

TEST_CASE("colorful expander examples") {
  ComplexView xt = ComplexView::raise(two_triangles(), 2);
  ColorfulVerdict v = is_colorful_expander(xt, Rational(1, 1000));
  CHECK(!v.is_expander);
  REQUIRE(v.eps_star.has_value());
  CHECK(*v.eps_star == Rational(0));
  CHECK(v.witness.has_value());
  // the witness certifies: its expansion ratio is below the threshold
  Cochain w = *v.witness;
  Cochain f = expander_face(xt, w);
  CHECK(cochain_norm(xt, f) == Rational(0));

  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  CHECK(is_colorful_expander(x4, Rational(1)).is_expander);
  CHECK(!is_colorful_expander(x4, Rational(3)).is_expander);
  auto scan = colorful_expansion(x4);
  REQUIRE(scan.eps_star.has_value());
  CHECK(*scan.eps_star == Rational(4, 3));
}

TEST_CASE("induced i-graphs") {
  ComplexView x3 = ComplexView::raise(k_complete(3), 2);
  WeightedGraph w1 = induced_i_graph(x3, 1);
  CHECK(w1.n == 3);
  CHECK(w1.edges.size() == 3);
  for (const auto& [a, b, weight] : w1.edges) CHECK(weight == 1);

  ComplexView x4 = ComplexView::raise(k_complete(4), 2);
  WeightedGraph w0 = induced_i_graph(x4, 0);
  CHECK(w0.n == 4);
  CHECK(w0.edges.size() == 6);
  for (const auto& [a, b, weight] : w0.edges) CHECK(weight == 2);

  Graph path = Graph::from_edge_list_text("0 1\n1 2");
  ComplexView xp = ComplexView::raise(path, 2);
  CHECK(induced_i_graph(xp, 0).edges.empty());
  CHECK_THROWS_AS(induced_i_graph(xp, 2), std::invalid_argument);
}

TEST_CASE("verify_cluster examples") {
  // two disjoint K4s
  std::vector<Edge> edges;
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        edges.push_back({base + i, base + j});
  Graph two_k4 = Graph::from_edges(edges, 8);
  ClusterReport rep = verify_cluster(two_k4, {{0, 1, 2, 3}, {4, 5, 6, 7}}, 2,
                                     1.0, 0.01);
  CHECK(rep.ok);
  for (const auto& row : rep.rows) {
    CHECK(row.external == Rational(0));
    if (row.internal.has_value()) CHECK(*row.internal >= Rational(4, 3));
  }

  Graph g4 = k_complete(4);
  CHECK(verify_cluster(g4, {{0, 1, 2, 3}}, 2, 1.0, 0.0).ok);

  Graph two = two_triangles();
  CHECK(!verify_cluster(two, {{0, 1, 2, 3, 4, 5}}, 2, 0.1, 0.5).ok);

  // a part with no triangles at all: reported as violating
  Graph mixed = Graph::from_edge_list_text("0 1\n1 2\n0 2\n3 4");
  ClusterReport bad = verify_cluster(mixed, {{0, 1, 2}, {3, 4}}, 2, 0.1, 0.5);
  CHECK(!bad.ok);
  bool saw_missing = false;
  for (const auto& row : bad.rows)
    if (!row.has_faces) saw_missing = true;
  CHECK(saw_missing);

  CHECK_THROWS_AS(verify_cluster(g4, {{0, 1}, {1, 2, 3}}, 2, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_cluster(g4, {{0, 1}}, 2, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("partition format") {
  auto parts = parse_partition("0 1 2\n# comment\n3 4\n\n5\n");
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(parts[2] == std::vector<VertexId>{5});
  CHECK_THROWS_AS(parse_partition("0 x"), std::invalid_argument);
}

TEST_CASE("outlier scan and purity") {
  Graph mixed = Graph::from_edge_list_text("0 1\n1 2\n0 2\n2 3");
  ComplexView x = ComplexView::raise(mixed, 2);
  CHECK(!x.is_pure());
  auto outliers = x.outlier_faces();
  CHECK(outliers[0].size() == 1);  // vertex 3
  CHECK(outliers[1].size() == 1);  // edge {2,3}
  CHECK(ComplexView::raise(k_complete(4), 2).is_pure());
}
