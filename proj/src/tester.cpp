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
#include "hoct/tester.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hoct/samplers.hpp"

namespace hoct {

namespace {

std::int64_t checked_count(double value, const char* what) {
  if (!(value >= 0) || value > 9.0e18)
    throw std::overflow_error(std::string("parameter ") + what +
                              " overflows a 64-bit count");
  return static_cast<std::int64_t>(std::llround(value));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::int64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TesterParams compute_params(std::int64_t n, std::int64_t k, double eps,
                            double psi, ParamMode mode, PracticalScale scale,
                            double c31, double c42, double c43) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0) || eps > 1)
    throw std::invalid_argument("eps must lie in (0, 1]");
  if (!(psi > 0) || psi > 1)
    throw std::invalid_argument("psi must lie in (0, 1]");

  TesterParams out;
  out.n = n;
  out.k = k;
  out.eps = eps;
  out.psi = psi;
  out.mode = mode;
  out.scale = scale;
  out.c31 = c31;
  out.c42 = c42;
  out.c43 = c43;

  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  double s_formula = 1536.0 * kd * std::log(18.0 * (kd + 1.0)) / (eps * eps);
  double l_formula = 11.0 * std::max(c42, c43) * kd * kd * kd * kd *
                     std::log(nd) / (psi * psi);

  double s_target = s_formula;
  double l_target = l_formula;
  if (mode == ParamMode::practical) {
    s_target *= scale.s;
    l_target *= scale.l;
  }
  // s must allow k+1 clusters to be distinguished and delta to be defined.
  out.s = std::max<std::int64_t>({2, k + 1, checked_count(s_target, "s")});
  out.l = std::max<std::int64_t>(1, checked_count(l_target, "l"));

  const double sd = static_cast<double>(out.s);
  double m_formula =
      384.0 * c31 * sd * std::sqrt(sd * kd * nd) * std::log(sd);
  if (mode == ParamMode::practical) m_formula *= scale.m;
  out.m = std::max<std::int64_t>(2, checked_count(m_formula, "m"));

  out.theta = 288.0 * sd * kd / nd;
  out.delta = 1.0 / (24.0 * sd * sd);
  return out;
}

std::string TesterParams::describe() const {
  std::ostringstream out;
  out << "mode=" << (mode == ParamMode::paper ? "paper" : "practical")
      << " n=" << n << " k=" << k << " eps=" << eps << " psi=" << psi
      << " s=" << s << " l=" << l << " m=" << m << " theta=" << theta
      << " delta=" << delta;
  return out.str();
}

KClusterResult k_cluster_test(const std::vector<EndpointSample>& samples,
                              std::int64_t set_size, std::int64_t k,
                              double theta, double delta, double c31,
                              bool strict_bounds, bool literal_rule) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  if (set_size < 1) throw std::invalid_argument("set_size must be >= 1");
  const std::int64_t m = samples.front().m;
  for (const auto& s : samples)
    if (s.m != m ||
        static_cast<std::int64_t>(s.endpoints.size()) != m)
      throw std::invalid_argument("mismatched sample sizes");

  KClusterResult res;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (l2_norm_test(samples[i].endpoints, theta) == TestVerdict::reject) {
      res.verdict = TestVerdict::reject;
      res.norm_rejected = true;
      res.norm_rejected_index = static_cast<int>(i);
      return res;
    }
  }

  const double xi = 1.0 / (4.0 * static_cast<double>(set_size));
  const double b = theta;
  res.similarity.nodes = static_cast<std::int64_t>(samples.size());
  UnionFind uf(res.similarity.nodes);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      ClosenessResult close =
          l2_closeness_test(samples[i].endpoints, samples[j].endpoints, xi, b,
                            c31, delta, strict_bounds);
      if (close.verdict == TestVerdict::accept) {
        res.similarity.edges.emplace_back(static_cast<int>(i),
                                          static_cast<int>(j));
        uf.unite(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::int64_t components = 0;
  for (int i = 0; i < res.similarity.nodes; ++i)
    if (uf.find(i) == i) ++components;
  res.similarity.components = components;

  bool within_k = components <= k;
  bool accept = literal_rule ? !within_k : within_k;
  res.verdict = accept ? TestVerdict::accept : TestVerdict::reject;
  return res;
}

TestReport triangle_k_cluster_tester(const Graph& g, const TesterParams& p,
                                     std::uint64_t seed, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  TestReport report;
  report.params = p;
  const bool strict = p.mode == ParamMode::paper;

  // Phase 1: vertices.
  SampleSet s0 = sample_vertices(g, p.s, Rng::substream(seed, 1).next_u64());
  std::vector<EndpointSample> vertex_samples;
  vertex_samples.reserve(s0.vertices.size());
  std::int64_t stopped = 0;
  for (std::size_t i = 0; i < s0.vertices.size(); ++i) {
    std::uint64_t walk_seed =
        Rng::substream(seed, 1000 + i).next_u64();
    vertex_samples.push_back(
        endpoint_distribution(g, WalkPosition::vertex(s0.vertices[i]), p.l,
                              p.m, walk_seed, report.ledger, threads));
    stopped += vertex_samples.back().stopped_count;
  }
  KClusterResult phase1 =
      k_cluster_test(vertex_samples, g.n(), p.k, p.theta, p.delta, p.c31,
                     strict, p.literal_component_rule);
  report.components_vertex = phase1.norm_rejected
                                 ? -1
                                 : phase1.similarity.components;
  report.queries_vertex_phase = report.ledger.total();
  report.phase_reached = Phase::vertex_phase;

  if (phase1.verdict == TestVerdict::reject) {
    report.verdict = TestVerdict::reject;  // abort: phase 2 never runs
    report.stopped_walks = stopped;
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
  }

  // Phase 2: edges. Sample count is doubled (edge-sampler bias allowance);
  // thresholds are rederived from the phase's own sample count and support
  // size. |E| is unknown to a sublinear tester; the declared bound
  // n*dmax/2 stands in for it.
  report.phase_reached = Phase::edge_phase;
  if (g.dmax() == 0) {
    report.verdict = TestVerdict::reject;  // edgeless: nothing to cluster
    report.stopped_walks = stopped;
    return report;
  }
  const std::int64_t s2 = 2 * p.s;
  const std::int64_t edge_support =
      std::max<std::int64_t>(1, g.n() * static_cast<std::int64_t>(g.dmax()) / 2);
  const double theta2 =
      288.0 * static_cast<double>(s2) * static_cast<double>(p.k) /
      static_cast<double>(edge_support);
  const double delta2 =
      1.0 / (24.0 * static_cast<double>(s2) * static_cast<double>(s2));

  SampleSet s1 = sample_edges(g, s2, 0.5,
                              Rng::substream(seed, 2).next_u64(),
                              report.ledger);
  std::vector<EndpointSample> edge_samples;
  edge_samples.reserve(s1.edges.size());
  for (std::size_t i = 0; i < s1.edges.size(); ++i) {
    std::uint64_t walk_seed =
        Rng::substream(seed, 2000000 + i).next_u64();
    edge_samples.push_back(
        endpoint_distribution(g, WalkPosition::edge(s1.edges[i]), p.l, p.m,
                              walk_seed, report.ledger, threads));
    stopped += edge_samples.back().stopped_count;
  }
  KClusterResult phase2 =
      k_cluster_test(edge_samples, edge_support, p.k, theta2, delta2, p.c31,
                     strict, p.literal_component_rule);
  report.components_edge =
      phase2.norm_rejected ? -1 : phase2.similarity.components;
  report.queries_edge_phase =
      report.ledger.total() - report.queries_vertex_phase;
  report.verdict = phase2.verdict;
  report.norm_rejected = phase1.norm_rejected || phase2.norm_rejected;
  report.stopped_walks = stopped;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

std::string TestReport::to_text() const {
  std::ostringstream out;
  out << "verdict=" << (verdict == TestVerdict::accept ? "accept" : "reject")
      << "\nphase_reached=" << static_cast<int>(phase_reached)
      << "\ncomponents_vertex_phase=" << components_vertex
      << "\ncomponents_edge_phase=" << components_edge
      << "\nneighbor_queries=" << ledger.neighbor_queries
      << "\ndegree_queries=" << ledger.degree_queries
      << "\ntotal_queries=" << ledger.total()
      << "\nneighbor_queries_uncached=" << ledger.neighbor_queries_uncached
      << "\nstopped_walks=" << stopped_walks << "\nparams: "
      << params.describe() << "\n";
  return out.str();
}

}  // namespace hoct
