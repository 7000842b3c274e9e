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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoct/dist.hpp"
#include "hoct/graph.hpp"
#include "hoct/walks.hpp"

namespace hoct {

enum class ParamMode { paper, practical };

/// Multipliers applied to the closed-form parameters in practical mode. The
/// closed forms target asymptotic guarantees and are astronomically large at
/// desk scale (k=1, eps=0.5 already gives s ~ 22017 and m in the billions);
/// the multipliers keep the n-dependence intact so scaling experiments stay
/// meaningful.
/// Defaults are calibrated at (n=1000, k=2, eps=psi=0.5) against generated
/// instances: s ~ 12, l ~ 200, m ~ 1600 there, scaling as sqrt(n)/log(n)
/// dictate elsewhere.
struct PracticalScale {
  double s = 2.45e-4;
  double l = 4.1e-2;
  double m = 9.0e-4;
};

struct TesterParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double eps = 0;
  double psi = 0;
  ParamMode mode = ParamMode::paper;
  PracticalScale scale;
  double c31 = 1.0, c42 = 1.0, c43 = 1.0;

  std::int64_t s = 0;  // vertex sample count
  std::int64_t l = 0;  // lazy walk length
  std::int64_t m = 0;  // walks per sampled item
  double theta = 0;    // norm-test threshold, 288*s*k/n
  double delta = 0;    // per-test failure budget, 1/(24 s^2)

  /// Alg. 3 as printed accepts on H having more than k components, which
  /// contradicts the stated guarantee; the corrected rule (accept iff
  /// components <= k) is the default. The literal branch stays available
  /// for audits.
  bool literal_component_rule = false;

  std::string describe() const;
};

/// Parameter schedule: s = 1536 k ln(18(k+1)) / eps^2,
/// l = 11 max(c42, c43) k^4 ln(n) / psi^2, m = 384 c31 s sqrt(s k n) ln s,
/// theta = 288 s k / n, delta = 1/(24 s^2). Practical mode multiplies s, l
/// and m by the configured scales (s first; theta, delta and m are derived
/// from the scaled s so the bundle stays self-consistent). Throws when a
/// count overflows.
TesterParams compute_params(std::int64_t n, std::int64_t k, double eps,
                            double psi, ParamMode mode,
                            PracticalScale scale = {}, double c31 = 1.0,
                            double c42 = 1.0, double c43 = 1.0);

/// Similarity graph over the sampled items; edges join pairs whose endpoint
/// distributions pass the closeness test.
struct SimilarityGraph {
  std::int64_t nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::int64_t components = 0;
};

struct KClusterResult {
  TestVerdict verdict = TestVerdict::reject;
  bool norm_rejected = false;
  int norm_rejected_index = -1;
  SimilarityGraph similarity;
};

/// Algorithm 3. set_size is the maximum support size of the endpoint
/// distributions (|V| for the vertex phase, the |E| surrogate for the edge
/// phase); the closeness threshold is fixed at xi = 1/(4*set_size) and
/// b = theta. Rejects when any norm test rejects, otherwise accepts iff the
/// similarity graph has at most k components (or the literal rule when
/// requested).
KClusterResult k_cluster_test(const std::vector<EndpointSample>& samples,
                              std::int64_t set_size, std::int64_t k,
                              double theta, double delta, double c31,
                              bool strict_bounds, bool literal_rule);

enum class Phase { vertex_phase = 1, edge_phase = 2 };

struct TestReport {
  TestVerdict verdict = TestVerdict::reject;
  Phase phase_reached = Phase::vertex_phase;
  std::int64_t components_vertex = -1;
  std::int64_t components_edge = -1;
  bool norm_rejected = false;
  QueryLedger ledger;
  std::uint64_t queries_vertex_phase = 0;
  std::uint64_t queries_edge_phase = 0;
  std::int64_t stopped_walks = 0;
  double wall_ms = 0;  // informational; excluded from deterministic output
  TesterParams params;

  /// Deterministic structured record (wall time deliberately omitted so
  /// identical seeds give byte-identical output).
  std::string to_text() const;
};

/// Algorithm 2: vertex phase (s uniform vertices, m lazy vertex-mode walks
/// of length l each, k-cluster-test; abort on reject), then edge phase (2s
/// uniform edges via the rejection sampler, m lazy edge-mode walks,
/// k-cluster-test with its own thresholds). An edgeless graph rejects with a
/// diagnostic instead of entering the edge phase.
TestReport triangle_k_cluster_tester(const Graph& g, const TesterParams& p,
                                     std::uint64_t seed, int threads = 1);

}  // namespace hoct
