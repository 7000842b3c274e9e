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

#include "hoct/complex.hpp"
#include "hoct/graph.hpp"
#include "hoct/rng.hpp"

namespace hoct::checks {

struct CheckResult {
  bool pass = false;
  std::int64_t cases = 0;     // instances examined
  std::int64_t failures = 0;  // violations found
  std::string details;        // human-readable summary / first counterexample
};

// --- enumeration helpers ----------------------------------------------------

/// Graph on n vertices from an edge-subset bitmask over the C(n,2) pairs in
/// lexicographic (i<j) order.
Graph graph_from_mask(int n, std::uint64_t mask);
bool mask_connected(int n, std::uint64_t mask);
Graph random_connected_graph(int n, double p, Rng& rng);
/// Random gluing of K4/K5 blocks (pure at d=3 by construction).
Graph random_clique_soup(int max_n, Rng& rng);

// --- identity sweeps --------------------------------------------------------

/// Factor-2 equivalence of the dimension-1 normalized conductances with the
/// classic ones: for every connected graph on 3..max_n vertices and every
/// vertex subset S, Psi_{1,X_0}(S) == 2*Phi_V(S) exactly, and the
/// dimension-1 internal conductance equals twice the classic internal
/// conductance. Exact rational comparison; needs max_n <= 7.
CheckResult theorem1_sweep(int max_n, int threads = 1);

/// Cross-dimension norm identities on every pure 3-complex raised from a
/// graph on 4..max_n vertices: ||C||_3 == ||C||_t for t in {1,2} (checked on
/// the singleton cochains, which is equivalent), and
/// deg_3 == (t-i)/(3-i) * deg_t per face. Reports the first counterexample
/// verbatim when one exists.
CheckResult lemma2_sweep(int max_n, int threads = 1);

/// Downward closure of colorful expansion: random outlier-free graphs on
/// <= max_n vertices (pure at d=3, ground sets under the enumeration cap);
/// for each, the tight d=3 expansion constant must still be met by the
/// 2-skeleton. Exact rational comparison.
CheckResult lemma3_random(int instances, int max_n, std::uint64_t seed);

/// Grid check of (1 - eps^2/4) > (1 - eps^2/36)^11 on eps in (0,1], plus the
/// closed-form spot value f(1) = 3/4 - (35/36)^11.
CheckResult lemma10_grid(double step = 1e-3);

/// Cluster downward compatibility: on random outlier-free instances, a
/// partition verified as a d=3 cluster at its measured thresholds must
/// verify at every t < 3 with the same thresholds. Exact rationals.
CheckResult theorem2_random(int instances, std::uint64_t seed);

/// Spectral mixing bound ||pi^t - pi||_2 <= sqrt(dmax/dmin) * alpha^t for
/// exact matrix powers on random connected graphs, all point-mass starts,
/// t <= t_max.
CheckResult lemma4_random(int graphs, int t_max, std::uint64_t seed);

/// Mixing rate on certified colorful expanders: for every certified
/// eps-colorful expander in the suite's population (exhaustive 4..5
/// vertices, sampled 6, curated and random instances up to 12), both
/// high-order walks satisfy alpha <= 1 - eps^2/18.
CheckResult lemma9_expanders(std::uint64_t seed);

/// 2DRW transition matrices equal the weighted-walk matrices on the induced
/// 0-/1-graphs (exact rationals), stationary distributions are proportional
/// to twice the triangle degrees, and detailed balance holds. Exhaustive up
/// to exhaustive_max_n, plus random graphs on 7..8 vertices.
CheckResult walk_equivalence(int exhaustive_max_n, int random_per_size,
                             std::uint64_t seed);

// --- good-vertex diagnostic (exact, small instances) ------------------------

struct GoodVertexReport {
  bool norm_ok = false;          // ||p_u^l||^2 <= 72 s k / n
  bool cluster_size_ok = false;  // |C(u)| >= n / (36 s k)
  bool core_ok = false;          // u in a large pairwise-close core of C(u)
  bool good = false;
  double norm_sq = 0, norm_bound = 0;
  std::int64_t cluster_size = 0;
  double cluster_size_bound = 0;
  std::int64_t core_size = 0;
  double core_required = 0;
};

/// Evaluates the three good-vertex conditions for u with exact matrix-power
/// walk distributions against a known partition. The core condition is
/// decided exactly: maximum pairwise-close subset containing u (threshold
/// 1/(4n)) via branch and bound.
GoodVertexReport is_good_vertex(const Graph& g, VertexId u,
                                const std::vector<std::vector<VertexId>>&
                                    clusters,
                                std::int64_t l, std::int64_t s,
                                std::int64_t k);

}  // namespace hoct::checks
