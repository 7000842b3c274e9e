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

#include "hoct/graph.hpp"

namespace hoct {

enum class IntraModel {
  /// Chain of K4 blocks glued on shared edges (odd leftover gets an apex
  /// triangle). Deterministic, oracle-friendly at small sizes: block size 4
  /// is exactly K4.
  clique_chain,
  /// Union of random triangles up to a degree target, followed by cover
  /// passes that leave every vertex and edge inside a triangle and the block
  /// connected. Expands like a random graph; the default for experiments.
  tri_regular,
};

enum class FarModel {
  /// k+1 well-separated triangle-rich blocks. Any k-cluster must merge two
  /// blocks whose joint internal conductance is ~0; pulling it up to psi_in
  /// needs on the order of min-block-volume edge insertions, far above
  /// eps*dmax*n at the generated densities.
  extra_components,
  /// n/10 blocks of ~10 vertices. For k << n/10 a k-clustering must fuse
  /// ~n/(10k) blocks per cluster with zero connecting triangles; the edge
  /// modifications needed grow linearly in n with a constant well above
  /// eps*dmax at the generated densities.
  shattered,
};

IntraModel intra_model_from_string(const std::string& name);
FarModel far_model_from_string(const std::string& name);

struct GenOptions {
  int degree_target = 10;  // tri_regular blocks aim for this average degree
  int dmax_cap = 16;       // hard per-vertex budget during generation
};

/// k triangle-rich blocks of n/k vertices each plus cross_edges inter-block
/// edges chosen to close no triangle (so they stay invisible to 2-dimension
/// walks and the external conductance stays near 0). Requires k | n. Blocks
/// are verified constructions: tests check them against the exact oracle at
/// small n.
Graph gen_clusterable(std::int64_t n, std::int64_t k, IntraModel intra,
                      std::int64_t cross_edges, std::uint64_t seed,
                      GenOptions opt = {});

/// Instances far from (k, psi)-clusterable by construction margin (the
/// margins are documented per model above; farness is argued, not
/// certified).
Graph gen_far(std::int64_t n, std::int64_t k, FarModel model,
              std::uint64_t seed, GenOptions opt = {});

}  // namespace hoct
