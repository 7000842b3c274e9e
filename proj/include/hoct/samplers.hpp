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
#include <vector>

#include "hoct/graph.hpp"
#include "hoct/rng.hpp"

namespace hoct {

enum class SampleKind { vertex, edge };

struct SampleSet {
  SampleKind kind = SampleKind::vertex;
  std::uint64_t seed = 0;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  /// Rejection-sampler diagnostics (edge kind): total (v, i) trials and the
  /// measured acceptance rate, an unbiased estimate of 2|E| / (n * dmax).
  std::uint64_t trials = 0;
  double acceptance_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(edges.size()) / trials;
  }
};

/// s i.i.d. uniform vertex ids. Uniform vertex sampling is free in the query
/// model; nothing is charged to the ledger.
SampleSet sample_vertices(const Graph& g, std::int64_t s, std::uint64_t seed);

/// s i.i.d. edges, exactly uniform over E, by rejection: draw v uniform and
/// i uniform in [1, dmax]; accept when neighbor(v, i) exists. Every edge is
/// reachable through either endpoint with probability 2/(n*dmax) per trial,
/// so the achieved pointwise bias is 0 (<= any requested eta >= 0). Each
/// trial costs one neighbor query. Throws on edgeless graphs once the retry
/// cap is exhausted.
SampleSet sample_edges(const Graph& g, std::int64_t s, double eta,
                       std::uint64_t seed, QueryLedger& ledger);

}  // namespace hoct
