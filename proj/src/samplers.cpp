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
#include "hoct/samplers.hpp"

#include <stdexcept>

namespace hoct {

SampleSet sample_vertices(const Graph& g, std::int64_t s, std::uint64_t seed) {
  if (s < 1) throw std::invalid_argument("sample count must be >= 1");
  if (g.n() == 0) throw std::invalid_argument("graph has no vertices");
  SampleSet set;
  set.kind = SampleKind::vertex;
  set.seed = seed;
  Rng rng(seed);
  set.vertices.reserve(s);
  for (std::int64_t i = 0; i < s; ++i)
    set.vertices.push_back(static_cast<VertexId>(rng.below(g.n())));
  return set;
}

SampleSet sample_edges(const Graph& g, std::int64_t s, double eta,
                       std::uint64_t seed, QueryLedger& ledger) {
  if (s < 1) throw std::invalid_argument("sample count must be >= 1");
  if (eta < 0) throw std::invalid_argument("bias bound eta must be >= 0");
  if (g.n() == 0 || g.dmax() == 0)
    throw std::runtime_error("edge sampler: graph has no edges");

  SampleSet set;
  set.kind = SampleKind::edge;
  set.seed = seed;
  Rng rng(seed);
  set.edges.reserve(s);

  // Expected trials per edge = n*dmax / (2|E|) <= n*dmax / 2; the cap only
  // ever triggers on (near-)edgeless inputs.
  const std::uint64_t cap_per_edge =
      64 * static_cast<std::uint64_t>(g.n()) * g.dmax() + 1024;
  while (static_cast<std::int64_t>(set.edges.size()) < s) {
    std::uint64_t spent = 0;
    for (;;) {
      if (++spent > cap_per_edge)
        throw std::runtime_error(
            "edge sampler: retry cap exhausted (edgeless graph?)");
      ++set.trials;
      VertexId v = static_cast<VertexId>(rng.below(g.n()));
      std::int64_t i = static_cast<std::int64_t>(rng.below(g.dmax())) + 1;
      VertexId u = g.neighbor(v, i, ledger);
      if (u != Graph::kNullNeighbor) {
        set.edges.push_back(make_edge(v, u));
        break;
      }
    }
  }
  return set;
}

}  // namespace hoct
