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
#include <optional>
#include <vector>

#include "hoct/complex.hpp"
#include "hoct/graph.hpp"
#include "hoct/rational.hpp"
#include "hoct/rng.hpp"

namespace hoct {

enum class WalkMode { vertex, edge };

/// Positions are encoded as 64-bit ids so vertex- and edge-mode endpoints
/// share one multiset representation: vertices as their id, edges as
/// (u << 32) | v with u < v.
inline std::int64_t encode_vertex(VertexId v) { return v; }
inline std::int64_t encode_edge(Edge e) {
  return (static_cast<std::int64_t>(e.first) << 32) |
         static_cast<std::uint32_t>(e.second);
}

struct WalkPosition {
  WalkMode mode = WalkMode::vertex;
  VertexId v = 0;
  Edge e{0, 0};

  static WalkPosition vertex(VertexId v) { return {WalkMode::vertex, v, {}}; }
  static WalkPosition edge(Edge e) { return {WalkMode::edge, 0, e}; }
  std::int64_t encoded() const {
    return mode == WalkMode::vertex ? encode_vertex(v) : encode_edge(e);
  }
};

struct WalkState {
  WalkPosition pos;
  std::int64_t step = 0;
  bool stopped = false;  // hit an outlier: no candidate move existed
};

/// Empirical endpoint distribution pi_u^l: the resting positions of m
/// independent lazy walks of length l. Stopped walks contribute their final
/// position; stopped_count reports how many there were so experiments can
/// pre-filter outlier effects.
struct EndpointSample {
  WalkMode mode = WalkMode::vertex;
  std::int64_t origin = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> endpoints;  // size m, indexed by walk
  std::int64_t stopped_count = 0;

  std::string to_csv() const;
};

// --- simulated 2-dimension random walk over the query oracle ---------------

/// One non-lazy vertex-mode move: picks neighbor u with probability
/// proportional to |N(u) ∩ N(v)|. nullopt = STOP (v lies in no triangle).
/// All graph access goes through the counted oracle.
std::optional<VertexId> twodrw_vertex_step(const Graph& g, VertexId v,
                                           Rng& rng, QueryLedger& ledger);

/// One non-lazy edge-mode move: uniform over the candidate set
/// {(x,z), (y,z) : z common neighbor of x,y} of size 2*deg_2(e).
std::optional<Edge> twodrw_edge_step(const Graph& g, Edge e, Rng& rng,
                                     QueryLedger& ledger);

/// Lazy walk: each step stays put with probability 1/2, otherwise applies
/// the mode's move. The lazy coin is drawn before any query is paid. STOP is
/// absorbing.
WalkState lazy_walk(const Graph& g, WalkPosition start, std::int64_t l,
                    Rng& rng, QueryLedger& ledger);

/// m independent lazy walks with per-walk RNG substreams of (seed, index);
/// result and ledger totals are independent of thread count.
EndpointSample endpoint_distribution(const Graph& g, WalkPosition origin,
                                     std::int64_t l, std::int64_t m,
                                     std::uint64_t seed, QueryLedger& ledger,
                                     int threads = 1);

// --- high-order walk on an explicit complex (oracle subsystem) -------------

/// One up-down move from faces(i)[face]: choose an (i+1)-face sigma
/// containing it with probability proportional to deg_d(sigma), then a
/// uniform different i-subface of sigma. Returns the new face index or -1
/// (STOP).
int highorder_walk_step(const ComplexView& x, int i, int face, Rng& rng);

// --- exact machinery --------------------------------------------------------

/// Row-stochastic transition matrix with exact rational entries. Rows whose
/// position has no move (outliers) are absorbing self-loops.
struct TransitionMatrix {
  std::int64_t n = 0;
  std::vector<Rational> p;  // row-major
  const Rational& at(std::int64_t r, std::int64_t c) const {
    return p[r * n + c];
  }
  Rational& at(std::int64_t r, std::int64_t c) { return p[r * n + c]; }
};

TransitionMatrix twodrw_vertex_transition(const Graph& g, bool lazy);
/// edge_order receives the normalized edge list indexing the matrix.
TransitionMatrix twodrw_edge_transition(const Graph& g, bool lazy,
                                        std::vector<Edge>* edge_order);
TransitionMatrix highorder_transition(const ComplexView& x, int i, bool lazy);
/// Weighted simple walk on an induced i-graph: P(a,b) = w(a,b) / wdeg(a).
TransitionMatrix weighted_walk_transition(const WeightedGraph& w, bool lazy);

/// pi_u^l by dense matrix power (double arithmetic).
std::vector<double> exact_vertex_endpoint_distribution(const Graph& g,
                                                       VertexId origin,
                                                       std::int64_t l,
                                                       bool lazy);
std::pair<std::vector<double>, std::vector<Edge>>
exact_edge_endpoint_distribution(const Graph& g, Edge origin, std::int64_t l,
                                 bool lazy);

/// alpha = max(|alpha_2|, |alpha_n|) of the normalized (weighted) adjacency
/// operator, by power iteration with deflation against the exact stationary
/// vector. Throws on disconnected or zero-degree input.
double spectral_mixing_rate(const WeightedGraph& w, bool lazy = false,
                            double tol = 1e-8);

}  // namespace hoct
