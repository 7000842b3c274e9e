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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hoct {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Counts oracle traffic. Sublinear components may only touch the graph
/// through the counted neighbor/degree calls, and every experiment reports
/// the ledger totals. Counters are plain integers: concurrent walkers use one
/// ledger per worker and merge, so the totals stay exact.
struct QueryLedger {
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  /// What a walker that re-queried adjacency lists on every touch would have
  /// paid. Walk steps cache lists within a single step and charge first-touch
  /// only; both numbers are reported.
  std::uint64_t neighbor_queries_uncached = 0;

  std::uint64_t total() const { return neighbor_queries + degree_queries; }

  void merge(const QueryLedger& other) {
    neighbor_queries += other.neighbor_queries;
    degree_queries += other.degree_queries;
    neighbor_queries_uncached += other.neighbor_queries_uncached;
  }
  void reset() { *this = QueryLedger{}; }
};

/// Immutable bounded-degree undirected graph in CSR form with sorted
/// adjacency. The sorted order fixes the oracle's "i-th neighbor" once and
/// for all: neighbor(v, i) is the i-th smallest neighbor id.
///
/// Two access levels exist on purpose. The counted oracle calls (neighbor,
/// degree) are the only gateway for sublinear components; the *_raw accessors
/// are for the exact oracle subsystem, generators and tests, which are
/// allowed to see the whole graph.
class Graph {
 public:
  Graph() = default;

  /// Builds from an undirected edge list. Duplicate edges and both
  /// orientations are tolerated; self-loops are rejected. If n < 0 the vertex
  /// count is max id + 1; if dmax_override < 0 the observed maximum degree is
  /// declared.
  static Graph from_edges(std::vector<Edge> edges, std::int64_t n = -1,
                          int dmax_override = -1);

  /// Parses "u v" lines ('#' starts a comment, blank lines skipped).
  /// Non-integer tokens and self-loops are rejected.
  static Graph from_edge_list_text(const std::string& text,
                                   std::int64_t n = -1,
                                   int dmax_override = -1);
  static Graph load_edge_list_file(const std::string& path,
                                   std::int64_t n = -1,
                                   int dmax_override = -1);

  std::string to_edge_list_text() const;
  void save_edge_list_file(const std::string& path) const;

  VertexId n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(adj_.size()) / 2; }
  int dmax() const { return dmax_; }

  // --- counted oracle -------------------------------------------------

  /// Returns the i-th (1-based) neighbor of v in ascending id order, or
  /// kNullNeighbor when i exceeds deg(v). v out of range throws; that is an
  /// error, not NULL.
  VertexId neighbor(VertexId v, std::int64_t i, QueryLedger& ledger) const;
  int degree(VertexId v, QueryLedger& ledger) const;

  static constexpr VertexId kNullNeighbor = -1;

  // --- uncounted access (oracle subsystem / harness only) --------------

  int degree_raw(VertexId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const VertexId> neighbors_raw(VertexId v) const {
    return {adj_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  bool has_edge(VertexId u, VertexId v) const;
  void check_vertex(VertexId v) const;

  /// Exact number of common neighbors of u and v (sorted-merge; uncounted).
  int common_neighbors_raw(VertexId u, VertexId v) const;

 private:
  VertexId n_ = 0;
  int dmax_ = 0;
  std::vector<std::int64_t> offsets_;  // size n_+1
  std::vector<VertexId> adj_;          // sorted within each vertex block
};

}  // namespace hoct
