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
#include "hoct/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hoct {

Graph Graph::from_edges(std::vector<Edge> edges, std::int64_t n,
                        int dmax_override) {
  std::int64_t max_id = -1;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    max_id = std::max<std::int64_t>(max_id, v);
  }
  if (n < 0) n = max_id + 1;
  if (max_id >= n)
    throw std::invalid_argument("vertex id exceeds declared vertex count");
  if (n > INT32_MAX)
    throw std::invalid_argument("vertex count exceeds 32-bit id space");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = static_cast<VertexId>(n);
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::int64_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  // Insertion order of the sorted edge list already leaves each block sorted
  // for the smaller endpoint; sort defensively for the larger one.
  int observed = 0;
  for (std::int64_t v = 0; v < n; ++v) {
    auto begin = g.adj_.begin() + g.offsets_[v];
    auto end = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(begin, end);
    observed = std::max<int>(observed, static_cast<int>(end - begin));
  }
  if (dmax_override >= 0) {
    if (observed > dmax_override)
      throw std::invalid_argument("graph violates declared maximum degree");
    g.dmax_ = dmax_override;
  } else {
    g.dmax_ = observed;
  }
  return g;
}

Graph Graph::from_edge_list_text(const std::string& text, std::int64_t n,
                                 int dmax_override) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok_u, tok_v, extra;
    if (!(ls >> tok_u)) continue;  // blank
    if (!(ls >> tok_v))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected two vertex ids");
    if (ls >> extra)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": trailing token '" + extra + "'");
    auto parse = [&](const std::string& tok) -> VertexId {
      std::size_t pos = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || value < 0)
        throw std::invalid_argument("edge list line " +
                                    std::to_string(lineno) +
                                    ": non-integer token '" + tok + "'");
      return static_cast<VertexId>(value);
    };
    VertexId u = parse(tok_u);
    VertexId v = parse(tok_v);
    if (u == v)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": self-loop rejected");
    edges.push_back(make_edge(u, v));
  }
  return from_edges(std::move(edges), n, dmax_override);
}

Graph Graph::load_edge_list_file(const std::string& path, std::int64_t n,
                                 int dmax_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_edge_list_text(buf.str(), n, dmax_override);
}

std::string Graph::to_edge_list_text() const {
  std::ostringstream out;
  for (VertexId v = 0; v < n_; ++v)
    for (VertexId u : neighbors_raw(v))
      if (v < u) out << v << ' ' << u << '\n';
  return out.str();
}

void Graph::save_edge_list_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  out << to_edge_list_text();
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " out of range [0," + std::to_string(n_) + ")");
}

VertexId Graph::neighbor(VertexId v, std::int64_t i,
                         QueryLedger& ledger) const {
  check_vertex(v);
  if (i < 1) throw std::invalid_argument("neighbor index is 1-based");
  ++ledger.neighbor_queries;
  ++ledger.neighbor_queries_uncached;
  if (i > degree_raw(v)) return kNullNeighbor;
  return adj_[offsets_[v] + (i - 1)];
}

int Graph::degree(VertexId v, QueryLedger& ledger) const {
  check_vertex(v);
  ++ledger.degree_queries;
  return degree_raw(v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto nb = neighbors_raw(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::common_neighbors_raw(VertexId u, VertexId v) const {
  auto a = neighbors_raw(u);
  auto b = neighbors_raw(v);
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace hoct
