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
#include "hoct/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hoct {

namespace {

/// Reads the full adjacency list of v through the counted oracle.
/// Needs deg(v) to be known already (walkers carry their position's degree).
void read_adjacency(const Graph& g, VertexId v, int deg, QueryLedger& ledger,
                    std::vector<VertexId>& out) {
  out.clear();
  for (int i = 1; i <= deg; ++i)
    out.push_back(g.neighbor(v, i, ledger));
}

int sorted_common_count(const std::vector<VertexId>& a,
                        const std::vector<VertexId>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      ++count, ++i, ++j;
  }
  return count;
}

struct VertexStepScratch {
  std::vector<VertexId> adj_v;
  std::vector<VertexId> adj_u;
  std::vector<std::int64_t> weights;
  std::vector<int> deg_u;
};

/// Core of the vertex-mode move. deg_v must already be known (one degree
/// query at walk start; afterwards the walker knows the degree of wherever
/// it moved). Returns the chosen neighbor and its degree, or nullopt on
/// STOP. Adjacency lists are read once per step (first-touch counting); the
/// uncached-equivalent cost additionally re-reads adj(v) per neighbor.
std::optional<std::pair<VertexId, int>> vertex_step_core(
    const Graph& g, VertexId v, int deg_v, Rng& rng, QueryLedger& ledger,
    VertexStepScratch& scratch) {
  if (deg_v == 0) return std::nullopt;
  read_adjacency(g, v, deg_v, ledger, scratch.adj_v);
  ledger.neighbor_queries_uncached +=
      static_cast<std::uint64_t>(deg_v) * deg_v;

  scratch.weights.clear();
  scratch.deg_u.clear();
  std::int64_t total = 0;
  for (VertexId u : scratch.adj_v) {
    int deg_u = g.degree(u, ledger);
    read_adjacency(g, u, deg_u, ledger, scratch.adj_u);
    std::int64_t c = sorted_common_count(scratch.adj_v, scratch.adj_u);
    scratch.weights.push_back(c);
    scratch.deg_u.push_back(deg_u);
    total += c;
  }
  if (total == 0) return std::nullopt;
  std::int64_t r = static_cast<std::int64_t>(rng.below(total));
  for (std::size_t i = 0; i < scratch.weights.size(); ++i) {
    if (r < scratch.weights[i])
      return std::make_pair(scratch.adj_v[i], scratch.deg_u[i]);
    r -= scratch.weights[i];
  }
  return std::nullopt;  // unreachable
}

struct EdgeStepScratch {
  std::vector<VertexId> adj_x;
  std::vector<VertexId> adj_y;
  std::vector<VertexId> commons;
};

/// Core of the edge-mode move; degrees of both endpoints must be known.
/// Returns the new edge plus the degrees of its endpoints.
std::optional<std::pair<Edge, std::pair<int, int>>> edge_step_core(
    const Graph& g, Edge e, int deg_x, int deg_y, Rng& rng,
    QueryLedger& ledger, EdgeStepScratch& scratch) {
  auto [x, y] = e;
  read_adjacency(g, x, deg_x, ledger, scratch.adj_x);
  read_adjacency(g, y, deg_y, ledger, scratch.adj_y);
  scratch.commons.clear();
  std::size_t i = 0, j = 0;
  while (i < scratch.adj_x.size() && j < scratch.adj_y.size()) {
    if (scratch.adj_x[i] < scratch.adj_y[j])
      ++i;
    else if (scratch.adj_x[i] > scratch.adj_y[j])
      ++j;
    else {
      scratch.commons.push_back(scratch.adj_x[i]);
      ++i, ++j;
    }
  }
  if (scratch.commons.empty()) return std::nullopt;
  // Candidate set: (x,z) and (y,z) per common neighbor z, |C(e)|=2*deg_2(e).
  std::uint64_t pick = rng.below(2 * scratch.commons.size());
  VertexId z = scratch.commons[pick / 2];
  VertexId kept = (pick % 2 == 0) ? x : y;
  int deg_kept = (pick % 2 == 0) ? deg_x : deg_y;
  int deg_z = g.degree(z, ledger);
  return std::make_pair(make_edge(kept, z),
                        kept < z ? std::make_pair(deg_kept, deg_z)
                                 : std::make_pair(deg_z, deg_kept));
}

}  // namespace

std::optional<VertexId> twodrw_vertex_step(const Graph& g, VertexId v,
                                           Rng& rng, QueryLedger& ledger) {
  g.check_vertex(v);
  VertexStepScratch scratch;
  int deg_v = g.degree(v, ledger);
  auto moved = vertex_step_core(g, v, deg_v, rng, ledger, scratch);
  if (!moved) return std::nullopt;
  return moved->first;
}

std::optional<Edge> twodrw_edge_step(const Graph& g, Edge e, Rng& rng,
                                     QueryLedger& ledger) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("edge-mode walk started on a non-edge");
  EdgeStepScratch scratch;
  int deg_x = g.degree(e.first, ledger);
  int deg_y = g.degree(e.second, ledger);
  auto moved = edge_step_core(g, e, deg_x, deg_y, rng, ledger, scratch);
  if (!moved) return std::nullopt;
  return moved->first;
}

WalkState lazy_walk(const Graph& g, WalkPosition start, std::int64_t l,
                    Rng& rng, QueryLedger& ledger) {
  if (l < 0) throw std::invalid_argument("walk length must be >= 0");
  WalkState state;
  state.pos = start;

  if (start.mode == WalkMode::vertex) {
    g.check_vertex(start.v);
    VertexStepScratch scratch;
    int deg = g.degree(start.v, ledger);
    for (std::int64_t t = 0; t < l; ++t) {
      if (rng.coin()) {
        ++state.step;
        continue;  // lazy: stay, pay nothing
      }
      auto moved =
          vertex_step_core(g, state.pos.v, deg, rng, ledger, scratch);
      if (!moved) {
        state.stopped = true;
        break;
      }
      state.pos.v = moved->first;
      deg = moved->second;
      ++state.step;
    }
  } else {
    Edge e = make_edge(start.e.first, start.e.second);
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("edge-mode walk started on a non-edge");
    state.pos.e = e;
    EdgeStepScratch scratch;
    int deg_x = g.degree(e.first, ledger);
    int deg_y = g.degree(e.second, ledger);
    for (std::int64_t t = 0; t < l; ++t) {
      if (rng.coin()) {
        ++state.step;
        continue;
      }
      auto moved = edge_step_core(g, state.pos.e, deg_x, deg_y, rng, ledger,
                                  scratch);
      if (!moved) {
        state.stopped = true;
        break;
      }
      state.pos.e = moved->first;
      deg_x = moved->second.first;
      deg_y = moved->second.second;
      ++state.step;
    }
  }
  return state;
}

EndpointSample endpoint_distribution(const Graph& g, WalkPosition origin,
                                     std::int64_t l, std::int64_t m,
                                     std::uint64_t seed, QueryLedger& ledger,
                                     int threads) {
  if (m < 1) throw std::invalid_argument("walk count m must be >= 1");
  EndpointSample sample;
  sample.mode = origin.mode;
  sample.origin = origin.encoded();
  sample.l = l;
  sample.m = m;
  sample.endpoints.assign(m, 0);

  auto run_range = [&](std::int64_t begin, std::int64_t end,
                       QueryLedger& local, std::int64_t& stopped) {
    for (std::int64_t w = begin; w < end; ++w) {
      Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(w));
      WalkState st = lazy_walk(g, origin, l, rng, local);
      sample.endpoints[w] = st.pos.encoded();
      if (st.stopped) ++stopped;
    }
  };

  if (threads <= 1 || m < 2 * threads) {
    std::int64_t stopped = 0;
    run_range(0, m, ledger, stopped);
    sample.stopped_count = stopped;
    return sample;
  }

  std::vector<QueryLedger> ledgers(threads);
  std::vector<std::int64_t> stops(threads, 0);
  std::vector<std::thread> pool;
  std::int64_t chunk = (m + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::int64_t begin = t * chunk;
    std::int64_t end = std::min<std::int64_t>(m, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(run_range, begin, end, std::ref(ledgers[t]),
                      std::ref(stops[t]));
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < threads; ++t) {
    ledger.merge(ledgers[t]);
    sample.stopped_count += stops[t];
  }
  return sample;
}

std::string EndpointSample::to_csv() const {
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t e : endpoints) ++counts[e];
  std::ostringstream out;
  out << "origin,endpoint,count\n";
  for (const auto& [endpoint, count] : counts)
    out << origin << ',' << endpoint << ',' << count << '\n';
  return out.str();
}

int highorder_walk_step(const ComplexView& x, int i, int face, Rng& rng) {
  if (i < 0 || i >= x.d())
    throw std::invalid_argument("high-order walk needs 0 <= i < d");
  if (face < 0 || static_cast<std::size_t>(face) >= x.faces(i).size())
    throw std::invalid_argument("not an i-face of the complex");

  // Up: sigma containing the face, probability proportional to deg_d.
  const auto& next = x.faces(i + 1);
  std::vector<int> ups;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < next.size(); ++j) {
    if ((next[j] & x.faces(i)[face]) != x.faces(i)[face]) continue;
    std::int64_t deg = x.degrees(i + 1)[j];
    if (deg == 0) continue;
    ups.push_back(static_cast<int>(j));
    total += deg;
  }
  if (total == 0) return -1;  // STOP: isolated face
  std::int64_t r = static_cast<std::int64_t>(rng.below(total));
  int sigma = -1;
  for (int j : ups) {
    std::int64_t deg = x.degrees(i + 1)[j];
    if (r < deg) {
      sigma = j;
      break;
    }
    r -= deg;
  }
  // Down: uniform subface different from the current one.
  auto sub = x.subfaces(i + 1, sigma);
  std::vector<int> choices;
  for (int sj : sub)
    if (sj != face) choices.push_back(sj);
  return choices[rng.below(choices.size())];
}

namespace {

TransitionMatrix make_lazy(TransitionMatrix m) {
  const Rational half(1, 2);
  for (std::int64_t r = 0; r < m.n; ++r)
    for (std::int64_t c = 0; c < m.n; ++c) {
      Rational v = m.at(r, c) * half;
      if (r == c) v = v + half;
      m.at(r, c) = v;
    }
  return m;
}

}  // namespace

TransitionMatrix twodrw_vertex_transition(const Graph& g, bool lazy) {
  TransitionMatrix m;
  m.n = g.n();
  m.p.assign(m.n * m.n, Rational(0));
  for (VertexId v = 0; v < g.n(); ++v) {
    std::int64_t total = 0;
    std::vector<std::pair<VertexId, std::int64_t>> weights;
    for (VertexId u : g.neighbors_raw(v)) {
      std::int64_t c = g.common_neighbors_raw(v, u);
      if (c > 0) weights.emplace_back(u, c);
      total += c;
    }
    if (total == 0) {
      m.at(v, v) = Rational(1);  // outlier: absorbing
      continue;
    }
    for (auto [u, c] : weights) m.at(v, u) = Rational(c, total);
  }
  return lazy ? make_lazy(std::move(m)) : m;
}

TransitionMatrix twodrw_edge_transition(const Graph& g, bool lazy,
                                        std::vector<Edge>* edge_order) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < g.n(); ++v)
    for (VertexId u : g.neighbors_raw(v))
      if (v < u) edges.emplace_back(v, u);
  std::sort(edges.begin(), edges.end());
  auto index_of = [&](Edge e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return static_cast<std::int64_t>(it - edges.begin());
  };

  TransitionMatrix m;
  m.n = static_cast<std::int64_t>(edges.size());
  m.p.assign(m.n * m.n, Rational(0));
  for (std::int64_t i = 0; i < m.n; ++i) {
    auto [x, y] = edges[i];
    auto ax = g.neighbors_raw(x);
    auto ay = g.neighbors_raw(y);
    std::vector<VertexId> commons;
    std::set_intersection(ax.begin(), ax.end(), ay.begin(), ay.end(),
                          std::back_inserter(commons));
    if (commons.empty()) {
      m.at(i, i) = Rational(1);
      continue;
    }
    std::int64_t den = 2 * static_cast<std::int64_t>(commons.size());
    for (VertexId z : commons) {
      m.at(i, index_of(make_edge(x, z))) =
          m.at(i, index_of(make_edge(x, z))) + Rational(1, den);
      m.at(i, index_of(make_edge(y, z))) =
          m.at(i, index_of(make_edge(y, z))) + Rational(1, den);
    }
  }
  if (edge_order) *edge_order = std::move(edges);
  return lazy ? make_lazy(std::move(m)) : m;
}

TransitionMatrix weighted_walk_transition(const WeightedGraph& w, bool lazy) {
  TransitionMatrix m;
  m.n = w.n;
  m.p.assign(m.n * m.n, Rational(0));
  for (const auto& [a, b, weight] : w.edges) {
    m.at(a, b) = m.at(a, b) + Rational(weight, 1);
    m.at(b, a) = m.at(b, a) + Rational(weight, 1);
  }
  for (std::int64_t r = 0; r < m.n; ++r) {
    if (w.wdeg[r] == 0) {
      m.at(r, r) = Rational(1);
      continue;
    }
    Rational inv(1, w.wdeg[r]);
    for (std::int64_t c = 0; c < m.n; ++c) m.at(r, c) = m.at(r, c) * inv;
  }
  return lazy ? make_lazy(std::move(m)) : m;
}

TransitionMatrix highorder_transition(const ComplexView& x, int i, bool lazy) {
  return weighted_walk_transition(induced_i_graph(x, i), lazy);
}

namespace {

std::vector<double> to_double_matrix(const TransitionMatrix& m) {
  std::vector<double> a(m.p.size());
  for (std::size_t i = 0; i < m.p.size(); ++i) a[i] = m.p[i].to_double();
  return a;
}

std::vector<double> power_distribution(const std::vector<double>& mat,
                                       std::int64_t n, std::int64_t origin,
                                       std::int64_t steps) {
  std::vector<double> pi(n, 0.0), nxt(n, 0.0);
  pi[origin] = 1.0;
  for (std::int64_t t = 0; t < steps; ++t) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (std::int64_t r = 0; r < n; ++r) {
      double p = pi[r];
      if (p == 0.0) continue;
      const double* row = mat.data() + r * n;
      for (std::int64_t c = 0; c < n; ++c) nxt[c] += p * row[c];
    }
    pi.swap(nxt);
  }
  return pi;
}

}  // namespace

std::vector<double> exact_vertex_endpoint_distribution(const Graph& g,
                                                       VertexId origin,
                                                       std::int64_t l,
                                                       bool lazy) {
  g.check_vertex(origin);
  TransitionMatrix m = twodrw_vertex_transition(g, lazy);
  return power_distribution(to_double_matrix(m), m.n, origin, l);
}

std::pair<std::vector<double>, std::vector<Edge>>
exact_edge_endpoint_distribution(const Graph& g, Edge origin, std::int64_t l,
                                 bool lazy) {
  origin = make_edge(origin.first, origin.second);
  std::vector<Edge> edges;
  TransitionMatrix m = twodrw_edge_transition(g, lazy, &edges);
  auto it = std::lower_bound(edges.begin(), edges.end(), origin);
  if (it == edges.end() || *it != origin)
    throw std::invalid_argument("origin is not an edge of the graph");
  auto dist = power_distribution(to_double_matrix(m), m.n,
                                 it - edges.begin(), l);
  return {std::move(dist), std::move(edges)};
}

double spectral_mixing_rate(const WeightedGraph& w, bool lazy, double tol) {
  const std::int64_t n = w.n;
  if (n == 0) throw std::invalid_argument("empty graph");
  for (std::int64_t v = 0; v < n; ++v)
    if (w.wdeg[v] <= 0)
      throw std::domain_error("zero-degree vertex: walk undefined");

  // Connectivity over positive-weight edges.
  {
    std::vector<std::vector<std::int64_t>> adj(n);
    for (const auto& [a, b, weight] : w.edges)
      if (weight > 0) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    std::vector<char> seen(n, 0);
    std::vector<std::int64_t> stack{0};
    seen[0] = 1;
    std::int64_t reached = 1;
    while (!stack.empty()) {
      std::int64_t v = stack.back();
      stack.pop_back();
      for (std::int64_t u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n)
      throw std::domain_error("graph is disconnected: mixing rate undefined");
  }

  // Normalized adjacency A~ = D^{-1/2} W D^{-1/2}, dense (oracle scale).
  std::vector<double> a(n * n, 0.0);
  for (const auto& [u, v, weight] : w.edges) {
    double val = static_cast<double>(weight) /
                 std::sqrt(static_cast<double>(w.wdeg[u]) *
                           static_cast<double>(w.wdeg[v]));
    a[u * n + v] += val;
    a[v * n + u] += val;
  }
  if (lazy) {
    for (auto& val : a) val *= 0.5;
    for (std::int64_t v = 0; v < n; ++v) a[v * n + v] += 0.5;
  }

  // Exact principal eigenvector (stationary direction).
  std::vector<double> u1(n);
  double total = 0;
  for (std::int64_t v = 0; v < n; ++v) total += static_cast<double>(w.wdeg[v]);
  for (std::int64_t v = 0; v < n; ++v)
    u1[v] = std::sqrt(static_cast<double>(w.wdeg[v]) / total);

  auto deflate = [&](std::vector<double>& vec) {
    double dot = 0;
    for (std::int64_t v = 0; v < n; ++v) dot += vec[v] * u1[v];
    for (std::int64_t v = 0; v < n; ++v) vec[v] -= dot * u1[v];
  };

  Rng rng(0x5eedULL);
  std::vector<double> v(n), av(n);
  for (auto& val : v) val = rng.uniform01() - 0.5;
  deflate(v);
  double norm = 0;
  for (double val : v) norm += val * val;
  if (norm < 1e-30) return 0.0;  // n == 1 after deflation
  norm = std::sqrt(norm);
  for (auto& val : v) val /= norm;

  double est = 0.0, prev = -1.0;
  int stable = 0;
  for (int iter = 0; iter < 200000; ++iter) {
    for (std::int64_t r = 0; r < n; ++r) {
      double sum = 0;
      const double* row = a.data() + r * n;
      for (std::int64_t c = 0; c < n; ++c) sum += row[c] * v[c];
      av[r] = sum;
    }
    deflate(av);
    double len = 0;
    for (double val : av) len += val * val;
    len = std::sqrt(len);
    est = len;
    if (len < 1e-14) return 0.0;
    for (std::int64_t r = 0; r < n; ++r) v[r] = av[r] / len;
    if (std::abs(est - prev) < tol) {
      if (++stable >= 3) break;
    } else {
      stable = 0;
    }
    prev = est;
  }
  return std::min(est, 1.0);
}

}  // namespace hoct
