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
#include "hoct/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <thread>

#include "hoct/rng.hpp"
#include "hoct/walks.hpp"

namespace hoct::checks {

namespace {

struct Tally {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
  void merge(const Tally& other) {
    cases += other.cases;
    failures += other.failures;
    if (first_failure.empty()) first_failure = other.first_failure;
  }
};

CheckResult finish(Tally tally, const std::string& label) {
  CheckResult res;
  res.cases = tally.cases;
  res.failures = tally.failures;
  res.pass = tally.failures == 0;
  std::ostringstream out;
  out << label << ": " << tally.cases << " cases, " << tally.failures
      << " failures";
  if (!tally.first_failure.empty())
    out << "; first: " << tally.first_failure;
  res.details = out.str();
  return res;
}

/// Splits [0, count) across threads; fn(begin, end, tally).
template <typename Fn>
Tally parallel_range(std::uint64_t count, int threads, Fn fn) {
  threads = std::max(1, threads);
  if (threads == 1 || count < 1024) {
    Tally tally;
    fn(0, count, tally);
    return tally;
  }
  std::vector<Tally> tallies(threads);
  std::vector<std::thread> pool;
  std::uint64_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t begin = t * chunk;
    std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(
        [&, begin, end, t] { fn(begin, end, tallies[t]); });
  }
  for (auto& th : pool) th.join();
  Tally total;
  for (const auto& t : tallies) total.merge(t);
  return total;
}

std::string mask_to_edges(int n, std::uint64_t mask) {
  std::ostringstream out;
  int bit = 0;
  out << "n=" << n << " edges={";
  bool first = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) {
        if (!first) out << ' ';
        out << i << '-' << j;
        first = false;
      }
  out << '}';
  return out.str();
}

std::string graph_to_edges(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " edges={";
  bool first = true;
  for (VertexId v = 0; v < g.n(); ++v)
    for (VertexId u : g.neighbors_raw(v))
      if (v < u) {
        if (!first) out << ' ';
        out << v << '-' << u;
        first = false;
      }
  out << '}';
  return out.str();
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph::from_edges(std::move(edges), n);
}

bool mask_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[16] = {};
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (n >= 32 ? ~0u : (1u << n) - 1);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform01() < p) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(edges, n);
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors_raw(v))
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached == n) return g;
  }
  throw std::runtime_error("random_connected_graph: p too small");
}

CheckResult theorem1_sweep(int max_n, int threads) {
  if (max_n > 7)
    throw std::invalid_argument("theorem1 sweep supports max_n <= 7");
  Tally total;
  for (int n = 3; n <= max_n; ++n) {
    const int npairs = n * (n - 1) / 2;
    Tally tally = parallel_range(
        std::uint64_t{1} << npairs, threads,
        [&, n](std::uint64_t begin, std::uint64_t end, Tally& t) {
          for (std::uint64_t mask = begin; mask < end; ++mask) {
            if (!mask_connected(n, mask)) continue;
            Graph g = graph_from_mask(n, mask);
            ComplexView x = ComplexView::raise(g, 1);
            const auto& deg0 = x.degrees(0);
            const auto& deg1 = x.degrees(1);
            const auto& faces1 = x.faces(1);
            const std::int64_t vol0 = x.volume(0), vol1 = x.volume(1);
            ++t.cases;

            // classic quantities straight off the graph
            std::int64_t deg_g[8];
            for (VertexId v = 0; v < n; ++v) deg_g[v] = g.degree_raw(v);
            std::uint32_t adj[8] = {};
            for (VertexId v = 0; v < n; ++v)
              for (VertexId u : g.neighbors_raw(v)) adj[v] |= 1u << u;

            std::int64_t in_num = -1, in_den = 1;    // normalized internal
            std::int64_t inc_num = -1, inc_den = 1;  // classic internal
            const std::uint32_t full = (1u << n) - 1;
            for (std::uint32_t s = 1; s < full; ++s) {
              std::int64_t vol_s = 0, vol_sg = 0, cross_g = 0;
              for (std::uint32_t m = s; m != 0; m &= m - 1) {
                int v = std::countr_zero(m);
                vol_s += deg0[v];
                vol_sg += deg_g[v];
                cross_g += std::popcount(adj[v] & ~s & full);
              }
              std::int64_t cross = 0;
              for (std::size_t j = 0; j < faces1.size(); ++j)
                if ((faces1[j] & s) != 0 && (faces1[j] & ~s & full) != 0)
                  cross += deg1[j];
              std::int64_t vol_r = vol0 - vol_s;
              std::int64_t vol_rg = 2 * g.m() - vol_sg;

              // external: Psi = (cross/vol1)/(min/vol0) vs 2*Phi
              __int128 lhs = static_cast<__int128>(cross) * vol0 *
                             std::min(vol_sg, vol_rg);
              __int128 rhs = static_cast<__int128>(2) * cross_g *
                             std::min(vol_s, vol_r) * vol1;
              if (lhs != rhs) {
                t.fail("theorem1 external: " + mask_to_edges(n, mask) +
                       " S=" + std::to_string(s));
                continue;
              }
              // internal candidates (volume-balanced domain)
              if (vol_s > 0 && 2 * vol_s <= vol0) {
                if (in_num < 0 ||
                    compare_ratio(cross, vol_s, in_num, in_den) < 0) {
                  in_num = cross;
                  in_den = vol_s;
                }
              }
              if (vol_sg > 0 && 2 * vol_sg <= 2 * g.m()) {
                if (inc_num < 0 ||
                    compare_ratio(cross_g, vol_sg, inc_num, inc_den) < 0) {
                  inc_num = cross_g;
                  inc_den = vol_sg;
                }
              }
            }
            if (in_num >= 0 && inc_num >= 0) {
              // normalized internal = (in_num/vol1)/(in_den/vol0);
              // must equal 2 * inc_num/inc_den
              __int128 lhs = static_cast<__int128>(in_num) * vol0 * inc_den;
              __int128 rhs =
                  static_cast<__int128>(2) * inc_num * in_den * vol1;
              if (lhs != rhs)
                t.fail("theorem1 internal: " + mask_to_edges(n, mask));
            } else if (in_num >= 0 || inc_num >= 0) {
              t.fail("theorem1 internal domain mismatch: " +
                     mask_to_edges(n, mask));
            }

            // Tie the fast path to the public API on the small sizes.
            if (n <= 4) {
              std::vector<VertexId> all(n);
              for (int v = 0; v < n; ++v) all[v] = v;
              for (std::uint32_t s = 1; s < full; ++s) {
                std::vector<VertexId> sv;
                Cochain sc;
                sc.dim = 0;
                for (int v = 0; v < n; ++v)
                  if (s >> v & 1) {
                    sv.push_back(v);
                    sc.faces.push_back(v);
                  }
                Rational psi = normalized_external_conductance(
                    x, sc, x.full_cochain(0));
                Rational phi = classic_conductance(g, sv, all);
                if (psi != phi * Rational(2))
                  t.fail("theorem1 API external: " + mask_to_edges(n, mask));
              }
              auto norm_int =
                  normalized_internal_conductance(x, x.full_cochain(0), 24);
              auto classic_int = classic_internal_conductance(g, all, 24);
              bool both = norm_int.has_value() && classic_int.has_value();
              bool neither =
                  !norm_int.has_value() && !classic_int.has_value();
              if (!(neither ||
                    (both && *norm_int == *classic_int * Rational(2))))
                t.fail("theorem1 API internal: " + mask_to_edges(n, mask));
            }
          }
        });
    total.merge(tally);
  }
  return finish(total, "theorem1 (Psi = 2*Phi on connected graphs <= " +
                           std::to_string(max_n) + " vertices)");
}

CheckResult lemma2_sweep(int max_n, int threads) {
  if (max_n > 7)
    throw std::invalid_argument("lemma2 sweep supports max_n <= 7");
  Tally total;
  for (int n = 4; n <= max_n; ++n) {
    const int npairs = n * (n - 1) / 2;
    Tally tally = parallel_range(
        std::uint64_t{1} << npairs, threads,
        [&, n](std::uint64_t begin, std::uint64_t end, Tally& t) {
          for (std::uint64_t mask = begin; mask < end; ++mask) {
            Graph g = graph_from_mask(n, mask);
            ComplexView x3 = ComplexView::raise(g, 3);
            if (x3.faces(3).empty() || !x3.is_pure()) continue;
            ++t.cases;
            for (int tdim = 1; tdim <= 2; ++tdim) {
              ComplexView xt = ComplexView::raise(g, tdim);
              for (int i = 0; i < tdim; ++i) {
                const auto& d3 = x3.degrees(i);
                const auto& dt = xt.degrees(i);
                const std::int64_t vol3 = x3.volume(i);
                const std::int64_t volt = xt.volume(i);
                for (std::size_t j = 0; j < d3.size(); ++j) {
                  // norm equality ||{face}||_3 == ||{face}||_t
                  if (static_cast<__int128>(d3[j]) * volt !=
                      static_cast<__int128>(dt[j]) * vol3) {
                    t.fail("lemma2 norm: " + mask_to_edges(n, mask) +
                           " t=" + std::to_string(tdim) +
                           " i=" + std::to_string(i) + " face#" +
                           std::to_string(j) + " deg3=" +
                           std::to_string(d3[j]) + "/" +
                           std::to_string(vol3) + " degt=" +
                           std::to_string(dt[j]) + "/" +
                           std::to_string(volt));
                  }
                  // deg identity deg_3 == (t-i)/(3-i) * deg_t
                  if (d3[j] * (3 - i) != dt[j] * (tdim - i)) {
                    t.fail("lemma2 deg: " + mask_to_edges(n, mask) +
                           " t=" + std::to_string(tdim) +
                           " i=" + std::to_string(i) + " face#" +
                           std::to_string(j) + " deg3=" +
                           std::to_string(d3[j]) +
                           " degt=" + std::to_string(dt[j]));
                  }
                }
              }
            }
          }
        });
    total.merge(tally);
  }
  return finish(total,
                "lemma2 (cross-dimension norms on pure 3-complexes <= " +
                    std::to_string(max_n) + " vertices)");
}

/// Random union of K4/K5 blocks glued on random shared vertex sets: pure at
/// d=3 by construction, sparse enough for cochain enumeration.
Graph random_clique_soup(int max_n, Rng& rng) {
  for (;;) {
    int blocks = 2 + static_cast<int>(rng.below(2));
    std::vector<std::vector<VertexId>> block_vs;
    int used = 0;
    bool ok = true;
    for (int b = 0; b < blocks && ok; ++b) {
      int size = 4 + static_cast<int>(rng.below(2));
      std::vector<VertexId> vs;
      if (b == 0) {
        for (int i = 0; i < size; ++i) vs.push_back(used++);
      } else {
        int glue = static_cast<int>(rng.below(std::min(4, used)));
        std::vector<VertexId> pool(used);
        for (int i = 0; i < used; ++i) pool[i] = i;
        for (int gidx = 0; gidx < glue; ++gidx) {
          std::size_t pick = rng.below(pool.size());
          vs.push_back(pool[pick]);
          pool.erase(pool.begin() + pick);
        }
        for (int i = glue; i < size; ++i) vs.push_back(used++);
      }
      if (used > max_n) {
        ok = false;
        break;
      }
      block_vs.push_back(std::move(vs));
    }
    if (!ok) continue;
    std::vector<Edge> edges;
    for (const auto& vs : block_vs)
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          edges.push_back(make_edge(vs[i], vs[j]));
    return Graph::from_edges(std::move(edges), used);
  }
}

CheckResult lemma3_random(int instances, int max_n, std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  int collected = 0;
  std::int64_t attempts = 0;
  while (collected < instances) {
    if (++attempts > 200LL * instances + 10000)
      throw std::runtime_error("lemma3: generator starved");
    Graph g;
    if (rng.coin() && max_n >= 7) {
      g = random_clique_soup(std::min(max_n, 10), rng);
    } else {
      int n = 4 + static_cast<int>(rng.below(3));
      double p = 0.55 + 0.4 * rng.uniform01();
      g = random_connected_graph(n, p, rng);
    }
    ComplexView x3 = ComplexView::raise(g, 3);
    if (x3.faces(3).empty() || !x3.is_pure()) continue;
    if (x3.faces(1).size() > 22 || x3.faces(2).size() > 22) continue;

    ++collected;
    ++tally.cases;
    ColorfulExpansion e3 = colorful_expansion(x3, 22);
    if (!e3.eps_star.has_value()) continue;  // vacuous at d=3
    ComplexView x2 = ComplexView::raise(g, 2);
    ColorfulVerdict v2 = is_colorful_expander(x2, *e3.eps_star, 22);
    if (!v2.is_expander) {
      std::string eps2 = v2.eps_star ? v2.eps_star->to_string() : "none";
      tally.fail("lemma3: " + graph_to_edges(g) + " eps3=" +
                 e3.eps_star->to_string() + " but eps2=" + eps2);
    }
  }
  return finish(tally, "lemma3 (downward colorful expansion, " +
                           std::to_string(instances) + " random instances)");
}

CheckResult theorem2_random(int instances, std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  std::int64_t attempts = 0;
  while (tally.cases < instances) {
    if (++attempts > 400LL * instances + 10000)
      throw std::runtime_error("theorem2: generator starved");
    Graph g = random_clique_soup(10, rng);
    ComplexView x3 = ComplexView::raise(g, 3);
    if (x3.faces(3).empty() || !x3.is_pure()) continue;
    if (x3.faces(1).size() > 22 || x3.faces(2).size() > 22) continue;

    // The whole vertex set as a single part: a d=3 cluster with psi_in set
    // to its own measured internal conductance (external is 0 for h=1).
    Rational psi_in(1 << 20);
    bool constrained = false;
    for (int r = 0; r < 3; ++r) {
      auto v = normalized_internal_conductance(x3, x3.full_cochain(r), 22);
      if (v.has_value() && *v < psi_in) {
        psi_in = *v;
        constrained = true;
      }
    }
    if (!constrained || psi_in.is_zero()) continue;
    ++tally.cases;
    for (int t = 1; t <= 2; ++t) {
      ComplexView xt = ComplexView::raise(g, t);
      for (int r = 0; r < t; ++r) {
        auto v = normalized_internal_conductance(xt, xt.full_cochain(r), 22);
        if (v.has_value() && *v < psi_in)
          tally.fail("theorem2: " + graph_to_edges(g) +
                     " is a 3-dim cluster at psi_in=" + psi_in.to_string() +
                     " but t=" + std::to_string(t) + " r=" +
                     std::to_string(r) + " internal=" + v->to_string());
      }
    }
  }
  return finish(tally, "theorem2 (cluster downward compatibility, " +
                           std::to_string(instances) + " instances)");
}

CheckResult lemma10_grid(double step) {
  Tally tally;
  const std::int64_t steps = std::llround(1.0 / step);
  for (std::int64_t i = 1; i <= steps; ++i) {
    double eps = static_cast<double>(i) * step;
    double f = (1.0 - eps * eps / 4.0) -
               std::pow(1.0 - eps * eps / 36.0, 11.0);
    ++tally.cases;
    if (!(f > 0))
      tally.fail("lemma10: f(" + std::to_string(eps) +
                 ") = " + std::to_string(f));
  }
  double f1 = (1.0 - 0.25) - std::pow(1.0 - 1.0 / 36.0, 11.0);
  double closed = 0.75 - std::pow(35.0 / 36.0, 11.0);
  ++tally.cases;
  if (std::abs(f1 - closed) > 1e-12)
    tally.fail("lemma10: f(1) disagrees with closed form");
  ++tally.cases;
  if (std::abs(f1 - 0.0165) > 1e-4)
    tally.fail("lemma10: f(1) = " + std::to_string(f1) +
               " not within 1e-4 of 0.0165");
  return finish(tally, "lemma10 (1 - e^2/4 > (1 - e^2/36)^11 on (0,1])");
}

CheckResult lemma4_random(int graphs, int t_max, std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  for (int gi = 0; gi < graphs; ++gi) {
    int n = 3 + static_cast<int>(rng.below(10));
    double p = 0.25 + 0.65 * rng.uniform01();
    Graph g = random_connected_graph(n, p, rng);
    WeightedGraph w = WeightedGraph::from_graph(g);
    double alpha = spectral_mixing_rate(w, false);
    TransitionMatrix pm = weighted_walk_transition(w, false);
    std::vector<double> p_mat(pm.p.size());
    for (std::size_t i = 0; i < pm.p.size(); ++i)
      p_mat[i] = pm.p[i].to_double();

    std::int64_t dmin = g.n(), dmax = 0, vol = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
      dmin = std::min<std::int64_t>(dmin, g.degree_raw(v));
      dmax = std::max<std::int64_t>(dmax, g.degree_raw(v));
      vol += g.degree_raw(v);
    }
    std::vector<double> stat(n);
    for (VertexId v = 0; v < g.n(); ++v)
      stat[v] = static_cast<double>(g.degree_raw(v)) / vol;
    double ratio = std::sqrt(static_cast<double>(dmax) / dmin);

    for (VertexId start = 0; start < g.n(); ++start) {
      std::vector<double> pi(n, 0.0), nxt(n, 0.0);
      pi[start] = 1.0;
      // Power-iteration tolerance on alpha is folded into the bound.
      double alpha_hi = std::min(1.0, alpha + 1e-7);
      double rhs = ratio;
      for (int t = 1; t <= t_max; ++t) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (int r = 0; r < n; ++r) {
          if (pi[r] == 0.0) continue;
          for (int c = 0; c < n; ++c) nxt[c] += pi[r] * p_mat[r * n + c];
        }
        pi.swap(nxt);
        rhs *= alpha_hi;
        double lhs = 0;
        for (int v = 0; v < n; ++v)
          lhs += (pi[v] - stat[v]) * (pi[v] - stat[v]);
        lhs = std::sqrt(lhs);
        ++tally.cases;
        if (lhs > rhs + 1e-9)
          tally.fail("lemma4: " + graph_to_edges(g) + " start=" +
                     std::to_string(start) + " t=" + std::to_string(t) +
                     " lhs=" + std::to_string(lhs) +
                     " rhs=" + std::to_string(rhs));
      }
    }
  }
  return finish(tally, "lemma4 (||pi^t - pi|| <= sqrt(dmax/dmin) alpha^t)");
}

CheckResult lemma9_expanders(std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  std::vector<Graph> population;

  // Exhaustive tiny graphs.
  for (int n = 4; n <= 5; ++n) {
    int npairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << npairs); ++mask)
      if (mask_connected(n, mask)) population.push_back(graph_from_mask(n, mask));
  }
  // Sampled 6-vertex graphs.
  for (int i = 0; i < 800; ++i) {
    std::uint64_t mask = rng.below(std::uint64_t{1} << 15);
    if (mask_connected(6, mask)) population.push_back(graph_from_mask(6, mask));
  }
  // Wheels: hub 0, rim cycle 1..n-1.
  for (int n = 6; n <= 12; ++n) {
    std::vector<Edge> edges;
    int rim = n - 1;
    for (int i = 1; i <= rim; ++i) {
      edges.push_back(make_edge(0, i));
      edges.push_back(make_edge(i, i == rim ? 1 : i + 1));
    }
    population.push_back(Graph::from_edges(edges, n));
  }
  auto add_edges = [&](std::vector<Edge> edges, std::int64_t n) {
    population.push_back(Graph::from_edges(std::move(edges), n));
  };
  // K4 chains glued on shared edges.
  for (int links : {2, 3, 4}) {
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int last = 3;
    for (int c = 1; c < links; ++c) {
      VertexId a = last - 1, b = last, x = last + 1, y = last + 2;
      for (Edge e : {make_edge(a, x), make_edge(a, y), make_edge(b, x),
                     make_edge(b, y), make_edge(x, y)})
        edges.push_back(e);
      last += 2;
    }
    add_edges(std::move(edges), last + 1);
  }
  // two K4s glued on a triangle / edge / vertex
  add_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
             {1, 4}, {2, 4}, {3, 4}},
            5);
  add_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
             {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
            6);
  add_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
             {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}},
            7);
  // K5, K6
  for (int n = 5; n <= 6; ++n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back(make_edge(i, j));
    add_edges(std::move(edges), n);
  }
  // octahedron = K_{2,2,2}
  add_edges({{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
             {2, 4}, {2, 5}, {3, 4}, {3, 5}},
            6);
  // random clique soups up to 12 vertices
  for (int i = 0; i < 30; ++i) population.push_back(random_clique_soup(12, rng));

  for (const Graph& g : population) {
    ComplexView x = ComplexView::raise(g, 2);
    if (x.faces(2).empty() || !x.is_pure()) continue;
    if (x.faces(1).size() > 22) continue;
    ColorfulExpansion scan;
    try {
      scan = colorful_expansion(x, 22);
    } catch (const std::domain_error&) {
      continue;
    }
    if (!scan.eps_star.has_value() || !(scan.eps_star->to_double() > 0))
      continue;  // not a certified expander
    double eps = scan.eps_star->to_double();
    double bound = 1.0 - eps * eps / 18.0;
    ++tally.cases;
    for (int i = 0; i < 2; ++i) {
      double alpha;
      try {
        alpha = spectral_mixing_rate(induced_i_graph(x, i), false);
      } catch (const std::domain_error&) {
        tally.fail("lemma9: certified expander with degenerate " +
                   std::to_string(i) + "-graph: " + graph_to_edges(g));
        break;
      }
      if (alpha > bound + 1e-9) {
        tally.fail("lemma9: " + graph_to_edges(g) + " eps=" +
                   scan.eps_star->to_string() + " i=" + std::to_string(i) +
                   " alpha=" + std::to_string(alpha) +
                   " bound=" + std::to_string(bound));
      }
    }
  }
  return finish(tally, "lemma9 (alpha <= 1 - eps^2/18 on certified "
                       "colorful expanders)");
}

namespace {

bool matrices_equal(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.n != b.n) return false;
  for (std::size_t i = 0; i < a.p.size(); ++i)
    if (a.p[i] != b.p[i]) return false;
  return true;
}

bool check_one_walk_equivalence(const Graph& g, std::string* why) {
  ComplexView x = ComplexView::raise(g, 2);

  // vertex mode vs induced 0-graph
  TransitionMatrix walk_v = twodrw_vertex_transition(g, false);
  WeightedGraph w0 = induced_i_graph(x, 0);
  TransitionMatrix ind_v = weighted_walk_transition(w0, false);
  if (!matrices_equal(walk_v, ind_v)) {
    *why = "vertex transition mismatch";
    return false;
  }
  // stationary ~ 2 * triangle degree + detailed balance
  for (VertexId v = 0; v < g.n(); ++v)
    if (w0.wdeg[v] != 2 * x.degrees(0)[v]) {
      *why = "0-graph weighted degree != 2 * deg_2(v)";
      return false;
    }
  for (std::int64_t a = 0; a < walk_v.n; ++a)
    for (std::int64_t b = 0; b < walk_v.n; ++b)
      if (Rational(w0.wdeg[a]) * walk_v.at(a, b) !=
          Rational(w0.wdeg[b]) * walk_v.at(b, a)) {
        *why = "vertex-mode detailed balance";
        return false;
      }

  // edge mode vs induced 1-graph (index translation: lex edge order vs
  // face-mask order)
  std::vector<Edge> edges;
  TransitionMatrix walk_e = twodrw_edge_transition(g, false, &edges);
  WeightedGraph w1 = induced_i_graph(x, 1);
  TransitionMatrix ind_e = weighted_walk_transition(w1, false);
  std::vector<int> face_of(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    FaceMask m = (FaceMask{1} << edges[i].first) |
                 (FaceMask{1} << edges[i].second);
    face_of[i] = x.face_index(1, m);
    if (face_of[i] < 0) {
      *why = "edge missing from complex";
      return false;
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (walk_e.at(i, j) != ind_e.at(face_of[i], face_of[j])) {
        *why = "edge transition mismatch";
        return false;
      }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (w1.wdeg[face_of[i]] != 2 * x.degrees(1)[face_of[i]]) {
      *why = "1-graph weighted degree != 2 * deg_2(e)";
      return false;
    }
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (Rational(w1.wdeg[face_of[a]]) * walk_e.at(a, b) !=
          Rational(w1.wdeg[face_of[b]]) * walk_e.at(b, a)) {
        *why = "edge-mode detailed balance";
        return false;
      }
  return true;
}

}  // namespace

CheckResult walk_equivalence(int exhaustive_max_n, int random_per_size,
                             std::uint64_t seed) {
  Tally tally;
  std::string why;
  for (int n = 2; n <= exhaustive_max_n; ++n) {
    int npairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << npairs);
         ++mask) {
      Graph g = graph_from_mask(n, mask);
      ++tally.cases;
      if (!check_one_walk_equivalence(g, &why))
        tally.fail("walk equivalence (" + why + "): " +
                   mask_to_edges(n, mask));
    }
  }
  Rng rng(seed);
  for (int n = exhaustive_max_n + 1; n <= 8; ++n) {
    int npairs = n * (n - 1) / 2;
    for (int i = 0; i < random_per_size; ++i) {
      std::uint64_t mask = rng.below(std::uint64_t{1} << npairs);
      Graph g = graph_from_mask(n, mask);
      ++tally.cases;
      if (!check_one_walk_equivalence(g, &why))
        tally.fail("walk equivalence (" + why + "): " +
                   mask_to_edges(n, mask));
    }
  }
  return finish(tally, "walk equivalence (2DRW == weighted walk on induced "
                       "graphs)");
}

namespace {

int max_clique_with(const std::vector<std::uint64_t>& adj, int u) {
  int best = 0;
  // candidates must all be adjacent to u already
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    self(self, (cand & adj[v]) & ~bit, size + 1);
    self(self, cand & ~bit, size);
  };
  rec(rec, adj[u], 1);
  return std::max(best, 1);
}

}  // namespace

GoodVertexReport is_good_vertex(
    const Graph& g, VertexId u,
    const std::vector<std::vector<VertexId>>& clusters, std::int64_t l,
    std::int64_t s, std::int64_t k) {
  g.check_vertex(u);
  const std::vector<VertexId>* cluster = nullptr;
  for (const auto& c : clusters)
    for (VertexId v : c)
      if (v == u) cluster = &c;
  if (!cluster)
    throw std::invalid_argument("vertex not covered by the cluster map");
  if (cluster->size() > 64)
    throw std::invalid_argument("good-vertex diagnostic caps clusters at 64");

  const double n = static_cast<double>(g.n());
  GoodVertexReport rep;
  rep.cluster_size = static_cast<std::int64_t>(cluster->size());

  std::vector<double> p_u = exact_vertex_endpoint_distribution(g, u, l, true);
  for (double val : p_u) rep.norm_sq += val * val;
  rep.norm_bound = 72.0 * static_cast<double>(s) * static_cast<double>(k) / n;
  rep.norm_ok = rep.norm_sq <= rep.norm_bound;

  rep.cluster_size_bound =
      n / (36.0 * static_cast<double>(s) * static_cast<double>(k));
  rep.cluster_size_ok =
      static_cast<double>(rep.cluster_size) >= rep.cluster_size_bound;

  // Pairwise closeness graph over the cluster, threshold 1/(4n).
  std::vector<std::vector<double>> dists;
  dists.reserve(cluster->size());
  for (VertexId v : *cluster)
    dists.push_back(exact_vertex_endpoint_distribution(g, v, l, true));
  int u_idx = -1;
  for (std::size_t i = 0; i < cluster->size(); ++i)
    if ((*cluster)[i] == u) u_idx = static_cast<int>(i);
  const double threshold = 1.0 / (4.0 * n);
  std::vector<std::uint64_t> adj(cluster->size(), 0);
  for (std::size_t i = 0; i < cluster->size(); ++i)
    for (std::size_t j = i + 1; j < cluster->size(); ++j) {
      double d2 = 0;
      for (VertexId v = 0; v < g.n(); ++v) {
        double diff = dists[i][v] - dists[j][v];
        d2 += diff * diff;
      }
      if (d2 <= threshold) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  rep.core_size = max_clique_with(adj, u_idx);
  rep.core_required =
      (1.0 - 1.0 / (36.0 * static_cast<double>(s))) *
      static_cast<double>(rep.cluster_size);
  rep.core_ok = static_cast<double>(rep.core_size) >= rep.core_required;

  rep.good = rep.norm_ok && rep.cluster_size_ok && rep.core_ok;
  return rep;
}

}  // namespace hoct::checks
