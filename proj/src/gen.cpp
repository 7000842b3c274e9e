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
#include "hoct/gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hoct/rng.hpp"

namespace hoct {

namespace {

/// Mutable adjacency used only during generation.
struct Builder {
  std::int64_t n;
  int dmax;
  std::vector<std::set<VertexId>> adj;

  Builder(std::int64_t n, int dmax) : n(n), dmax(dmax), adj(n) {}

  bool has(VertexId u, VertexId v) const { return adj[u].count(v) > 0; }
  int deg(VertexId v) const { return static_cast<int>(adj[v].size()); }

  bool can_add(VertexId u, VertexId v) const {
    if (u == v || has(u, v)) return false;
    return deg(u) < dmax && deg(v) < dmax;
  }
  void add(VertexId u, VertexId v) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  /// Adds the edge if absent; false only on budget violation.
  bool add_checked(VertexId u, VertexId v) {
    if (u == v) return false;
    if (has(u, v)) return true;
    if (deg(u) >= dmax || deg(v) >= dmax) return false;
    add(u, v);
    return true;
  }

  int common(VertexId u, VertexId v) const {
    int c = 0;
    for (VertexId w : adj[u])
      if (w != v && adj[v].count(w)) ++c;
    return c;
  }

  bool in_triangle(VertexId v) const {
    for (VertexId a : adj[v])
      for (VertexId b : adj[v])
        if (a < b && adj[a].count(b)) return true;
    return false;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (VertexId v = 0; v < n; ++v)
      for (VertexId u : adj[v])
        if (v < u) out.emplace_back(v, u);
    return out;
  }
};

/// Chain of K4s sharing edges over local vertices [lo, lo+size).
void build_clique_chain(Builder& b, VertexId lo, std::int64_t size) {
  if (size < 3)
    throw std::invalid_argument("clique_chain block needs >= 3 vertices");
  auto k_on = [&](std::initializer_list<VertexId> vs) {
    for (VertexId u : vs)
      for (VertexId v : vs)
        if (u < v && !b.add_checked(u, v))
          throw std::runtime_error("clique_chain: degree budget exhausted");
  };
  if (size == 3) {
    k_on({lo, lo + 1, lo + 2});
    return;
  }
  k_on({lo, lo + 1, lo + 2, lo + 3});
  VertexId last = lo + 3;
  while (last + 2 < lo + size) {
    // Glue the next K4 to the previous one's top edge.
    k_on({last - 1, last, last + 1, last + 2});
    last += 2;
  }
  if (last + 1 < lo + size) {
    // Odd leftover: apex triangle on the final edge.
    VertexId apex = last + 1;
    k_on({last - 1, last, apex});
  }
}

/// Triangulated block with a connected, expanding triangle structure: a
/// squared random ring (every consecutive triple is a triangle, so the
/// triangle adjacency is connected end to end) plus random triangle fans
/// (a chord closed onto a ring edge) for long-range expansion. Both the
/// vertex walk and the edge walk mix fast on these blocks, and every vertex
/// and edge lies in a triangle by construction.
void build_tri_regular(Builder& b, VertexId lo, std::int64_t size,
                       int degree_target, Rng& rng) {
  if (size < 3)
    throw std::invalid_argument("tri_regular block needs >= 3 vertices");
  if (size <= 4) {
    for (VertexId u = lo; u < lo + size; ++u)
      for (VertexId v = u + 1; v < lo + size; ++v)
        if (!b.add_checked(u, v))
          throw std::runtime_error("tri_regular: degree budget exhausted");
    return;
  }

  std::vector<VertexId> ring(size);
  for (std::int64_t i = 0; i < size; ++i)
    ring[i] = lo + static_cast<VertexId>(i);
  for (std::int64_t i = size - 1; i > 0; --i)
    std::swap(ring[i], ring[rng.below(i + 1)]);

  auto at = [&](std::int64_t i) { return ring[(i + size) % size]; };
  for (std::int64_t i = 0; i < size; ++i) {
    if (!b.add_checked(at(i), at(i + 1)) || !b.add_checked(at(i), at(i + 2)))
      throw std::runtime_error("tri_regular: degree budget exhausted");
  }

  // Bridges: a K4 glued onto two distant ring edges. Its triangles share an
  // edge with each region, so the edge walk (which moves only through
  // triangles sharing an edge) gets long-range links, not just the vertex
  // walk. This is what makes the triangle structure itself expand.
  std::int64_t bridges = size * std::max(0, degree_target - 4) / 8;
  std::int64_t added = 0;
  for (std::int64_t tries = 0; tries < 60 * bridges + 100 && added < bridges;
       ++tries) {
    std::int64_t i = static_cast<std::int64_t>(rng.below(size));
    std::int64_t j = static_cast<std::int64_t>(rng.below(size));
    std::int64_t gap = (j - i + size) % size;
    if (gap < 3 && gap != 0) continue;
    if (gap == 0 || size - gap < 3) continue;
    VertexId a = at(i), bb = at(i + 1), c = at(j), d = at(j + 1);
    if (b.deg(a) + 2 > b.dmax || b.deg(bb) + 2 > b.dmax ||
        b.deg(c) + 2 > b.dmax || b.deg(d) + 2 > b.dmax)
      continue;
    if (b.has(a, c) || b.has(a, d) || b.has(bb, c) || b.has(bb, d)) continue;
    b.add(a, c);
    b.add(a, d);
    b.add(bb, c);
    b.add(bb, d);
    ++added;
  }
}

void build_block(Builder& b, IntraModel intra, VertexId lo, std::int64_t size,
                 int degree_target, Rng& rng) {
  if (intra == IntraModel::clique_chain)
    build_clique_chain(b, lo, size);
  else
    build_tri_regular(b, lo, size, degree_target, rng);
}

Graph finish(const Builder& b) { return Graph::from_edges(b.edges(), b.n); }

}  // namespace

IntraModel intra_model_from_string(const std::string& name) {
  if (name == "clique_chain" || name == "clique-chain")
    return IntraModel::clique_chain;
  if (name == "tri_regular" || name == "tri-regular" ||
      name == "triangulated")
    return IntraModel::tri_regular;
  throw std::invalid_argument("unknown intra model: " + name);
}

FarModel far_model_from_string(const std::string& name) {
  if (name == "extra_components" || name == "extra-components")
    return FarModel::extra_components;
  if (name == "shattered") return FarModel::shattered;
  throw std::invalid_argument("unknown far model: " + name);
}

Graph gen_clusterable(std::int64_t n, std::int64_t k, IntraModel intra,
                      std::int64_t cross_edges, std::uint64_t seed,
                      GenOptions opt) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n % k != 0)
    throw std::invalid_argument("n must be divisible by k");
  std::int64_t block = n / k;
  if (block < 3)
    throw std::invalid_argument("blocks need at least 3 vertices");

  Builder b(n, opt.dmax_cap);
  Rng rng(seed);
  for (std::int64_t i = 0; i < k; ++i)
    build_block(b, intra, static_cast<VertexId>(i * block), block,
                opt.degree_target, rng);

  // Cross edges between distinct blocks, avoiding new triangles where
  // possible (a lone inter-block edge closes no triangle; collisions can
  // only come from earlier cross edges).
  std::int64_t added = 0, tries = 0;
  const std::int64_t max_tries = 400 * (cross_edges + 1);
  while (added < cross_edges && k > 1) {
    bool relaxed = tries > max_tries / 2;  // "where possible"
    if (++tries > max_tries)
      throw std::runtime_error("cross edges: degree budget too tight");
    VertexId u = static_cast<VertexId>(rng.below(n));
    VertexId v = static_cast<VertexId>(rng.below(n));
    if (u / block == v / block) continue;
    if (!b.can_add(u, v)) continue;
    if (!relaxed && b.common(u, v) > 0) continue;
    b.add(u, v);
    ++added;
  }
  return finish(b);
}

Graph gen_far(std::int64_t n, std::int64_t k, FarModel model,
              std::uint64_t seed, GenOptions opt) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Builder b(n, opt.dmax_cap);
  Rng rng(seed);

  if (model == FarModel::extra_components) {
    std::int64_t blocks = k + 1;
    if (n < 3 * blocks)
      throw std::invalid_argument("n too small for k+1 blocks");
    std::int64_t base = n / blocks, extra = n % blocks;
    VertexId lo = 0;
    for (std::int64_t i = 0; i < blocks; ++i) {
      std::int64_t size = base + (i < extra ? 1 : 0);
      build_tri_regular(b, lo, size, opt.degree_target, rng);
      lo += static_cast<VertexId>(size);
    }
  } else {
    // blocks of ~10; tiny instances shatter into triangles
    const std::int64_t target = n >= 20 ? 10 : 3;
    if (n < 2 * target)
      throw std::invalid_argument("shattered model needs n >= 6");
    std::int64_t blocks = n / target;
    std::int64_t base = n / blocks, extra = n % blocks;
    VertexId lo = 0;
    for (std::int64_t i = 0; i < blocks; ++i) {
      std::int64_t size = base + (i < extra ? 1 : 0);
      build_clique_chain(b, lo, size);
      lo += static_cast<VertexId>(size);
    }
  }
  return finish(b);
}

}  // namespace hoct
