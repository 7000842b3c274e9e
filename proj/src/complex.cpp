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
#include "hoct/complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace hoct {

namespace {

int popcount(FaceMask m) { return std::popcount(m); }

std::vector<char> membership(const std::vector<int>& idx, std::size_t size) {
  std::vector<char> in(size, 0);
  for (int j : idx) {
    if (j < 0 || static_cast<std::size_t>(j) >= size)
      throw std::out_of_range("cochain face index out of range");
    in[j] = 1;
  }
  return in;
}

}  // namespace

void ComplexView::check_dim(int i) const {
  if (i < 0 || i > d_)
    throw std::out_of_range("dimension " + std::to_string(i) +
                            " outside [0," + std::to_string(d_) + "]");
}

const std::vector<FaceMask>& ComplexView::faces(int i) const {
  check_dim(i);
  return faces_[i];
}

const std::vector<std::int64_t>& ComplexView::degrees(int i) const {
  check_dim(i);
  return deg_[i];
}

std::int64_t ComplexView::volume(int i) const {
  check_dim(i);
  return vol_[i];
}

int ComplexView::face_index(int i, FaceMask f) const {
  check_dim(i);
  const auto& fs = faces_[i];
  auto it = std::lower_bound(fs.begin(), fs.end(), f);
  if (it == fs.end() || *it != f) return -1;
  return static_cast<int>(it - fs.begin());
}

std::int64_t ComplexView::face_degree(FaceMask f) const {
  int i = popcount(f) - 1;
  check_dim(i);
  int j = face_index(i, f);
  if (j < 0) throw std::invalid_argument("not a face of the complex");
  return deg_[i][j];
}

std::span<const int> ComplexView::subfaces(int i, int j) const {
  check_dim(i);
  if (i == 0) return {};
  return {sub_[i].data() + static_cast<std::size_t>(j) * (i + 1),
          static_cast<std::size_t>(i + 1)};
}

Cochain ComplexView::full_cochain(int i) const {
  check_dim(i);
  Cochain c;
  c.dim = i;
  c.faces.resize(faces_[i].size());
  for (std::size_t j = 0; j < c.faces.size(); ++j)
    c.faces[j] = static_cast<int>(j);
  return c;
}

std::vector<std::vector<int>> ComplexView::outlier_faces() const {
  std::vector<std::vector<int>> out(d_ + 1);
  for (int i = 0; i <= d_; ++i)
    for (std::size_t j = 0; j < faces_[i].size(); ++j)
      if (deg_[i][j] == 0) out[i].push_back(static_cast<int>(j));
  return out;
}

bool ComplexView::is_pure() const {
  for (int i = 0; i < d_; ++i)
    for (std::int64_t deg : deg_[i])
      if (deg == 0) return false;
  return true;
}

ComplexView ComplexView::raise(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("complex dimension must be >= 1");
  if (g.n() > kMaxOracleVertices)
    throw std::invalid_argument(
        "exact oracle supports at most 32 vertices; got " +
        std::to_string(g.n()));

  const VertexId n = g.n();
  std::vector<FaceMask> adj(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.neighbors_raw(v)) adj[v] |= FaceMask{1} << u;

  ComplexView x;
  x.d_ = d;
  x.n_ = n;
  x.faces_.resize(d + 1);
  x.deg_.resize(d + 1);
  x.sub_.resize(d + 1);
  x.vol_.assign(d + 1, 0);

  x.faces_[0].resize(n);
  for (VertexId v = 0; v < n; ++v) x.faces_[0][v] = FaceMask{1} << v;
  for (int i = 1; i <= d; ++i) {
    // Extend each (i-1)-face by a higher-numbered vertex adjacent to all of
    // its members; enumerates every (i+1)-clique exactly once, in mask order.
    for (FaceMask f : x.faces_[i - 1]) {
      FaceMask common = ~FaceMask{0};
      VertexId top = 0;
      FaceMask rest = f;
      while (rest != 0) {
        VertexId v = std::countr_zero(rest);
        rest &= rest - 1;
        common &= adj[v];
        top = v;
      }
      FaceMask candidates =
          common & (top + 1 >= n ? 0 : ~((FaceMask{2} << top) - 1));
      while (candidates != 0) {
        VertexId v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        x.faces_[i].push_back(f | (FaceMask{1} << v));
      }
    }
    std::sort(x.faces_[i].begin(), x.faces_[i].end());
  }

  for (int i = 0; i <= d; ++i) x.deg_[i].assign(x.faces_[i].size(), 0);

  // deg_d by scattering each top face onto all of its subsets.
  for (FaceMask top : x.faces_[d]) {
    VertexId verts[8];
    int cnt = 0;
    FaceMask rest = top;
    while (rest != 0) {
      verts[cnt++] = std::countr_zero(rest);
      rest &= rest - 1;
    }
    for (FaceMask sel = 1; sel < (FaceMask{1} << cnt); ++sel) {
      FaceMask sub = 0;
      FaceMask s = sel;
      while (s != 0) {
        sub |= FaceMask{1} << verts[std::countr_zero(s)];
        s &= s - 1;
      }
      int i = popcount(sub) - 1;
      int j = x.face_index(i, sub);
      assert(j >= 0);
      ++x.deg_[i][j];
    }
  }
  for (int i = 0; i <= d; ++i)
    for (std::int64_t deg : x.deg_[i]) x.vol_[i] += deg;

  for (int i = 1; i <= d; ++i) {
    x.sub_[i].resize(x.faces_[i].size() * (i + 1));
    for (std::size_t j = 0; j < x.faces_[i].size(); ++j) {
      FaceMask f = x.faces_[i][j];
      int slot = 0;
      FaceMask rest = f;
      while (rest != 0) {
        FaceMask bit = rest & (0 - rest);
        rest &= rest - 1;
        int sj = x.face_index(i - 1, f & ~bit);
        assert(sj >= 0);
        x.sub_[i][j * (i + 1) + slot++] = sj;
      }
    }
  }
  return x;
}

WeightedGraph WeightedGraph::from_graph(const Graph& g) {
  WeightedGraph w;
  w.n = g.n();
  w.wdeg.assign(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v)
    for (VertexId u : g.neighbors_raw(v))
      if (v < u) {
        w.edges.emplace_back(v, u, 1);
        ++w.wdeg[v];
        ++w.wdeg[u];
      }
  return w;
}

std::int64_t cochain_volume(const ComplexView& x, const Cochain& c) {
  const auto& deg = x.degrees(c.dim);
  std::int64_t vol = 0;
  for (int j : c.faces) {
    if (j < 0 || static_cast<std::size_t>(j) >= deg.size())
      throw std::out_of_range("cochain face index out of range");
    vol += deg[j];
  }
  return vol;
}

Rational cochain_norm(const ComplexView& x, const Cochain& c) {
  std::int64_t total = x.volume(c.dim);
  if (total == 0)
    throw std::domain_error("degenerate complex: zero volume at dimension " +
                            std::to_string(c.dim));
  return Rational(cochain_volume(x, c), total);
}

Cochain expander_face_between(const ComplexView& x, const Cochain& s,
                              const Cochain& ground) {
  if (s.dim != ground.dim)
    throw std::invalid_argument("cochain dimensions differ");
  int i = s.dim;
  if (i >= x.d())
    throw std::invalid_argument("expander face undefined at top dimension");
  auto in_s = membership(s.faces, x.faces(i).size());
  auto in_ground = membership(ground.faces, x.faces(i).size());

  Cochain f;
  f.dim = i + 1;
  const auto& next = x.faces(i + 1);
  for (std::size_t j = 0; j < next.size(); ++j) {
    bool hit_s = false, hit_rest = false;
    for (int sj : x.subfaces(i + 1, static_cast<int>(j))) {
      if (in_s[sj])
        hit_s = true;
      else if (in_ground[sj])
        hit_rest = true;
    }
    if (hit_s && hit_rest) f.faces.push_back(static_cast<int>(j));
  }
  return f;
}

Cochain expander_face(const ComplexView& x, const Cochain& c) {
  return expander_face_between(x, c, x.full_cochain(c.dim));
}

Rational normalized_external_conductance(const ComplexView& x,
                                         const Cochain& s, const Cochain& c) {
  if (s.faces.empty()) throw std::invalid_argument("S must be nonempty");
  auto in_s = membership(s.faces, x.faces(s.dim).size());
  Cochain rest;
  rest.dim = c.dim;
  for (int j : c.faces)
    if (!in_s[j]) rest.faces.push_back(j);
  if (rest.faces.size() + s.faces.size() != c.faces.size() ||
      rest.faces.empty())
    throw std::invalid_argument("S must be a strict subset of C");

  Cochain f = expander_face_between(x, s, c);
  Rational num = cochain_norm(x, f);
  Rational den = rational_min(cochain_norm(x, s), cochain_norm(x, rest));
  if (den.is_zero())
    throw std::domain_error("conductance undefined: zero-volume side");
  return num / den;
}

namespace {

/// Shared incremental enumerator: walks all subsets of the ground faces in
/// Gray-code order, maintaining Vol_d(S) and Vol_d(F(S, ground\S)).
/// visit(vol_s, vol_f, popcount, mask) is called for every nonempty proper
/// subset.
template <typename Visit>
void enumerate_cuts(const ComplexView& x, const Cochain& ground, int cap,
                    Visit&& visit) {
  int i = ground.dim;
  if (i >= x.d())
    throw std::invalid_argument("cut enumeration needs dimension < d");
  int b = static_cast<int>(ground.faces.size());
  if (b > cap || b > kHardEnumCap)
    throw CapExceeded("ground set of " + std::to_string(b) +
                      " faces exceeds enumeration cap " + std::to_string(cap));
  if (b < 2) return;

  const auto& deg_i = x.degrees(i);
  auto in_ground = membership(ground.faces, x.faces(i).size());

  // sigma list: (i+1)-faces with at least two subfaces inside the ground
  // set can ever straddle a cut of it.
  struct Sigma {
    std::int64_t deg;
    int inside = 0;    // subfaces inside ground
    int in_s = 0;      // subfaces currently in S
  };
  std::vector<Sigma> sigmas;
  // touch[f] = sigma indices containing ground face f (local indexing).
  std::vector<std::vector<int>> touch(b);
  std::vector<int> local_of_face(x.faces(i).size(), -1);
  for (int lf = 0; lf < b; ++lf) local_of_face[ground.faces[lf]] = lf;

  const auto& next = x.faces(i + 1);
  for (std::size_t j = 0; j < next.size(); ++j) {
    Sigma sg;
    sg.deg = x.degrees(i + 1)[j];
    std::vector<int> locals;
    for (int sj : x.subfaces(i + 1, static_cast<int>(j))) {
      if (in_ground[sj]) {
        ++sg.inside;
        locals.push_back(local_of_face[sj]);
      }
    }
    if (sg.inside >= 2) {
      int id = static_cast<int>(sigmas.size());
      sigmas.push_back(sg);
      for (int lf : locals) touch[lf].push_back(id);
    }
  }

  std::vector<std::int64_t> local_deg(b);
  for (int lf = 0; lf < b; ++lf) local_deg[lf] = deg_i[ground.faces[lf]];

  std::uint32_t mask = 0;
  std::int64_t vol_s = 0, vol_f = 0;
  int bits = 0;
  const std::uint32_t limit = (b >= 32) ? 0 : (std::uint32_t{1} << b);
  for (std::uint32_t k = 1; k < limit; ++k) {
    int flip = std::countr_zero(k);  // Gray code: bit to toggle
    std::uint32_t bit = std::uint32_t{1} << flip;
    bool adding = !(mask & bit);
    mask ^= bit;
    if (adding) {
      vol_s += local_deg[flip];
      ++bits;
      for (int sid : touch[flip]) {
        Sigma& sg = sigmas[sid];
        // straddling means 0 < in_s < inside
        bool was = sg.in_s > 0 && sg.in_s < sg.inside;
        ++sg.in_s;
        bool now = sg.in_s > 0 && sg.in_s < sg.inside;
        if (was != now) vol_f += now ? sg.deg : -sg.deg;
      }
    } else {
      vol_s -= local_deg[flip];
      --bits;
      for (int sid : touch[flip]) {
        Sigma& sg = sigmas[sid];
        bool was = sg.in_s > 0 && sg.in_s < sg.inside;
        --sg.in_s;
        bool now = sg.in_s > 0 && sg.in_s < sg.inside;
        if (was != now) vol_f += now ? sg.deg : -sg.deg;
      }
    }
    if (bits == 0 || bits == b) continue;
    visit(vol_s, vol_f, bits, mask);
  }
}

Cochain cochain_from_local_mask(const Cochain& ground, std::uint32_t mask) {
  Cochain c;
  c.dim = ground.dim;
  for (int lf = 0; lf < static_cast<int>(ground.faces.size()); ++lf)
    if (mask & (std::uint32_t{1} << lf)) c.faces.push_back(ground.faces[lf]);
  std::sort(c.faces.begin(), c.faces.end());
  return c;
}

}  // namespace

std::optional<Rational> normalized_internal_conductance(const ComplexView& x,
                                                        const Cochain& c,
                                                        int cap) {
  if (c.faces.empty()) throw std::invalid_argument("C must be nonempty");
  std::int64_t vol_total = x.volume(c.dim);
  if (vol_total == 0)
    throw std::domain_error("degenerate complex: zero volume at dimension " +
                            std::to_string(c.dim));
  std::int64_t vol_c = cochain_volume(x, c);

  bool found = false;
  std::int64_t best_num = 0, best_den = 1;
  enumerate_cuts(x, c, cap,
                 [&](std::int64_t vol_s, std::int64_t vol_f, int, uint32_t) {
                   if (vol_s == 0 || 2 * vol_s > vol_c) return;
                   // ratio = (vol_f / vol_{X_{i+1}}) / (vol_s / vol_{X_i})
                   std::int64_t num = vol_f * vol_total;
                   std::int64_t den = vol_s * x.volume(c.dim + 1);
                   if (!found || compare_ratio(num, den, best_num, best_den) < 0) {
                     found = true;
                     best_num = num;
                     best_den = den;
                   }
                 });
  if (!found) return std::nullopt;
  return Rational(best_num, best_den);
}

Rational classic_conductance(const Graph& g, const std::vector<VertexId>& s,
                             const std::vector<VertexId>& c) {
  if (s.empty()) throw std::invalid_argument("S must be nonempty");
  std::vector<char> in_s(g.n(), 0), in_c(g.n(), 0);
  for (VertexId v : c) {
    g.check_vertex(v);
    in_c[v] = 1;
  }
  for (VertexId v : s) {
    g.check_vertex(v);
    if (!in_c[v]) throw std::invalid_argument("S must be contained in C");
    in_s[v] = 1;
  }
  std::int64_t cross = 0, vol_s = 0, vol_rest = 0;
  bool rest_nonempty = false;
  for (VertexId v : c) {
    if (in_s[v]) {
      vol_s += g.degree_raw(v);
      for (VertexId u : g.neighbors_raw(v))
        if (in_c[u] && !in_s[u]) ++cross;
    } else {
      rest_nonempty = true;
      vol_rest += g.degree_raw(v);
    }
  }
  if (!rest_nonempty) throw std::invalid_argument("S must be a strict subset");
  std::int64_t den = std::min(vol_s, vol_rest);
  if (den == 0)
    throw std::domain_error("conductance undefined: zero-volume side");
  return Rational(cross, den);
}

std::optional<Rational> classic_internal_conductance(
    const Graph& g, const std::vector<VertexId>& c, int cap) {
  if (c.empty()) throw std::invalid_argument("C must be nonempty");
  int b = static_cast<int>(c.size());
  if (b > cap || b > kHardEnumCap)
    throw CapExceeded("vertex set of " + std::to_string(b) +
                      " exceeds enumeration cap " + std::to_string(cap));
  std::vector<char> in_c(g.n(), 0);
  for (VertexId v : c) {
    g.check_vertex(v);
    in_c[v] = 1;
  }
  // degrees within G[C]
  std::vector<std::int64_t> deg_in(b, 0);
  std::vector<std::vector<int>> local_adj(b);
  std::vector<int> local_of(g.n(), -1);
  for (int i = 0; i < b; ++i) local_of[c[i]] = i;
  std::int64_t vol_c = 0;
  for (int i = 0; i < b; ++i) {
    for (VertexId u : g.neighbors_raw(c[i]))
      if (in_c[u]) {
        ++deg_in[i];
        local_adj[i].push_back(local_of[u]);
      }
    vol_c += deg_in[i];
  }

  bool found = false;
  std::int64_t best_num = 0, best_den = 1;
  const std::uint32_t limit = (b >= 32) ? 0 : (std::uint32_t{1} << b);
  for (std::uint32_t mask = 1; mask + 1 < limit; ++mask) {
    std::int64_t vol_s = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1)
      vol_s += deg_in[std::countr_zero(m)];
    if (vol_s == 0 || 2 * vol_s > vol_c) continue;
    std::int64_t cross = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      int i = std::countr_zero(m);
      for (int j : local_adj[i])
        if (!(mask & (std::uint32_t{1} << j))) ++cross;
    }
    if (!found || compare_ratio(cross, vol_s, best_num, best_den) < 0) {
      found = true;
      best_num = cross;
      best_den = vol_s;
    }
  }
  if (!found) return std::nullopt;
  return Rational(best_num, best_den);
}

Rational triangle_cut_conductance(const Graph& g,
                                  const std::vector<char>& in_s) {
  if (in_s.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("membership vector size mismatch");
  std::int64_t vol_s = 0, vol_rest = 0, cross = 0, vol_edges = 0;
  bool any_s = false, any_rest = false;
  for (VertexId v = 0; v < g.n(); ++v) {
    (in_s[v] ? any_s : any_rest) = true;
    std::int64_t deg2_v = 0;
    for (VertexId u : g.neighbors_raw(v)) {
      std::int64_t deg2_e = g.common_neighbors_raw(v, u);
      deg2_v += deg2_e;
      if (v < u) {
        vol_edges += deg2_e;
        if (in_s[v] != in_s[u] && deg2_e > 0) cross += deg2_e;
      }
    }
    // deg_2(v) = (# triangles at v); each triangle contributes twice above.
    (in_s[v] ? vol_s : vol_rest) += deg2_v / 2;
  }
  if (!any_s || !any_rest)
    throw std::invalid_argument("cut requires both sides nonempty");
  std::int64_t vol_vertices = vol_s + vol_rest;
  if (vol_vertices == 0 || vol_edges == 0)
    throw std::domain_error("degenerate: graph has no triangles");
  std::int64_t den = std::min(vol_s, vol_rest);
  if (den == 0)
    throw std::domain_error("conductance undefined: zero-volume side");
  // (cross/vol_edges) / (den/vol_vertices)
  return Rational(cross, vol_edges) / Rational(den, vol_vertices);
}

ColorfulExpansion colorful_expansion(const ComplexView& x, int cap) {
  ColorfulExpansion out;
  std::int64_t best_num = 0, best_den = 1;
  int best_dim = -1;
  std::uint32_t best_mask = 0;
  bool found = false;

  for (int i = 0; i < x.d(); ++i) {
    if (x.volume(i) == 0 || x.volume(i + 1) == 0)
      throw std::domain_error(
          "degenerate complex: zero volume at dimension " + std::to_string(i));
    Cochain ground = x.full_cochain(i);
    std::int64_t vol_total = x.volume(i);
    std::int64_t vol_next = x.volume(i + 1);
    enumerate_cuts(
        x, ground, cap,
        [&](std::int64_t vol_s, std::int64_t vol_f, int, std::uint32_t mask) {
          if (vol_s == 0 || 2 * vol_s > vol_total) return;
          std::int64_t num = vol_f * vol_total;
          std::int64_t den = vol_s * vol_next;
          if (!found || compare_ratio(num, den, best_num, best_den) < 0) {
            found = true;
            best_num = num;
            best_den = den;
            best_dim = i;
            best_mask = mask;
          }
        });
    // Full cochain: for i-dimension ground sets the Gray walk skips
    // mask == full, which matches 0 < ||C|| <= 1/2 (the full set has norm 1).
  }
  if (found) {
    out.eps_star = Rational(best_num, best_den);
    Cochain ground = x.full_cochain(best_dim);
    out.argmin = cochain_from_local_mask(ground, best_mask);
  }
  return out;
}

ColorfulVerdict is_colorful_expander(const ComplexView& x, const Rational& eps,
                                     int cap) {
  ColorfulVerdict v;
  ColorfulExpansion scan = colorful_expansion(x, cap);
  v.eps_star = scan.eps_star;
  if (!scan.eps_star.has_value()) {
    v.is_expander = true;  // vacuous: no qualifying cochain
    return v;
  }
  v.is_expander = *scan.eps_star >= eps;
  if (!v.is_expander) v.witness = scan.argmin;
  return v;
}

WeightedGraph induced_i_graph(const ComplexView& x, int i) {
  if (i < 0 || i >= x.d())
    throw std::invalid_argument("induced i-graph needs 0 <= i < d");
  WeightedGraph w;
  w.n = static_cast<std::int64_t>(x.faces(i).size());
  w.wdeg.assign(w.n, 0);
  const auto& next = x.faces(i + 1);
  for (std::size_t j = 0; j < next.size(); ++j) {
    std::int64_t deg = x.degrees(i + 1)[j];
    if (deg == 0) continue;  // unreachable by the walk; carries no edge
    auto sub = x.subfaces(i + 1, static_cast<int>(j));
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b) {
        int lo = std::min(sub[a], sub[b]);
        int hi = std::max(sub[a], sub[b]);
        w.edges.emplace_back(lo, hi, deg);
        w.wdeg[lo] += deg;
        w.wdeg[hi] += deg;
      }
  }
  std::sort(w.edges.begin(), w.edges.end());
  return w;
}

std::vector<std::vector<VertexId>> parse_partition(const std::string& text) {
  std::vector<std::vector<VertexId>> parts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<VertexId> part;
    long long v;
    while (ls >> v) part.push_back(static_cast<VertexId>(v));
    if (!ls.eof())
      throw std::invalid_argument("partition line has a non-integer token");
    if (!part.empty()) parts.push_back(std::move(part));
  }
  return parts;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& part,
                       std::vector<VertexId>& local_of) {
  local_of.assign(g.n(), -1);
  for (std::size_t i = 0; i < part.size(); ++i)
    local_of[part[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (VertexId v : part)
    for (VertexId u : g.neighbors_raw(v))
      if (v < u && local_of[u] >= 0)
        edges.push_back(make_edge(local_of[v], local_of[u]));
  return Graph::from_edges(std::move(edges),
                           static_cast<std::int64_t>(part.size()));
}

}  // namespace

ClusterReport verify_cluster(const Graph& g,
                             const std::vector<std::vector<VertexId>>& parts,
                             int d, double psi_in, double psi_out, int cap) {
  if (parts.empty()) throw std::invalid_argument("partition has no parts");
  std::vector<char> seen(g.n(), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("partition has empty part");
    for (VertexId v : part) {
      g.check_vertex(v);
      if (seen[v])
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two parts");
      seen[v] = 1;
    }
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (!seen[v])
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " not covered by the partition");

  ComplexView x = ComplexView::raise(g, d);
  ClusterReport report;
  report.ok = true;

  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<VertexId> local_of;
    Graph sub = induced_subgraph(g, parts[p], local_of);
    ComplexView xp = ComplexView::raise(sub, d);

    for (int r = 0; r < d; ++r) {
      PartCheck row;
      row.part = static_cast<int>(p);
      row.r = r;
      row.has_faces = !xp.faces(r).empty() && xp.volume(r) > 0;

      // Global cochain of the part's r-faces (cliques of G[P] are cliques of
      // G supported inside P).
      Cochain global_c;
      global_c.dim = r;
      for (FaceMask f : xp.faces(r)) {
        FaceMask global_f = 0;
        FaceMask rest = f;
        while (rest != 0) {
          global_f |= FaceMask{1} << parts[p][std::countr_zero(rest)];
          rest &= rest - 1;
        }
        int j = x.face_index(r, global_f);
        assert(j >= 0);
        global_c.faces.push_back(j);
      }
      std::sort(global_c.faces.begin(), global_c.faces.end());

      if (!row.has_faces) {
        // Internal conductance undefined; reported as violating.
        row.internal_ok = false;
        row.external_ok = true;
        row.external = Rational(0);
        report.ok = false;
        report.rows.push_back(row);
        continue;
      }

      row.internal = normalized_internal_conductance(xp, xp.full_cochain(r),
                                                     cap);
      row.internal_ok =
          !row.internal.has_value() || row.internal->to_double() >= psi_in;

      std::int64_t complement_vol =
          x.volume(r) - cochain_volume(x, global_c);
      if (global_c.faces.size() == x.faces(r).size() ||
          complement_vol == 0) {
        // No external cut exists (the part owns every r-face, or the
        // complement is all outliers and so is every crossing face).
        row.external = Rational(0);
      } else {
        row.external =
            normalized_external_conductance(x, global_c, x.full_cochain(r));
      }
      row.external_ok = row.external.to_double() <= psi_out;

      if (!row.internal_ok || !row.external_ok) report.ok = false;
      report.rows.push_back(row);
    }
  }
  return report;
}

std::string ClusterReport::to_text() const {
  std::ostringstream out;
  out << (ok ? "cluster check: PASS" : "cluster check: FAIL") << '\n';
  for (const auto& row : rows) {
    out << "  part " << row.part << " r=" << row.r;
    if (!row.has_faces) {
      out << "  no r-faces (violating)\n";
      continue;
    }
    out << "  internal=";
    if (row.internal.has_value())
      out << row.internal->to_string();
    else
      out << "inf";
    out << (row.internal_ok ? " (ok)" : " (LOW)");
    out << "  external=" << row.external.to_string()
        << (row.external_ok ? " (ok)" : " (HIGH)") << '\n';
  }
  return out.str();
}

std::string ClusterReport::to_csv() const {
  std::ostringstream out;
  out << "part,r,has_faces,internal,external,internal_ok,external_ok\n";
  for (const auto& row : rows) {
    out << row.part << ',' << row.r << ',' << (row.has_faces ? 1 : 0) << ',';
    if (row.internal.has_value())
      out << row.internal->to_string();
    else
      out << "inf";
    out << ',' << row.external.to_string() << ',' << (row.internal_ok ? 1 : 0)
        << ',' << (row.external_ok ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace hoct
