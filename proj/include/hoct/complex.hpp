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
#include <string>
#include <tuple>
#include <vector>

#include "hoct/graph.hpp"
#include "hoct/rational.hpp"

namespace hoct {

/// Faces are vertex bitmasks; the exact oracle is a small-instance subsystem
/// and supports graphs on at most 32 vertices.
using FaceMask = std::uint32_t;

constexpr int kMaxOracleVertices = 32;

/// Default ground-set cap for exponential cochain enumerations (internal
/// conductance, colorful expansion). The oracle refuses larger inputs rather
/// than silently taking forever.
constexpr int kDefaultEnumCap = 20;
constexpr int kHardEnumCap = 26;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A subset of the i-dimensional faces, stored as sorted indices into
/// ComplexView::faces(i).
struct Cochain {
  int dim = 0;
  std::vector<int> faces;
};

/// Explicit d-dimensional simplicial complex of a small graph: all
/// (i+1)-cliques as i-faces, with deg_d(face) = number of top faces
/// containing it. Downward closure holds by construction.
class ComplexView {
 public:
  /// Raises the unique d-complex of g (faces = cliques of size <= d+1).
  /// d must be >= 1 and g.n() <= 32.
  static ComplexView raise(const Graph& g, int d);

  int d() const { return d_; }
  VertexId n() const { return n_; }

  const std::vector<FaceMask>& faces(int i) const;
  const std::vector<std::int64_t>& degrees(int i) const;
  std::int64_t volume(int i) const;  // Vol_d(X_i)

  /// Index of a face mask within dimension i, or -1.
  int face_index(int i, FaceMask f) const;

  /// deg_d(face). The face must exist at the dimension implied by its
  /// popcount; otherwise throws.
  std::int64_t face_degree(FaceMask f) const;

  /// Indices (into faces(i-1)) of the i+... subfaces of faces(i)[j].
  std::span<const int> subfaces(int i, int j) const;

  /// Full cochain at dimension i.
  Cochain full_cochain(int i) const;

  /// Faces with deg_d == 0, per dimension (the outliers; a pure complex has
  /// none below the top dimension).
  std::vector<std::vector<int>> outlier_faces() const;
  bool is_pure() const;

 private:
  int d_ = 0;
  VertexId n_ = 0;
  std::vector<std::vector<FaceMask>> faces_;     // faces_[i], sorted by mask
  std::vector<std::vector<std::int64_t>> deg_;   // deg_d per face
  std::vector<std::int64_t> vol_;
  std::vector<std::vector<int>> sub_;            // sub_[i]: (i+1) ids per face

  void check_dim(int i) const;
};

/// Weighted graph over i-faces: one vertex per face, an edge per adjacent
/// pair, weighted by deg_d of the shared (i+1)-face. Zero-weight pairs (the
/// shared face lies in no top face) carry no edge; the high-order walk cannot
/// traverse them.
struct WeightedGraph {
  std::int64_t n = 0;
  std::vector<std::tuple<int, int, std::int64_t>> edges;  // (a, b, w), a < b
  std::vector<std::int64_t> wdeg;

  static WeightedGraph from_graph(const Graph& g);  // unit weights
};

// --- cochain machinery ----------------------------------------------------

/// ||C||_d = Vol_d(C) / Vol_d(X_i). Throws if Vol_d(X_i) == 0.
Rational cochain_norm(const ComplexView& x, const Cochain& c);

std::int64_t cochain_volume(const ComplexView& x, const Cochain& c);

/// Expander face F(C, X_i \ C): the (i+1)-faces with at least one subface in
/// C and one outside. dim(C) must be < d.
Cochain expander_face(const ComplexView& x, const Cochain& c);

/// F(S, C\S) for S inside an arbitrary ground cochain C (the generalized cut
/// used by the conductances).
Cochain expander_face_between(const ComplexView& x, const Cochain& s,
                              const Cochain& ground);

/// Psi_{d,C}(S) = ||F(S, C\S)||_d / min(||S||_d, ||C\S||_d).
/// Requires {} != S strictly inside C.
Rational normalized_external_conductance(const ComplexView& x,
                                         const Cochain& s, const Cochain& c);

/// Psi_d(C[X_{i+1}]): min over nonempty S strictly inside C with
/// Vol_d(S) <= Vol_d(C)/2 of ||F(S, C\S)||_d / ||S||_d. nullopt means no
/// admissible split exists (vacuously unbounded, e.g. |C| == 1).
/// Splits with Vol_d(S) == 0 are degenerate and skipped.
std::optional<Rational> normalized_internal_conductance(
    const ComplexView& x, const Cochain& c, int cap = kDefaultEnumCap);

// --- classic (1-dimensional) conductances ----------------------------------

/// Phi_C(S) = |E(S, C\S)| / min(Vol(S), Vol(C\S)), volumes by degree in g.
Rational classic_conductance(const Graph& g, const std::vector<VertexId>& s,
                             const std::vector<VertexId>& c);

/// Internal conductance of G[C]: min over nonempty S strictly inside C with
/// Vol(S) <= Vol(C)/2 of |E(S, C\S)| / Vol(S), volumes by degree in G[C].
/// The balance condition is volume-based, matching the normalized
/// definition, so the dimension-1 factor-2 equivalence is exact.
std::optional<Rational> classic_internal_conductance(
    const Graph& g, const std::vector<VertexId>& c,
    int cap = kDefaultEnumCap);

/// d=2 normalized external conductance of a vertex cut, computed directly
/// from triangle counts. Works on large graphs (no complex materialization);
/// agrees exactly with the ComplexView route on small ones.
Rational triangle_cut_conductance(const Graph& g,
                                  const std::vector<char>& in_s);

// --- colorful expansion -----------------------------------------------------

struct ColorfulExpansion {
  /// Tightest epsilon: min over all dimensions i < d and all cochains with
  /// 0 < ||C|| <= 1/2 of ||F(C, X_i\C)|| / ||C||. nullopt when no cochain
  /// qualifies (vacuously an expander for every epsilon).
  std::optional<Rational> eps_star;
  /// A cochain attaining eps_star.
  std::optional<Cochain> argmin;
};

/// Exhaustive scan over all cochains of every dimension i < d.
/// Throws CapExceeded if any ground set exceeds cap; throws domain_error on
/// zero-volume dimensions (fully degenerate complexes).
ColorfulExpansion colorful_expansion(const ComplexView& x,
                                     int cap = kDefaultEnumCap);

struct ColorfulVerdict {
  bool is_expander = false;
  std::optional<Cochain> witness;  // violating cochain when not an expander
  std::optional<Rational> eps_star;
};

ColorfulVerdict is_colorful_expander(const ComplexView& x, const Rational& eps,
                                     int cap = kDefaultEnumCap);

// --- induced graphs and clusters -------------------------------------------

WeightedGraph induced_i_graph(const ComplexView& x, int i);

struct PartCheck {
  int part = 0;
  int r = 0;
  bool has_faces = false;
  /// nullopt = no admissible split (treated as +infinity).
  std::optional<Rational> internal;
  Rational external;
  bool internal_ok = false;
  bool external_ok = false;
};

struct ClusterReport {
  bool ok = false;
  std::vector<PartCheck> rows;
  std::string to_text() const;
  std::string to_csv() const;
};

/// Checks Def. 6 for an explicit partition: for every part and every
/// 0 <= r < d, internal conductance (within the part's own raised
/// subcomplex) >= psi_in and external conductance (within the global
/// complex) <= psi_out. A single part covering everything has external 0 by
/// convention. Parts with an empty r-face set are reported as violating.
ClusterReport verify_cluster(const Graph& g,
                             const std::vector<std::vector<VertexId>>& parts,
                             int d, double psi_in, double psi_out,
                             int cap = kDefaultEnumCap);

/// Parses the partition wire format: one line per part, whitespace-separated
/// vertex ids, '#' comments ignored.
std::vector<std::vector<VertexId>> parse_partition(const std::string& text);

}  // namespace hoct
