// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Kernel indices and the coset graph of N = ker(phi) in a splitting.
//
// With phi normalized onto Z, [G : NX] is the index of phi(X) in Z, so the
// cosets of NA, NB and NC are residue classes modulo a_idx, b_idx and
// c_idx. Only normal subgroups of this form are handled.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fgk/errors.hpp"
#include "fgk/presentation.hpp"
#include "fgk/splitting.hpp"

namespace fgk {

/// Subgroup index that may be infinite.
class Index {
 public:
  static Index infinite() { return Index(); }
  static Index finite(Int v) {
    Index i;
    i.value_ = std::move(v);
    return i;
  }

  bool is_finite() const { return value_.has_value(); }
  const Int& value() const {
    if (!value_) throw HypothesisError("index is infinite");
    return *value_;
  }
  std::string str() const { return value_ ? value_->str() : "inf"; }

  friend bool operator==(const Index&, const Index&) = default;

 private:
  Index() = default;
  std::optional<Int> value_;
};

struct KernelIndices {
  Index a_idx = Index::infinite();
  std::optional<Index> b_idx;  // amalgam only
  Index c_idx = Index::infinite();
  Int image;                   // d with phi(G) = dZ, d > 0
  Int stable_value;            // normalized phi(t), HNN only

  bool all_finite() const {
    return a_idx.is_finite() && c_idx.is_finite() && (!b_idx || b_idx->is_finite());
  }
};

namespace detail {

inline Index index_in_image(const std::vector<Int>& values, const Int& image) {
  Int g = gcd(std::span<const Int>(values));
  if (g == 0) return Index::infinite();
  return Index::finite(g / image);
}

}  // namespace detail

inline KernelIndices kernel_indices(const Splitting& s, const ZMap& phi) {
  const Presentation g = s.assembled();
  if (!zmap_validate(phi, g))
    throw HypothesisError("phi does not kill the relators of the assembled group");
  KernelIndices k;
  k.image = phi.image_generator();
  if (k.image == 0) throw HypothesisError("N = G, indices undefined");

  std::vector<Int> a_vals, c_vals;
  for (GenId i = 0; i < s.factor_a().generator_count(); ++i) a_vals.push_back(phi[i]);
  for (const auto& e : s.edges()) c_vals.push_back(phi(e.first));
  k.a_idx = detail::index_in_image(a_vals, k.image);
  k.c_idx = detail::index_in_image(c_vals, k.image);
  if (s.kind() == SplittingKind::amalgam) {
    std::vector<Int> b_vals;
    for (GenId i = 0; i < s.factor_b()->generator_count(); ++i)
      b_vals.push_back(phi[s.offset() + i]);
    k.b_idx = detail::index_in_image(b_vals, k.image);
    k.stable_value = 0;
  } else {
    k.stable_value = phi[s.offset()] / k.image;
  }
  return k;
}

struct CosetEdge {
  Int label;  // residue mod c_idx
  Int from;   // A-vertex residue
  Int to;     // B-vertex residue (amalgam) or A-vertex residue (HNN)
  friend bool operator==(const CosetEdge&, const CosetEdge&) = default;
};

/// Finite graph whose vertices are the NA (and NB) cosets and whose edges are
/// the NC cosets. Vertex labels are canonical residues 0..idx-1.
struct CosetGraph {
  SplittingKind kind = SplittingKind::amalgam;
  Int a_idx = 0;
  std::optional<Int> b_idx;
  Int c_idx = 0;
  std::vector<CosetEdge> edges;
  Int euler_characteristic = 0;

  Int vertex_count() const { return a_idx + (b_idx ? *b_idx : Int(0)); }
  Int edge_count() const { return Int(edges.size()); }

  bool connected() const {
    const auto na = narrow<std::size_t>(a_idx, "vertex count");
    const auto n = narrow<std::size_t>(vertex_count(), "vertex count");
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t components = n;
    for (const auto& e : edges) {
      std::size_t u = e.from.convert_to<std::size_t>();
      std::size_t v = e.to.convert_to<std::size_t>();
      if (kind == SplittingKind::amalgam) v += na;
      u = find(u);
      v = find(v);
      if (u != v) {
        parent[u] = v;
        --components;
      }
    }
    return components == 1;
  }
};

inline constexpr std::size_t kMaxCosetEdges = 1'000'000;

inline CosetGraph coset_graph(const KernelIndices& k, SplittingKind kind) {
  if (!k.all_finite())
    throw HypothesisError(
        "graph infinite; N not finitely generated unless contained in a factor");
  CosetGraph g;
  g.kind = kind;
  g.a_idx = k.a_idx.value();
  g.c_idx = k.c_idx.value();
  if (kind == SplittingKind::amalgam) g.b_idx = k.b_idx->value();
  const auto edges = narrow<std::size_t>(g.c_idx, "edge count");
  if (edges > kMaxCosetEdges) throw HypothesisError("coset graph too large: " + g.c_idx.str() + " edges");
  g.edges.reserve(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    Int label(i);
    if (kind == SplittingKind::amalgam)
      g.edges.push_back({label, mod_floor(label, g.a_idx), mod_floor(label, *g.b_idx)});
    else
      g.edges.push_back({label, mod_floor(label, g.a_idx),
                         mod_floor(label + k.stable_value, g.a_idx)});
  }
  g.euler_characteristic = g.vertex_count() - g.edge_count();
  return g;
}

inline CosetGraph coset_graph(const Splitting& s, const ZMap& phi) {
  return coset_graph(kernel_indices(s, phi), s.kind());
}

/// rank(N) for N with trivial intersection with C:
///   amalgam: a rank(N^A) + b rank(N^B) + 1 + c - a - b
///   HNN:     a rank(N^A) + 1 + c - a
/// If a graph is supplied its indices must match, and 1 + c - a (- b), the
/// rank of the free part, is checked against 1 - chi(graph).
inline Int free_kernel_rank(SplittingKind kind, const Int& a_idx,
                            const std::optional<Int>& b_idx, const Int& c_idx,
                            const Int& rank_a, const std::optional<Int>& rank_b,
                            const CosetGraph* graph = nullptr) {
  if (a_idx <= 0 || c_idx <= 0)
    throw HypothesisError("indices must be positive and finite");
  if (rank_a < 0) throw HypothesisError("negative vertex rank");
  Int free_part = 1 + c_idx - a_idx;
  Int rank = a_idx * rank_a;
  if (kind == SplittingKind::amalgam) {
    if (!b_idx || *b_idx <= 0) throw HypothesisError("amalgam requires a positive b index");
    Int rb = rank_b.value_or(0);
    if (rb < 0) throw HypothesisError("negative vertex rank");
    free_part -= *b_idx;
    rank += *b_idx * rb;
  }
  rank += free_part;
  if (graph) {
    if (graph->kind != kind || graph->a_idx != a_idx || graph->c_idx != c_idx ||
        graph->b_idx != (kind == SplittingKind::amalgam ? b_idx : std::nullopt))
      throw HypothesisError("coset graph does not match the supplied indices");
    if (1 - free_part != graph->euler_characteristic)
      throw HypothesisError("free rank disagrees with the coset graph's Euler characteristic");
  }
  if (free_part < 0 || rank < 0) throw HypothesisError("premises inconsistent");
  return rank;
}

inline Int free_kernel_rank(const CosetGraph& g, const Int& rank_a,
                            const std::optional<Int>& rank_b = std::nullopt) {
  return free_kernel_rank(g.kind, g.a_idx, g.b_idx, g.c_idx, rank_a, rank_b, &g);
}

}  // namespace fgk
