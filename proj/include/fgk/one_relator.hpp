// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rank of the free kernel of G = <x, y; r> -> Z for two-generator
// one-relator groups. When every x-exponent of r is divisible by e > 1,
// r(x, y) = s(x^e, y) and G = <x> *_{x^e = u} H with H = <u, y; s>; the
// kernel ranks k of G and l of H satisfy
//
//   k = 1 + gcd(a, e) (l - 1) + |b| (e - 1),   a = p/m, b = q/m,
//
// where (p, q) are the exponent sums of r and m = gcd(p, q).

#include <optional>
#include <string>
#include <vector>

#include "fgk/abelian.hpp"
#include "fgk/coset_graph.hpp"
#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/nielsen.hpp"
#include "fgk/presentation.hpp"
#include "fgk/splitting.hpp"

namespace fgk {

struct RelatorAnalysis {
  Int p, q;  // exponent sums in x (generator 0) and y (generator 1)
  Int m;     // gcd(p, q) > 0
  Int a, b;  // p/m, q/m
  Int e;     // gcd of the x-exponents of the cyclically reduced relator (1 if none)

  friend bool operator==(const RelatorAnalysis&, const RelatorAnalysis&) = default;
};

inline RelatorAnalysis analyze(const Word& relator) {
  const Word r = cyclic_reduce(relator);
  RelatorAnalysis out;
  out.p = exponent_sum(r, 0);
  out.q = exponent_sum(r, 1);
  if (out.q == 0)
    throw HypothesisError("hypothesis violated: exponent sum of y is zero");
  out.m = gcd(out.p, out.q);
  out.a = out.p / out.m;
  out.b = out.q / out.m;
  Int e = 0;
  for (const auto& s : r.syllables())
    if (s.gen == 0) e = gcd(e, s.exp);
  out.e = e == 0 ? Int(1) : e;
  return out;
}

/// s with r(x, y) = s(x^e, y): every exponent of generator 0 divided by e.
inline Word descend(const Word& r, const Int& e) {
  if (e < 1) throw HypothesisError("descent exponent must be positive");
  std::vector<Syllable> raw;
  for (const auto& s : r.syllables()) {
    if (s.gen == 0) {
      if (s.exp % e != 0)
        throw HypothesisError("x-exponent " + s.exp.str() + " is not divisible by " + e.str());
      raw.push_back({0, s.exp / e});
    } else {
      raw.push_back(s);
    }
  }
  return Word::reduce(raw);
}

/// Name for the descended generator: first of u, v, w, s, z, u1, u2, ...
/// not already used by `p`.
inline std::string fresh_generator_name(const Presentation& p) {
  for (const char* c : {"u", "v", "w", "s", "z"})
    if (!p.find(c)) return c;
  for (int i = 1;; ++i) {
    std::string n = "u" + std::to_string(i);
    if (!p.find(n)) return n;
  }
}

/// H = <u, y; s> for G = <x, y; r>, with x renamed to a fresh name.
inline Presentation descend(const Presentation& g, const Int& e) {
  if (!g.is_two_generator_one_relator())
    throw HypothesisError("expected a two-generator one-relator presentation");
  std::string u = fresh_generator_name(g);
  return Presentation(g.name() + "_desc", {u, g.generators()[1]},
                      {descend(g.relators()[0], e)});
}

/// G = <x> *_{x^e = u} H, the splitting behind the rank transfer.
inline Splitting descent_splitting(const Presentation& g, const Int& e) {
  Presentation h = descend(g, e);
  Presentation a(g.name() + "_x", {g.generators()[0]});
  return Splitting::amalgam(a, h, {{Word(0, e), Word(0)}});
}

inline Int rank_transfer(const Int& l, const Int& a, const Int& b, const Int& e) {
  if (l < 0) throw HypothesisError("inconsistent input: negative rank");
  if (b == 0) throw HypothesisError("inconsistent input: b = 0");
  if (e < 1) throw HypothesisError("inconsistent input: e < 1");
  if (gcd(a, b) != 1) throw HypothesisError("inconsistent input: gcd(a, b) != 1");
  Int k = 1 + gcd(a, e) * (l - 1) + fgk::abs(b) * (e - 1);
  if (k < 0) throw HypothesisError("inconsistent input: negative rank");
  return k;
}

struct FiberRankResult {
  std::optional<Int> rank;  // nullopt = unknown
  std::vector<std::string> trace;
};

namespace detail {

struct FiberRankSearch {
  const std::vector<std::string>& hints;
  std::size_t next_hint = 0;
  std::vector<std::string> trace;

  std::optional<Int> run(Presentation g, int depth) {
    const std::vector<std::string> gens = g.generators();
    for (;;) {
      const Word r = cyclic_reduce(g.relators()[0]);
      g = Presentation(g.name(), gens, {r});
      const RelatorAnalysis an = analyze(r);
      const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
      trace.push_back(indent + "relator = " + format_word(r, gens) + "  (p=" + an.p.str() +
                      " q=" + an.q.str() + " m=" + an.m.str() + " a=" + an.a.str() +
                      " b=" + an.b.str() + " e=" + an.e.str() + ")");

      if (r.syllable_count() == 2) {
        // u^alpha y^beta: the amalgam <u> *_{u^alpha = y^-beta} <y>.
        const Int alpha = exponent_sum(r, 0), beta = exponent_sum(r, 1);
        Splitting s = Splitting::amalgam(Presentation("A", {gens[0]}),
                                         Presentation("B", {gens[1]}),
                                         {{Word(0, alpha), Word(0, -beta)}});
        CosetGraph graph = coset_graph(s, canonical_zmap(g));
        Int k = free_kernel_rank(graph, 0, Int(0));
        trace.push_back(indent + "base: indices (" + graph.a_idx.str() + ", " +
                        graph.b_idx->str() + ", " + graph.c_idx.str() + "), chi = " +
                        graph.euler_characteristic.str() + ", rank = " + k.str());
        return k;
      }
      if (r.syllable_count() == 1) {
        // r = y^q: G = Z * Z/|q|.
        if (fgk::abs(an.q) == 1) {
          trace.push_back(indent + "base: G is infinite cyclic, rank = 0");
          return Int(0);
        }
        trace.push_back(indent + "relator is a proper power of y; kernel has torsion");
        return std::nullopt;
      }
      if (an.e > 1) {
        Presentation h = descend(g, an.e);
        trace.push_back(indent + "descend e=" + an.e.str() + ": " +
                        format_word(h.relators()[0], h.generators()));
        auto l = run(h, depth + 1);
        if (!l) return std::nullopt;
        Int k = rank_transfer(*l, an.a, an.b, an.e);
        // Same number through the general rank formula on the descent splitting.
        Splitting s = descent_splitting(g, an.e);
        std::vector<Int> phi{-an.b, -an.b * an.e, an.a};
        CosetGraph graph = coset_graph(s, ZMap(phi));
        Int via_graph = free_kernel_rank(graph, 0, *l);
        if (via_graph != k)
          throw HypothesisError("rank transfer disagrees with the coset graph formula");
        trace.push_back(indent + "transfer: l=" + l->str() + " a=" + an.a.str() + " b=" +
                        an.b.str() + " e=" + an.e.str() + " indices (" + graph.a_idx.str() +
                        ", " + graph.b_idx->str() + ", " + graph.c_idx.str() + ") -> k=" +
                        k.str());
        return k;
      }
      if (next_hint >= hints.size()) {
        trace.push_back(indent + "no rule applies and no hints remain");
        return std::nullopt;
      }
      // Hints are parsed against the generator names current at this stage.
      const Assignment h = parse_nielsen(hints[next_hint++], g);
      inverse_automorphism(h, 2);
      Word moved = substitute(r, h);
      trace.push_back(indent + "nielsen " + format_assignment(h, gens) + ": " +
                      format_word(moved, gens));
      g = Presentation(g.name(), gens, {moved});
    }
  }
};

}  // namespace detail

/// Hints are Nielsen assignments such as "u->u y", consumed in order
/// whenever neither the base case nor a descent applies.
inline FiberRankResult fiber_rank(const Presentation& g,
                                  const std::vector<std::string>& hints = {}) {
  if (!g.is_two_generator_one_relator())
    throw HypothesisError("expected a two-generator one-relator presentation");
  detail::FiberRankSearch search{hints, 0, {}};
  auto k = search.run(g, 0);
  return {k, std::move(search.trace)};
}

}  // namespace fgk
