// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fgk/errors.hpp"
#include "fgk/presentation.hpp"
#include "fgk/smith.hpp"

namespace fgk {

/// Rows are relators, columns generators, entries exponent sums.
inline IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (const auto& s : p.relators()[i].syllables()) m(i, s.gen) += s.exp;
  return m;
}

struct AbelianizationResult {
  std::vector<Int> torsion;  // d_1 | d_2 | ..., each >= 2
  std::size_t free_rank = 0;
  SmithForm basis_change;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_infinite_cyclic() const { return torsion.empty() && free_rank == 1; }

  /// e.g. "Z", "Z/2 + Z^3", "0".
  std::string describe() const {
    std::string out;
    for (const auto& d : torsion) {
      if (!out.empty()) out += " + ";
      out += "Z/" + d.str();
    }
    if (free_rank > 0) {
      if (!out.empty()) out += " + ";
      out += "Z";
      if (free_rank > 1) out += "^" + std::to_string(free_rank);
    }
    return out.empty() ? "0" : out;
  }
};

inline AbelianizationResult abelianize(const Presentation& p) {
  AbelianizationResult r;
  r.basis_change = smith_normal_form(relator_matrix(p));
  std::size_t rank = 0;
  for (const auto& d : r.basis_change.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) r.torsion.push_back(d);
  }
  r.free_rank = p.generator_count() - rank;
  return r;
}

/// Projection onto Z when the abelianization has free rank exactly one:
/// the generator values are the free column of the right basis change.
inline ZMap abelian_zmap(const Presentation& p) {
  auto ab = abelianize(p);
  if (ab.free_rank != 1)
    throw HypothesisError("abelianization has free rank " +
                          std::to_string(ab.free_rank) +
                          ", no canonical map onto Z");
  const auto& right = ab.basis_change.right;
  const std::size_t col = p.generator_count() - 1;
  std::vector<Int> v;
  for (std::size_t i = 0; i < p.generator_count(); ++i) v.push_back(right(i, col));
  // Orient so the first nonzero value is positive.
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) return ZMap(std::move(v)).negated();
    break;
  }
  return ZMap(std::move(v));
}

/// Exponent sums (p, q) of the single relator of a two-generator group.
inline std::pair<Int, Int> exponent_sums(const Presentation& pres) {
  if (!pres.is_two_generator_one_relator())
    throw HypothesisError("expected a two-generator one-relator presentation");
  const Word& r = pres.relators().front();
  return {exponent_sum(r, 0), exponent_sum(r, 1)};
}

inline Int torsion_number(const Presentation& pres) {
  auto [p, q] = exponent_sums(pres);
  Int m = gcd(p, q);
  if (m == 0) throw HypothesisError("m = 0, no torsion number");
  return m;
}

/// phi(x) = -b, phi(y) = a with a = p/m, b = q/m.
inline ZMap canonical_zmap(const Presentation& pres) {
  auto [p, q] = exponent_sums(pres);
  Int m = gcd(p, q);
  if (m == 0) throw HypothesisError("m = 0, no torsion number");
  return ZMap({Int(-(q / m)), Int(p / m)});
}

}  // namespace fgk
