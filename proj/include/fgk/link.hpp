// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Group-level link constructions: multiplicity classes of multilinks, splice
// of two knot groups along their peripheral tori, cables, and propagation of
// the fibered predicate through both.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fgk/abelian.hpp"
#include "fgk/bigint.hpp"
#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/presentation.hpp"
#include "fgk/smith.hpp"
#include "fgk/splitting.hpp"

namespace fgk {

/// Oriented link components with linking numbers and multiplicities.
/// Components entered with orientation -1 are stored reversed with the
/// multiplicity and their linking row negated, so every stored component
/// has orientation +1.
class LinkData {
 public:
  LinkData(std::vector<std::string> components, std::vector<int> orientation,
           IntMatrix linking, std::vector<Int> multiplicities)
      : ids_(std::move(components)), linking_(std::move(linking)), mult_(std::move(multiplicities)) {
    const std::size_t n = ids_.size();
    if (orientation.size() != n || mult_.size() != n || linking_.rows() != n ||
        linking_.cols() != n)
      throw HypothesisError("link data sizes disagree");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && linking_(i, j) != linking_(j, i))
          throw HypothesisError("linking matrix is not symmetric");
    for (std::size_t i = 0; i < n; ++i) {
      if (orientation[i] != 1 && orientation[i] != -1)
        throw HypothesisError("orientation must be +1 or -1");
      if (orientation[i] == 1) continue;
      mult_[i] = -mult_[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        linking_(i, j) = -linking_(i, j);
        linking_(j, i) = -linking_(j, i);
      }
    }
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& components() const { return ids_; }
  const IntMatrix& linking() const { return linking_; }
  const std::vector<Int>& multiplicities() const { return mult_; }

 private:
  std::vector<std::string> ids_;
  IntMatrix linking_;
  std::vector<Int> mult_;
};

/// Integer 1-cycle sum_i alpha_i M_i + sum_j beta_j S_j in the stored basis
/// of meridians M_i and components S_j.
struct LinkCycle {
  std::vector<Int> meridians;
  std::vector<Int> components;
};

/// m(S) = l(S, m_1 S_1 + ... + m_n S_n).
inline Int multiplicity_class(const LinkData& link, const LinkCycle& cycle) {
  const std::size_t n = link.size();
  if (cycle.meridians.size() != n || cycle.components.size() != n)
    throw HypothesisError("cycle is not expressed in the link basis");
  const auto& m = link.multiplicities();
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) total += cycle.meridians[i] * m[i];
  for (std::size_t j = 0; j < n; ++j) {
    if (cycle.components[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) total += cycle.components[j] * m[i] * link.linking()(j, i);
  }
  return total;
}

/// Knot (or link-component) group with a peripheral system and a class phi.
struct KnotGroupData {
  Presentation presentation;
  std::optional<Peripheral> peripheral;
  ZMap phi;
  bool irreducible = false;
  bool incompressible = false;

  Int meridian_value() const { return phi(require_peripheral().meridian); }
  Int longitude_value() const { return phi(require_peripheral().longitude); }

  const Peripheral& require_peripheral() const {
    if (!peripheral)
      throw HypothesisError("missing peripheral data for '" + presentation.name() + "'");
    return *peripheral;
  }

  friend bool operator==(const KnotGroupData&, const KnotGroupData&) = default;
};

/// Without a phi line the abelianization map is used, oriented so the
/// meridian (when present) has positive value.
inline KnotGroupData knot_data(const GroupFile& f) {
  KnotGroupData k{f.presentation, f.peripheral, ZMap(), f.irreducible, f.incompressible};
  if (f.phi) {
    if (!zmap_validate(*f.phi, f.presentation))
      throw HypothesisError("phi does not kill every relator");
    k.phi = *f.phi;
  } else {
    k.phi = abelian_zmap(f.presentation);
    if (f.peripheral && k.phi(f.peripheral->meridian) < 0) k.phi = k.phi.negated();
  }
  return k;
}

inline GroupFile group_file(const KnotGroupData& k) {
  return GroupFile{k.presentation, k.phi, k.peripheral, k.irreducible, k.incompressible};
}

namespace detail {

inline std::string unique_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.contains(base)) return base;
  for (int i = 2;; ++i) {
    std::string n = base + std::to_string(i);
    if (!used.contains(n)) return n;
  }
}

inline Word shift_word(const Word& w, GenId by) {
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) raw.push_back({s.gen + by, s.exp});
  return Word::reduce(raw);
}

}  // namespace detail

enum class PhiPolicy {
  exact,    // phi' and phi'' must agree across both gluing relations
  rescale,  // primitive (alpha, beta) with alpha phi' + beta phi'' compatible
  drop,     // emit no class
};

struct SpliceResult {
  Presentation presentation;
  std::optional<ZMap> phi;
};

/// Disjoint union of the presentations plus meridian' = longitude'' and
/// longitude' = meridian''. Clashing generator names of the second group get
/// a numeric suffix.
inline SpliceResult splice(const KnotGroupData& k1, const KnotGroupData& k2,
                           PhiPolicy policy = PhiPolicy::exact) {
  const Peripheral& p1 = k1.require_peripheral();
  const Peripheral& p2 = k2.require_peripheral();
  const auto& g1 = k1.presentation;
  const auto& g2 = k2.presentation;

  std::vector<std::string> gens = g1.generators();
  std::set<std::string> used(gens.begin(), gens.end());
  for (const auto& g : g2.generators()) {
    std::string n = detail::unique_name(g, used);
    used.insert(n);
    gens.push_back(std::move(n));
  }
  const auto off = static_cast<GenId>(g1.generator_count());
  std::vector<Word> rels = g1.relators();
  for (const auto& r : g2.relators()) rels.push_back(detail::shift_word(r, off));
  rels.push_back(p1.meridian * detail::shift_word(p2.longitude, off).inverse());
  rels.push_back(p1.longitude * detail::shift_word(p2.meridian, off).inverse());

  SpliceResult out{Presentation("splice_" + g1.name() + "_" + g2.name(), std::move(gens),
                                std::move(rels)),
                   std::nullopt};
  if (policy == PhiPolicy::drop) return out;

  const Int m1 = k1.phi(p1.meridian), l1 = k1.phi(p1.longitude);
  const Int m2 = k2.phi(p2.meridian), l2 = k2.phi(p2.longitude);
  Int alpha = 1, beta = 1;
  if (policy == PhiPolicy::exact) {
    if (m1 != l2 || l1 != m2)
      throw HypothesisError("phi incompatibility across gluing relations: " + m1.str() +
                            " vs " + l2.str() + ", " + l1.str() + " vs " + m2.str());
  } else {
    // Kernel of [[m1, -l2], [l1, -m2]] acting on (alpha, beta).
    IntMatrix sys(2, 2);
    sys(0, 0) = m1;
    sys(0, 1) = -l2;
    sys(1, 0) = l1;
    sys(1, 1) = -m2;
    SmithForm snf = smith_normal_form(sys);
    if (snf.rank() == 2) {
      alpha = beta = 0;
    } else if (snf.rank() == 1) {
      alpha = snf.right(0, 1);
      beta = snf.right(1, 1);
    }
    Int g = gcd(alpha, beta);
    if (g > 1) {
      alpha /= g;
      beta /= g;
    }
    if (alpha < 0 || (alpha == 0 && beta < 0)) {
      alpha = -alpha;
      beta = -beta;
    }
  }
  std::vector<Int> v;
  for (const auto& x : k1.phi.values()) v.push_back(alpha * x);
  for (const auto& x : k2.phi.values()) v.push_back(beta * x);
  out.phi = ZMap(std::move(v));
  return out;
}

/// Name of the generator added by cable_group.
inline std::string cable_generator_name(const Presentation& p) {
  const auto& g = p.generators();
  return detail::unique_name("t", std::set<std::string>(g.begin(), g.end()));
}

namespace detail {

inline void check_cable_parameters(const Int& p, const Int& q) {
  if (q == 0) throw HypothesisError("cable requires q != 0");
  if (gcd(p, q) != 1) throw HypothesisError("cable requires gcd(p, q) = 1");
}

}  // namespace detail

/// <K, t | meridian^p longitude^q = t^q>. phi becomes q phi_K on K and
/// p phi(meridian) + q phi(longitude) on t, then normalized. On request a
/// peripheral system is added: meridian m^c t^d with phi = 1 by Bezout, and
/// longitude meridian^p longitude^q corrected by a meridian power to phi = 0.
inline KnotGroupData cable_group(const KnotGroupData& k, const Int& p, const Int& q,
                                 bool emit_peripheral = false) {
  detail::check_cable_parameters(p, q);
  const Peripheral& per = k.require_peripheral();
  const auto& g = k.presentation;

  std::vector<std::string> gens = g.generators();
  gens.push_back(cable_generator_name(g));
  const Word t(static_cast<GenId>(g.generator_count()));
  std::vector<Word> rels = g.relators();
  const Word pattern = per.meridian.pow(p) * per.longitude.pow(q);
  rels.push_back(pattern * t.pow(-q));

  std::vector<Int> v;
  for (const auto& x : k.phi.values()) v.push_back(q * x);
  v.push_back(p * k.phi(per.meridian) + q * k.phi(per.longitude));
  auto [phi, d] = ZMap(std::move(v)).normalized();

  KnotGroupData out;
  out.presentation = Presentation(g.name() + "_cable_" + p.str() + "_" + q.str(), std::move(gens),
                                  std::move(rels));
  out.phi = phi;
  if (!emit_peripheral) return out;

  auto [h, c, e] = extended_gcd(phi(per.meridian), phi(t));
  if (h != 1) throw HypothesisError("no cable meridian: phi(meridian) and phi(t) generate " +
                                    h.str() + "Z");
  const Word mu = per.meridian.pow(c) * t.pow(e);
  const Word lambda = pattern * mu.pow(-phi(pattern));
  out.peripheral = Peripheral{mu, lambda};
  return out;
}

/// The cable group as K *_{meridian^p longitude^q = t^q} <t>; its assembled
/// presentation has the same generators and relators as cable_group.
inline Splitting cable_splitting(const KnotGroupData& k, const Int& p, const Int& q) {
  detail::check_cable_parameters(p, q);
  const Peripheral& per = k.require_peripheral();
  Presentation b("cable_core", {cable_generator_name(k.presentation)});
  return Splitting::amalgam(k.presentation, b,
                            {{per.meridian.pow(p) * per.longitude.pow(q), Word(0, q)}});
}

enum class SpliceVerdict { fibered, not_fibered, not_applicable };

inline std::string_view to_string(SpliceVerdict v) {
  switch (v) {
    case SpliceVerdict::fibered:
      return "fibered";
    case SpliceVerdict::not_fibered:
      return "not fibered";
    case SpliceVerdict::not_applicable:
      return "not applicable";
  }
  return "?";
}

/// With both boundary tori incompressible the splice is fibered iff both
/// pieces are; otherwise nothing is claimed.
inline SpliceVerdict fibered_splice(bool fibered1, bool fibered2, bool incompressible1,
                                    bool incompressible2) {
  if (!incompressible1 || !incompressible2) return SpliceVerdict::not_applicable;
  return fibered1 && fibered2 ? SpliceVerdict::fibered : SpliceVerdict::not_fibered;
}

/// A cable is fibered iff its companion is.
inline bool cable_fibered(bool base_fibered, const Int& p, const Int& q) {
  detail::check_cable_parameters(p, q);
  return base_fibered;
}

}  // namespace fgk
