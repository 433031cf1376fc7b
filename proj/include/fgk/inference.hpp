// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Three-valued closure of facts about a normal subgroup N of G = A *_C B or
// G = A *_C under the finite-generation rules for amalgams and HNN
// extensions, the free-kernel rules for N with trivial intersection with C,
// and the "G/N finite or N free" rule for free abelian C.
//
// Every rule is stored as a clause (disjunction of literals) and closed by
// unit propagation, so contrapositives come for free. A clause left with two
// open literals and the rest false is reported as a disjunction; the engine
// never case-splits, so such disjunctions stay unresolved.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgk/errors.hpp"
#include "fgk/splitting.hpp"

namespace fgk {

enum class Tri : std::uint8_t { unknown, yes, no };

enum class Fact : std::uint8_t {
  n_fg,                  // N finitely generated
  n_in_c,                // N is contained in C
  nc_finite_index,       // NC has finite index in G
  n_cap_a_fg,            // N meet A finitely generated
  n_cap_b_fg,            // N meet B finitely generated (amalgam)
  n_cap_c_fg,            // N meet C finitely generated
  c_mod_n_finite,        // C / (N meet C) finite
  n_cap_c_trivial,       // N meet C = 1
  n_cap_a_free,          // N meet A free
  n_cap_b_free,          // N meet B free (amalgam)
  factors_no_fg_normal,  // A (and B) have no f.g. nontrivial normal subgroup of infinite index
  g_mod_n_finite,        // G / N finite
  n_free,                // N free
};

inline constexpr std::size_t kPremiseCount = 11;
inline constexpr std::size_t kFactCount = 13;

inline constexpr std::array<std::string_view, kFactCount> kFactNames = {
    "n_fg",           "n_in_c",          "nc_finite_index",
    "n_cap_a_fg",     "n_cap_b_fg",      "n_cap_c_fg",
    "c_mod_n_finite", "n_cap_c_trivial", "n_cap_a_free",
    "n_cap_b_free",   "factors_no_fg_normal", "g_mod_n_finite",
    "n_free"};

inline std::string_view fact_name(Fact f) { return kFactNames[static_cast<std::size_t>(f)]; }

inline std::optional<Fact> parse_fact(std::string_view name) {
  for (std::size_t i = 0; i < kFactCount; ++i)
    if (kFactNames[i] == name) return static_cast<Fact>(i);
  return std::nullopt;
}

struct Literal {
  Fact fact;
  bool value;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct InferenceRule {
  std::string_view label;
  std::vector<Literal> clause;
};

struct Disjunction {
  Literal first;
  Literal second;
  std::string_view rule;
  friend bool operator==(const Disjunction& a, const Disjunction& b) {
    return a.first == b.first && a.second == b.second;
  }
};

struct InferenceContext {
  SplittingKind kind = SplittingKind::amalgam;
  bool nontrivial = false;                  // amalgam: A != C != B asserted
  bool c_free_abelian_finite_rank = false;  // enables the "finite or free" rule
};

using FactFlags = std::array<Tri, kFactCount>;

struct FgConclusions {
  FactFlags flags{};
  std::vector<Disjunction> disjunctions;
  std::vector<std::string> trace;  // "<fact> = yes|no by <rule>" in firing order

  Tri operator[](Fact f) const { return flags[static_cast<std::size_t>(f)]; }
};

namespace detail {

inline Literal pos(Fact f) { return {f, true}; }
inline Literal neg(Fact f) { return {f, false}; }

}  // namespace detail

/// The clause set in force for a given splitting context.
inline std::vector<InferenceRule> inference_rules(const InferenceContext& ctx) {
  using detail::neg;
  using detail::pos;
  using F = Fact;
  const bool amalgam = ctx.kind == SplittingKind::amalgam;
  std::vector<InferenceRule> rules;
  auto add = [&](std::string_view label, std::vector<Literal> c) {
    rules.push_back({label, std::move(c)});
  };

  if (!amalgam || ctx.nontrivial) {
    add("(i) N f.g. and N not in C => NC finite index",
        {neg(F::n_fg), pos(F::n_in_c), pos(F::nc_finite_index)});
    add("(ii) N f.g., N not in C, N^C f.g. => N^A f.g.",
        {neg(F::n_fg), pos(F::n_in_c), neg(F::n_cap_c_fg), pos(F::n_cap_a_fg)});
    if (amalgam)
      add("(ii) N f.g., N not in C, N^C f.g. => N^B f.g.",
          {neg(F::n_fg), pos(F::n_in_c), neg(F::n_cap_c_fg), pos(F::n_cap_b_fg)});
    add("(iii) NC finite index => N not in C",
        {neg(F::nc_finite_index), neg(F::n_in_c)});
    if (amalgam)
      add("(iv) NC finite index, N^A f.g., N^B f.g. => N f.g.",
          {neg(F::nc_finite_index), neg(F::n_cap_a_fg), neg(F::n_cap_b_fg), pos(F::n_fg)});
    else
      add("(iv) NC finite index, N^A f.g. => N f.g.",
          {neg(F::nc_finite_index), neg(F::n_cap_a_fg), pos(F::n_fg)});
    add("(v) NC finite index => (G/N finite => C/N^C finite)",
        {neg(F::nc_finite_index), neg(F::g_mod_n_finite), pos(F::c_mod_n_finite)});
    add("(v) NC finite index => (C/N^C finite => G/N finite)",
        {neg(F::nc_finite_index), neg(F::c_mod_n_finite), pos(F::g_mod_n_finite)});
  }

  // Free-kernel rules; N != 1 is encoded as N not in C, which is equivalent
  // once N^C = 1.
  const auto guard = std::vector<Literal>{neg(F::n_cap_c_trivial), pos(F::n_in_c)};
  auto guarded = [&](std::string_view label, std::vector<Literal> c) {
    c.insert(c.begin(), guard.begin(), guard.end());
    add(label, std::move(c));
  };
  guarded("(vi) N^C = 1, N != 1: N free => N^A free",
          {neg(F::n_free), pos(F::n_cap_a_free)});
  if (amalgam) {
    guarded("(vi) N^C = 1, N != 1: N free => N^B free",
            {neg(F::n_free), pos(F::n_cap_b_free)});
    guarded("(vi) N^C = 1, N != 1: N^A, N^B free => N free",
            {neg(F::n_cap_a_free), neg(F::n_cap_b_free), pos(F::n_free)});
  } else {
    guarded("(vi) N^C = 1, N != 1: N^A free => N free",
            {neg(F::n_cap_a_free), pos(F::n_free)});
  }
  guarded("(vi) N^C = 1, N != 1: N f.g. => NC finite index",
          {neg(F::n_fg), pos(F::nc_finite_index)});
  guarded("(vi) N^C = 1, N != 1: N f.g. => N^A f.g.",
          {neg(F::n_fg), pos(F::n_cap_a_fg)});
  if (amalgam) {
    guarded("(vi) N^C = 1, N != 1: N f.g. => N^B f.g.",
            {neg(F::n_fg), pos(F::n_cap_b_fg)});
    guarded("(vi) N^C = 1, N != 1: NC finite index, N^A, N^B f.g. => N f.g.",
            {neg(F::nc_finite_index), neg(F::n_cap_a_fg), neg(F::n_cap_b_fg), pos(F::n_fg)});
  } else {
    guarded("(vi) N^C = 1, N != 1: NC finite index, N^A f.g. => N f.g.",
            {neg(F::nc_finite_index), neg(F::n_cap_a_fg), pos(F::n_fg)});
  }

  if (ctx.c_free_abelian_finite_rank)
    add("(vii) C free abelian, factors without f.g. normal subgroups, N f.g., N not in C => G/N finite or N free",
        {neg(F::factors_no_fg_normal), neg(F::n_fg), pos(F::n_in_c),
         pos(F::g_mod_n_finite), pos(F::n_free)});
  return rules;
}

inline FgConclusions fg_inference(const InferenceContext& ctx, const FactFlags& premises) {
  FgConclusions out;
  out.flags = premises;
  const auto rules = inference_rules(ctx);

  auto value = [&](const Literal& l) {
    Tri t = out.flags[static_cast<std::size_t>(l.fact)];
    if (t == Tri::unknown) return Tri::unknown;
    return (t == Tri::yes) == l.value ? Tri::yes : Tri::no;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : rules) {
      const Literal* open = nullptr;
      std::size_t open_count = 0;
      bool satisfied = false;
      for (const auto& l : rule.clause) {
        Tri v = value(l);
        if (v == Tri::yes) {
          satisfied = true;
          break;
        }
        if (v == Tri::unknown) {
          open = &l;
          ++open_count;
        }
      }
      if (satisfied) continue;
      if (open_count == 0)
        throw ContradictionError("contradiction under rule " + std::string(rule.label));
      if (open_count == 1) {
        out.flags[static_cast<std::size_t>(open->fact)] = open->value ? Tri::yes : Tri::no;
        out.trace.push_back(std::string(fact_name(open->fact)) + " = " +
                            (open->value ? "yes" : "no") + " by " + std::string(rule.label));
        changed = true;
      }
    }
  }

  for (const auto& rule : rules) {
    std::vector<Literal> open;
    bool satisfied = false;
    for (const auto& l : rule.clause) {
      Tri v = value(l);
      if (v == Tri::yes) satisfied = true;
      if (v == Tri::unknown) open.push_back(l);
    }
    if (satisfied || open.size() != 2) continue;
    Disjunction d{open[0], open[1], rule.label};
    bool seen = false;
    for (const auto& e : out.disjunctions) seen = seen || e == d;
    if (!seen) out.disjunctions.push_back(d);
  }
  return out;
}

}  // namespace fgk
