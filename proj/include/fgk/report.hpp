// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Computable evidence for "ker(phi) is finitely generated free and phi(G) is
// infinite cyclic": the image of phi, the abelianization, the Alexander
// polynomial, and the one-relator fiber rank when it applies.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgk/abelian.hpp"
#include "fgk/errors.hpp"
#include "fgk/fox.hpp"
#include "fgk/one_relator.hpp"
#include "fgk/presentation.hpp"

namespace fgk {

enum class FiberVerdict { consistent, not_fibered, inconclusive };

inline std::string_view to_string(FiberVerdict v) {
  switch (v) {
    case FiberVerdict::consistent:
      return "consistent with fibered";
    case FiberVerdict::not_fibered:
      return "not fibered";
    case FiberVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct StallingsReport {
  std::string group;
  Int image_index = 0;  // d with phi(G) = dZ; 0 when phi is trivial
  AbelianizationResult abelianization;
  std::optional<LaurentPoly> alexander;
  bool monic = false;
  std::optional<Int> fiber_rank;
  bool fiber_rank_attempted = false;
  std::vector<std::string> diagnostics;
  FiberVerdict verdict = FiberVerdict::inconclusive;

  /// Stable "key = value" lines.
  std::string render() const {
    std::string out;
    auto line = [&](std::string_view k, const std::string& v) {
      out += std::string(k) + " = " + v + "\n";
    };
    line("group", group);
    line("phi_image", image_index == 0 ? "0" : image_index == 1 ? "Z" : image_index.str() + "Z");
    line("abelianization", abelianization.describe());
    if (alexander) {
      line("alexander", alexander->str());
      line("alexander_degree", std::to_string(alexander->span()));
      line("alexander_monic", monic ? "yes" : "no");
    }
    if (fiber_rank_attempted) line("fiber_rank", fiber_rank ? fiber_rank->str() : "unknown");
    for (const auto& d : diagnostics) line("diagnostic", d);
    line("verdict", std::string(to_string(verdict)));
    return out;
  }
};

/// The verdict is "not fibered" when the Alexander polynomial vanishes or is
/// not monic; "consistent with fibered" when it is monic and agrees with the
/// fiber rank whenever that is known; "inconclusive" otherwise.
inline StallingsReport stallings_report(const Presentation& p, const ZMap& phi,
                                        const std::vector<std::string>& hints = {}) {
  if (!zmap_validate(phi, p)) throw HypothesisError("phi does not kill every relator");
  StallingsReport r;
  r.group = p.name();
  r.image_index = phi.image_generator();
  r.abelianization = abelianize(p);
  if (r.image_index == 0) {
    r.diagnostics.push_back("phi is trivial");
    return r;
  }
  if (r.image_index != 1)
    r.diagnostics.push_back("phi is not onto Z; normalized by " + r.image_index.str());
  const ZMap norm = phi.normalized().first;

  bool blocked = false;
  try {
    r.alexander = alexander_poly(p, norm);
    r.monic = is_monic(*r.alexander);
  } catch (const HypothesisError& e) {
    r.diagnostics.push_back(std::string("alexander: ") + e.what());
    blocked = true;
  }

  if (p.is_two_generator_one_relator()) {
    try {
      const ZMap canon = canonical_zmap(p);
      if (norm == canon || norm == canon.negated()) {
        r.fiber_rank_attempted = true;
        r.fiber_rank = fiber_rank(p, hints).rank;
      } else {
        r.diagnostics.push_back("phi is not the canonical map; fiber rank skipped");
      }
    } catch (const HypothesisError& e) {
      r.diagnostics.push_back(e.what());
      blocked = true;
    }
  }

  if (r.alexander && (r.alexander->is_zero() || !r.monic))
    r.verdict = FiberVerdict::not_fibered;
  else if (blocked || !r.alexander)
    r.verdict = FiberVerdict::inconclusive;
  else if (r.fiber_rank && Int(r.alexander->span()) != *r.fiber_rank) {
    r.diagnostics.push_back("alexander degree disagrees with fiber rank");
    r.verdict = FiberVerdict::inconclusive;
  } else {
    r.verdict = FiberVerdict::consistent;
  }
  return r;
}

}  // namespace fgk
