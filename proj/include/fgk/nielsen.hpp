// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/presentation.hpp"
#include "fgk/smith.hpp"

namespace fgk {

/// Parses "u->u y" (several assignments may be separated by commas).
/// Generators not mentioned are fixed.
inline Assignment parse_nielsen(std::string_view text, const Presentation& p) {
  Assignment a;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view part =
        detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (part.empty()) continue;
    auto arrow = part.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("Nielsen hint '" + std::string(part) + "' lacks '->'");
    std::string_view lhs = detail::trim(part.substr(0, arrow));
    std::string_view rhs = part.substr(arrow + 2);
    GenId g = p.id(lhs);
    if (a.contains(g)) throw ParseError("Nielsen hint assigns '" + std::string(lhs) + "' twice");
    if (detail::trim(rhs).empty()) throw ParseError("Nielsen hint has an empty image");
    a[g] = parse_word(rhs, p.generators());
  }
  if (a.empty()) throw ParseError("empty Nielsen hint");
  return a;
}

inline std::string format_assignment(const Assignment& a, const std::vector<std::string>& gens) {
  std::string out;
  for (const auto& [g, w] : a) {
    if (!out.empty()) out += ", ";
    out += gens.at(g) + "->" + format_word(w, gens);
  }
  return out;
}

inline Word image_of(const Assignment& a, GenId g) {
  auto it = a.find(g);
  return it == a.end() ? Word(g) : it->second;
}

/// Inverse of an endomorphism of the free group on `rank` generators, or a
/// HypothesisError if it is not an automorphism.
///
/// The image tuple is Nielsen-reduced by length-decreasing elementary moves,
/// falling back to simultaneous conjugation by one letter. An automorphism
/// ends at a signed permutation of the basis; the inverse is rebuilt from the
/// tracked moves and checked by substituting both ways.
inline Assignment inverse_automorphism(const Assignment& a, std::size_t rank) {
  for (const auto& [g, w] : a) {
    if (g >= rank) throw HypothesisError("assignment names a generator outside the free basis");
    for (const auto& s : w.syllables())
      if (s.gen >= rank) throw HypothesisError("image word leaves the free basis");
  }

  IntMatrix ab(rank, rank);
  for (GenId j = 0; j < rank; ++j) {
    const Word w = image_of(a, j);
    for (const auto& s : w.syllables()) ab(j, s.gen) += s.exp;
  }
  Int det = determinant(ab);
  if (det != 1 && det != -1)
    throw HypothesisError("not an automorphism: abelianized determinant " + det.str());

  std::vector<Word> cur, track;
  for (GenId j = 0; j < rank; ++j) {
    cur.push_back(image_of(a, j));
    track.push_back(Word(j));
  }
  Word conj;
  auto total = [](const std::vector<Word>& v) {
    Int n = 0;
    for (const auto& w : v) n += w.length();
    return n;
  };

  for (;;) {
    // Best length-reducing elementary move e_i <- e_i e_j^s or e_j^s e_i.
    std::size_t bi = 0, bj = 0;
    int bs = 0;
    bool left = false, found = false;
    Int best_gain = 0;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) {
        if (i == j) continue;
        for (int sgn : {1, -1})
          for (bool lft : {false, true}) {
            Word f = cur[j].pow(sgn);
            Word cand = lft ? f * cur[i] : cur[i] * f;
            Int gain = cur[i].length() - cand.length();
            if (gain > best_gain) {
              best_gain = gain;
              bi = i;
              bj = j;
              bs = sgn;
              left = lft;
              found = true;
            }
          }
      }
    if (found) {
      Word f = cur[bj].pow(bs), tf = track[bj].pow(bs);
      cur[bi] = left ? f * cur[bi] : cur[bi] * f;
      track[bi] = left ? tf * track[bi] : track[bi] * tf;
      continue;
    }
    Int before = total(cur);
    bool conjugated = false;
    for (GenId g = 0; g < rank && !conjugated; ++g)
      for (int sgn : {1, -1}) {
        Word l(g, sgn);
        std::vector<Word> next;
        for (const auto& w : cur) next.push_back(l.inverse() * w * l);
        if (total(next) < before) {
          cur = std::move(next);
          conj = conj * l;
          conjugated = true;
          break;
        }
      }
    if (!conjugated) break;
  }

  // cur_j = conj^-1 track_j(images) conj must be a signed basis permutation.
  Assignment gamma;
  for (std::size_t j = 0; j < rank; ++j) {
    const auto& s = cur[j].syllables();
    if (s.size() != 1 || fgk::abs(s[0].exp) != 1)
      throw HypothesisError("not an automorphism: images do not Nielsen-reduce to a basis");
    if (gamma.contains(s[0].gen))
      throw HypothesisError("not an automorphism: images do not Nielsen-reduce to a basis");
    gamma[s[0].gen] = track[j].pow(s[0].exp);
  }
  Assignment inverse;
  for (GenId g = 0; g < rank; ++g)
    inverse[g] = substitute(conj.inverse() * Word(g) * conj, gamma);

  for (GenId g = 0; g < rank; ++g) {
    if (substitute(substitute(Word(g), inverse), a) != Word(g) ||
        substitute(substitute(Word(g), a), inverse) != Word(g))
      throw HypothesisError("not an automorphism: inverse round-trip failed");
  }
  return inverse;
}

}  // namespace fgk
