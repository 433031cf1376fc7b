// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fgk/bigint.hpp"

namespace fgk {

using GenId = std::uint32_t;

struct Syllable {
  GenId gen = 0;
  Int exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in a free group, stored as syllables g^e.
///
/// Invariant: adjacent syllables have distinct generators and no exponent
/// is zero. Every constructor path goes through reduce().
class Word {
 public:
  Word() = default;
  explicit Word(GenId g, Int e = 1) {
    if (e != 0) syl_.push_back({g, std::move(e)});
  }

  /// Free reduction of an arbitrary syllable list.
  static Word reduce(std::span<const Syllable> raw) {
    Word w;
    for (const auto& s : raw) w.push(s.gen, s.exp);
    return w;
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::size_t syllable_count() const { return syl_.size(); }

  /// Letter length: sum of |exponent|.
  Int length() const {
    Int n = 0;
    for (const auto& s : syl_) n += fgk::abs(s.exp);
    return n;
  }

  Word inverse() const {
    Word w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
      w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    for (const auto& s : v.syl_) w.push(s.gen, s.exp);
    return w;
  }

  Word pow(const Int& n) const {
    if (n < 0) return inverse().pow(-n);
    if (syl_.size() == 1) return Word(syl_[0].gen, syl_[0].exp * n);
    Word result, base = *this;
    Int k = n;
    while (k > 0) {
      if (k % 2 == 1) result = result * base;
      k /= 2;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Total order on syllable data, for use as a map key.
  friend bool operator<(const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.syl_.begin(), a.syl_.end(), b.syl_.begin(), b.syl_.end(),
        [](const Syllable& x, const Syllable& y) {
          if (x.gen != y.gen) return x.gen < y.gen;
          return x.exp < y.exp;
        });
  }

 private:
  void push(GenId g, const Int& e) {
    if (e == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += e;
      if (syl_.back().exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back({g, e});
  }

  std::vector<Syllable> syl_;
};

inline Word reduce(std::span<const Syllable> raw) { return Word::reduce(raw); }

inline Int exponent_sum(const Word& w, GenId g) {
  Int total = 0;
  for (const auto& s : w.syllables())
    if (s.gen == g) total += s.exp;
  return total;
}

/// Image assignment for substitute(); generators absent from the map are
/// fixed.
using Assignment = std::map<GenId, Word>;

inline Word substitute(const Word& w, const Assignment& images) {
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.gen);
    if (it == images.end())
      out = out * Word(s.gen, s.exp);
    else
      out = out * it->second.pow(s.exp);
  }
  return out;
}

/// Composition (outer after inner) of two assignments: g -> outer(inner(g)).
inline Assignment compose(const Assignment& outer, const Assignment& inner) {
  Assignment result;
  for (const auto& [g, w] : inner) result[g] = substitute(w, outer);
  for (const auto& [g, w] : outer)
    if (!inner.contains(g)) result[g] = w;
  return result;
}

namespace detail {

// Walks a word letter by letter without expanding exponents.
class LetterCursor {
 public:
  explicit LetterCursor(const std::vector<Syllable>& s) : syl_(s) {
    if (!syl_.empty()) left_ = fgk::abs(syl_[0].exp);
  }
  bool done() const { return idx_ >= syl_.size(); }
  GenId gen() const { return syl_[idx_].gen; }
  bool negative() const { return syl_[idx_].exp < 0; }
  const Int& run() const { return left_; }
  void advance(const Int& n) {
    left_ -= n;
    if (left_ == 0 && ++idx_ < syl_.size()) left_ = fgk::abs(syl_[idx_].exp);
  }

 private:
  const std::vector<Syllable>& syl_;
  std::size_t idx_ = 0;
  Int left_ = 0;
};

}  // namespace detail

/// Letter-by-letter lexicographic comparison with letters ordered by
/// generator id, then positive before negative. A proper prefix is smaller.
inline std::strong_ordering compare_letters(const Word& a, const Word& b) {
  detail::LetterCursor x(a.syllables()), y(b.syllables());
  while (!x.done() && !y.done()) {
    if (x.gen() != y.gen()) return x.gen() <=> y.gen();
    if (x.negative() != y.negative())
      return x.negative() ? std::strong_ordering::greater
                          : std::strong_ordering::less;
    Int step = x.run() < y.run() ? x.run() : y.run();
    x.advance(step);
    y.advance(step);
  }
  if (x.done() && y.done()) return std::strong_ordering::equal;
  return x.done() ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Cyclically reduced conjugate with the fewest syllables, ties broken by
/// the lexicographically least rotation.
inline Word cyclic_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  // Peel conjugating syllables and merge the ends.
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    Int merged = s[lo].exp + s[hi - 1].exp;
    if (merged == 0) {
      ++lo;
      --hi;
      continue;
    }
    // x^a ... x^b with a + b != 0: rotate the tail onto the front.
    s[lo].exp = merged;
    --hi;
    break;
  }
  std::vector<Syllable> core(s.begin() + static_cast<std::ptrdiff_t>(lo),
                             s.begin() + static_cast<std::ptrdiff_t>(hi));
  if (core.size() <= 1) return Word::reduce(core);

  Word best;
  bool have = false;
  for (std::size_t r = 0; r < core.size(); ++r) {
    std::vector<Syllable> rot;
    rot.reserve(core.size());
    for (std::size_t i = 0; i < core.size(); ++i)
      rot.push_back(core[(r + i) % core.size()]);
    Word cand = Word::reduce(rot);
    if (!have || compare_letters(cand, best) == std::strong_ordering::less) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

}  // namespace fgk
