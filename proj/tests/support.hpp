// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <string>
#include <vector>

#include "fgk/fgk.hpp"

namespace fgk::test {

inline const std::vector<std::string> kXY = {"x", "y"};
inline const std::vector<std::string> kUY = {"u", "y"};

inline Word W(const std::string& text, const std::vector<std::string>& gens = kXY) {
  return parse_word(text, gens);
}

inline Presentation P(const std::string& name, const std::vector<std::string>& gens,
                      const std::vector<std::string>& rels) {
  std::vector<Word> words;
  for (const auto& r : rels) words.push_back(parse_word(r, gens));
  return Presentation(name, gens, words);
}

inline ZMap Z(std::initializer_list<long long> values) {
  std::vector<Int> v;
  for (auto x : values) v.emplace_back(x);
  return ZMap(std::move(v));
}

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Random unreduced syllable list over `gens` generators.
inline std::vector<Syllable> random_syllables(Rng& rng, std::size_t gens, std::size_t len,
                                              long long max_exp = 3) {
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < len; ++i) {
    long long e = 0;
    while (e == 0) e = uniform(rng, -max_exp, max_exp);
    raw.push_back({static_cast<GenId>(uniform(rng, 0, static_cast<long long>(gens) - 1)), Int(e)});
  }
  return raw;
}

inline Word random_word(Rng& rng, std::size_t gens, std::size_t len, long long max_exp = 3) {
  return Word::reduce(random_syllables(rng, gens, len, max_exp));
}

/// Letter-by-letter free reduction, independent of Word's syllable stack.
inline std::vector<std::pair<GenId, int>> letters_reduced(const std::vector<Syllable>& raw) {
  std::vector<std::pair<GenId, int>> stack;
  for (const auto& s : raw) {
    const int sign = s.exp > 0 ? 1 : -1;
    for (Int k = 0; k < fgk::abs(s.exp); ++k) {
      if (!stack.empty() && stack.back().first == s.gen && stack.back().second == -sign)
        stack.pop_back();
      else
        stack.emplace_back(s.gen, sign);
    }
  }
  return stack;
}

inline std::vector<std::pair<GenId, int>> letters(const Word& w) {
  return letters_reduced(w.syllables());
}

/// Closed-form Alexander polynomial of the (p, q) torus knot,
/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by integer long division.
inline LaurentPoly torus_knot_poly(long long p, long long q) {
  // Dense ascending coefficient vectors.
  auto mul = [](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  auto power_minus_one = [](long long k) {
    std::vector<long long> v(static_cast<std::size_t>(k) + 1, 0);
    v[0] = -1;
    v[static_cast<std::size_t>(k)] = 1;
    return v;
  };
  auto num = mul(power_minus_one(p * q), power_minus_one(1));
  auto den = mul(power_minus_one(p), power_minus_one(q));
  std::vector<long long> quot(num.size() - den.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    long long c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (long long r : num)
    if (r != 0) throw std::logic_error("torus knot division not exact");
  LaurentPoly out;
  for (std::size_t i = 0; i < quot.size(); ++i)
    out += LaurentPoly::monomial(Int(quot[i]), static_cast<LaurentPoly::Exp>(i));
  return out.normalized();
}

inline KnotGroupData unknot() {
  return knot_data(parse_group("group unknot\ngen u\nphi u=1\nperipheral meridian=u longitude=1\n"));
}

inline KnotGroupData torus_knot(long long p, long long q) {
  return cable_group(unknot(), Int(p), Int(q), true);
}

}  // namespace fgk::test
