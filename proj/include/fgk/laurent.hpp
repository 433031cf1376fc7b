// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgk/bigint.hpp"
#include "fgk/errors.hpp"

namespace fgk {

/// Integer Laurent polynomial in t; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exp = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Int c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[0] = std::move(c);
  }
  LaurentPoly(int c) : LaurentPoly(Int(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Int c, Exp k) {
    LaurentPoly p;
    if (c != 0) p.terms_[k] = std::move(c);
    return p;
  }
  static LaurentPoly t() { return monomial(1, 1); }
  /// t^k - 1
  static LaurentPoly power_minus_one(Exp k) { return monomial(1, k) - LaurentPoly(1); }

  const std::map<Exp, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Exp min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  Exp max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  /// Width max_exp - min_exp; the degree once normalized.
  Exp span() const { return max_exp() - min_exp(); }
  Int lowest_coefficient() const { return terms_.empty() ? Int(0) : terms_.begin()->second; }
  Int highest_coefficient() const { return terms_.empty() ? Int(0) : terms_.rbegin()->second; }
  Int coefficient(Exp k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Int evaluate_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  /// gcd of the coefficients (nonnegative).
  Int content() const {
    Int g = 0;
    for (const auto& [k, c] : terms_) g = fgk::gcd(g, c);
    return g;
  }

  LaurentPoly shifted(Exp k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& [k, c] : p.terms_) c = -c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [i, c] : a.terms_)
      for (const auto& [j, d] : b.terms_) p.add_term(i + j, c * d);
    return p;
  }

  /// Unit multiple (+-t^k) with lowest exponent 0 and positive leading
  /// coefficient.
  LaurentPoly normalized() const {
    if (is_zero()) return *this;
    LaurentPoly p = shifted(-min_exp());
    return p.highest_coefficient() < 0 ? -p : p;
  }

  /// Ascending form, e.g. "1 - t + t^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Int mag = fgk::abs(c);
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      if (k == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str();
      out += "t";
      if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(Exp k, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exp, Int> terms_;
};

/// Quotient f / g when it exists in Z[t, t^-1].
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return LaurentPoly();
  const auto shift = f.min_exp() - g.min_exp();
  LaurentPoly rem = f.shifted(-f.min_exp());
  const LaurentPoly div = g.shifted(-g.min_exp());
  const auto dlead = div.max_exp();
  const Int lc = div.highest_coefficient();
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= dlead) {
    const Int c = rem.highest_coefficient();
    if (c % lc != 0) return std::nullopt;
    LaurentPoly term = LaurentPoly::monomial(c / lc, rem.max_exp() - dlead);
    quot += term;
    rem -= term * div;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(shift);
}

inline LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw std::domain_error("inexact division " + f.str() + " / " + g.str());
  return *q;
}

/// gcd up to units, normalized. Content and primitive part are handled
/// separately; the primitive gcd runs Euclid over the rationals.
inline LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  using Rational = boost::multiprecision::cpp_rational;
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();

  auto dense = [](const LaurentPoly& p) {
    LaurentPoly s = p.shifted(-p.min_exp());
    std::vector<Rational> v(static_cast<std::size_t>(s.max_exp()) + 1);
    for (const auto& [k, c] : s.terms()) v[static_cast<std::size_t>(k)] = Rational(c);
    return v;
  };
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto a = dense(f), b = dense(g);
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational factor = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= factor * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  // Clear denominators, then take the primitive part.
  Int den = 1;
  for (const auto& c : a) den = lcm(den, boost::multiprecision::denominator(c));
  LaurentPoly prim;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational scaled = a[i] * Rational(den);
    prim += LaurentPoly::monomial(boost::multiprecision::numerator(scaled),
                                  static_cast<LaurentPoly::Exp>(i));
  }
  Int pc = prim.content();
  LaurentPoly result;
  for (const auto& [k, c] : prim.terms()) result += LaurentPoly::monomial(c / pc, k);
  Int content = fgk::gcd(f.content(), g.content());
  return (result * LaurentPoly(content)).normalized();
}

}  // namespace fgk
