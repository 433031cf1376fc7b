// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Fox derivatives in the integral group ring of the free group, their
// specialization w -> t^phi(w), and the Alexander polynomial of (G, phi).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgk/bigint.hpp"
#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/laurent.hpp"
#include "fgk/presentation.hpp"

namespace fgk {

/// Finite Z-combination of free group elements.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement of(const Word& w, Int c = 1) {
    GroupRingElement e;
    e.add(w, c);
    return e;
  }

  void add(const Word& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) out.add(u * v, c * d);
    return out;
  }
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const Word& u, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [v, d] : b.terms_) out.add(u * v, d);
    return out;
  }

  std::string str(const std::vector<std::string>& gens) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      Int mag = fgk::abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (w.empty()) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += format_word(w, gens);
    }
    return out;
  }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, Int> terms_;
};

/// D_g(w), from D(uv) = D(u) + u D(v), D_g(g) = 1, D_g(g^-1) = -g^-1.
inline GroupRingElement fox_derivative(const Word& w, GenId g) {
  GroupRingElement out;
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.gen == g) {
      const auto n = narrow<std::int64_t>(fgk::abs(s.exp), "Fox exponent");
      if (s.exp > 0) {
        for (std::int64_t i = 0; i < n; ++i) out.add(prefix * Word(g, Int(i)), 1);
      } else {
        for (std::int64_t i = 1; i <= n; ++i) out.add(prefix * Word(g, Int(-i)), -1);
      }
    }
    prefix = prefix * Word(s.gen, s.exp);
  }
  return out;
}

inline LaurentPoly specialize(const GroupRingElement& e, const ZMap& phi) {
  LaurentPoly p;
  for (const auto& [w, c] : e.terms())
    p += LaurentPoly::monomial(c, narrow<LaurentPoly::Exp>(phi(w), "exponent"));
  return p;
}

/// sum_g specialize(D_g r) (t^phi(g) - 1) - (t^phi(r) - 1); zero for every
/// word r.
inline LaurentPoly fox_identity_residual(const Word& r, const ZMap& phi) {
  LaurentPoly sum;
  for (GenId g = 0; g < phi.size(); ++g)
    sum += specialize(fox_derivative(r, g), phi) *
           LaurentPoly::power_minus_one(narrow<LaurentPoly::Exp>(phi[g], "exponent"));
  return sum - (LaurentPoly::monomial(1, narrow<LaurentPoly::Exp>(phi(r), "exponent")) -
                LaurentPoly(1));
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Rows are relators, columns generators.
inline PolyMatrix alexander_matrix(const Presentation& p, const ZMap& phi) {
  PolyMatrix m(p.relator_count(), std::vector<LaurentPoly>(p.generator_count()));
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (GenId g = 0; g < p.generator_count(); ++g)
      m[i][g] = specialize(fox_derivative(p.relators()[i], g), phi);
  return m;
}

/// Fraction-free (Bareiss) determinant over Z[t, t^-1].
inline LaurentPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace detail {

inline constexpr std::size_t kMaxMinors = 200'000;

inline PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  PolyMatrix s(rows.size(), std::vector<LaurentPoly>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s[i][j] = m[rows[i]][cols[j]];
  return s;
}

/// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * Int(n - i) / Int(i + 1);
  return r;
}

inline ZMap checked_phi(const Presentation& p, const ZMap& phi) {
  if (!zmap_validate(phi, p)) throw HypothesisError("phi does not kill every relator");
  auto [norm, d] = phi.normalized();
  if (d == 0) throw HypothesisError("all columns have phi = 0");
  return norm;
}

}  // namespace detail

/// gcd of all (n-1)x(n-1) minors of the full Alexander matrix.
inline LaurentPoly alexander_poly_minors(const Presentation& p, const ZMap& phi) {
  const ZMap norm = detail::checked_phi(p, phi);
  const std::size_t n = p.generator_count(), r = p.relator_count();
  if (n == 0) throw HypothesisError("presentation has no generators");
  if (detail::binomial(r, n - 1) * n > detail::kMaxMinors)
    throw HypothesisError("too many minors");
  const PolyMatrix m = alexander_matrix(p, norm);
  LaurentPoly g;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (j != skip) cols.push_back(j);
    detail::for_each_subset(r, n - 1, [&](const std::vector<std::size_t>& rows) {
      g = gcd(g, determinant(detail::submatrix(m, rows, cols)));
    });
  }
  return g.normalized();
}

/// Alexander polynomial, normalized. With n generators and n-1 relators the
/// column of the smallest nonzero |phi(g)| is deleted and its determinant
/// divided by (t^phi(g) - 1)/(t - 1); otherwise the gcd of all minors.
inline LaurentPoly alexander_poly(const Presentation& p, const ZMap& phi) {
  const ZMap norm = detail::checked_phi(p, phi);
  const std::size_t n = p.generator_count();
  if (p.relator_count() + 1 != n) return alexander_poly_minors(p, phi);

  std::size_t col = n;
  for (std::size_t j = 0; j < n; ++j) {
    const Int& v = norm[static_cast<GenId>(j)];
    if (v != 0 && (col == n || fgk::abs(v) < fgk::abs(norm[static_cast<GenId>(col)]))) col = j;
  }
  const PolyMatrix m = alexander_matrix(p, norm);
  std::vector<std::size_t> rows(n - 1), cols;
  for (std::size_t i = 0; i + 1 < n; ++i) rows[i] = i;
  for (std::size_t j = 0; j < n; ++j)
    if (j != col) cols.push_back(j);
  LaurentPoly d = determinant(detail::submatrix(m, rows, cols));
  const auto e = narrow<LaurentPoly::Exp>(norm[static_cast<GenId>(col)], "exponent");
  LaurentPoly delta = exact_divide(d * LaurentPoly::power_minus_one(1),
                                   LaurentPoly::power_minus_one(e));
  return delta.normalized();
}

/// Both extreme coefficients are +-1 and the normalized degree matches.
inline bool monic_degree_check(const LaurentPoly& delta, const Int& expected_rank) {
  if (delta.is_zero()) return false;
  if (fgk::abs(delta.lowest_coefficient()) != 1 || fgk::abs(delta.highest_coefficient()) != 1)
    return false;
  return Int(delta.span()) == expected_rank;
}

inline bool is_monic(const LaurentPoly& delta) {
  return !delta.is_zero() && fgk::abs(delta.lowest_coefficient()) == 1 &&
         fgk::abs(delta.highest_coefficient()) == 1;
}

}  // namespace fgk
