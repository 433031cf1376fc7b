// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgk/bigint.hpp"
#include "fgk/errors.hpp"
#include "fgk/word.hpp"

namespace fgk {

/// Finite presentation: named generators (ids are positions) and relators.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> generators,
               std::vector<Word> relators = {})
      : name_(std::move(name)),
        gens_(std::move(generators)),
        rels_(std::move(relators)) {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (gens_[i] == gens_[j])
          throw ParseError("duplicate generator '" + gens_[i] + "'");
    for (const auto& r : rels_)
      for (const auto& s : r.syllables())
        if (s.gen >= gens_.size())
          throw ParseError("relator uses undeclared generator id " +
                           std::to_string(s.gen));
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return rels_; }
  std::size_t generator_count() const { return gens_.size(); }
  std::size_t relator_count() const { return rels_.size(); }

  std::optional<GenId> find(std::string_view gen) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == gen) return static_cast<GenId>(i);
    return std::nullopt;
  }

  GenId id(std::string_view gen) const {
    if (auto g = find(gen)) return *g;
    throw ParseError("undeclared generator '" + std::string(gen) + "'");
  }

  bool is_two_generator_one_relator() const {
    return gens_.size() == 2 && rels_.size() == 1;
  }

  Presentation renamed(std::string name) const {
    Presentation p = *this;
    p.name_ = std::move(name);
    return p;
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
};

/// Homomorphism to Z, given by its values on generators (indexed by id).
class ZMap {
 public:
  ZMap() = default;
  explicit ZMap(std::vector<Int> values) : values_(std::move(values)) {}

  const std::vector<Int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Int& operator[](GenId g) const { return values_.at(g); }

  Int operator()(const Word& w) const {
    Int total = 0;
    for (const auto& s : w.syllables()) total += values_.at(s.gen) * s.exp;
    return total;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (v != 0) return false;
    return true;
  }

  /// Generator d >= 0 of the image dZ.
  Int image_generator() const { return gcd(std::span<const Int>(values_)); }

  /// Divides out the image generator so the image becomes Z. Returns the
  /// normalized map and d; the zero map is returned unchanged with d = 0.
  std::pair<ZMap, Int> normalized() const {
    Int d = image_generator();
    if (d <= 1) return {*this, d};
    std::vector<Int> v = values_;
    for (auto& x : v) x /= d;
    return {ZMap(std::move(v)), d};
  }

  ZMap negated() const {
    std::vector<Int> v = values_;
    for (auto& x : v) x = -x;
    return ZMap(std::move(v));
  }

  friend bool operator==(const ZMap&, const ZMap&) = default;

 private:
  std::vector<Int> values_;
};

/// True iff every relator has weighted exponent sum zero.
inline bool zmap_validate(const ZMap& phi, const Presentation& p) {
  if (phi.size() != p.generator_count()) return false;
  for (const auto& r : p.relators())
    if (phi(r) != 0) return false;
  return true;
}

struct Peripheral {
  Word meridian;
  Word longitude;
  friend bool operator==(const Peripheral&, const Peripheral&) = default;
};

}  // namespace fgk
