// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Splitting files extend the presentation format:
//
//   amalgam A=<file> B=<file>        |  hnn A=<file> stable=<id>
//   edge inA=<word> inB=<word>       |  edge inC=<word> inD=<word>
//   nontrivial yes|no                   (amalgam only; caller assertion)
//   phi <id>=<int> ...                  (on the assembled group)
//
// Factor paths are resolved relative to the splitting file.

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/presentation.hpp"

namespace fgk {

enum class SplittingKind { amalgam, hnn };

/// One generator of the edge group C, seen from both sides. For an amalgam
/// `first` is a word over A and `second` a word over B; for an HNN extension
/// both are words over A with t * first * t^-1 = second.
struct EdgeGenerator {
  Word first;
  Word second;
  friend bool operator==(const EdgeGenerator&, const EdgeGenerator&) = default;
};

class Splitting {
 public:
  static Splitting amalgam(Presentation a, Presentation b,
                           std::vector<EdgeGenerator> edges,
                           bool nontrivial = false) {
    Splitting s;
    s.kind_ = SplittingKind::amalgam;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.edges_ = std::move(edges);
    s.nontrivial_ = nontrivial;
    for (const auto& g : s.a_.generators())
      if (s.b_->find(g))
        throw ParseError("amalgam factors share generator name '" + g + "'");
    s.check_edges();
    return s;
  }

  static Splitting hnn(Presentation a, std::string stable,
                       std::vector<EdgeGenerator> edges) {
    Splitting s;
    s.kind_ = SplittingKind::hnn;
    s.a_ = std::move(a);
    if (s.a_.find(stable))
      throw ParseError("stable letter '" + stable + "' is a generator of A");
    if (!detail::valid_identifier(stable))
      throw ParseError("bad stable letter name '" + stable + "'");
    s.stable_ = std::move(stable);
    s.edges_ = std::move(edges);
    s.check_edges();
    return s;
  }

  SplittingKind kind() const { return kind_; }
  const Presentation& factor_a() const { return a_; }
  const std::optional<Presentation>& factor_b() const { return b_; }
  const std::vector<EdgeGenerator>& edges() const { return edges_; }
  const std::string& stable_letter() const { return stable_; }
  bool nontrivial() const { return nontrivial_; }

  /// Id of a B generator (amalgam) or of the stable letter (HNN) in the
  /// assembled presentation.
  GenId offset() const { return static_cast<GenId>(a_.generator_count()); }

  /// Word over B (or the stable letter) re-indexed into the assembled group.
  Word lift_second(const Word& w) const {
    std::vector<Syllable> raw;
    for (const auto& s : w.syllables()) raw.push_back({s.gen + offset(), s.exp});
    return Word::reduce(raw);
  }

  /// Generators of A, then of B (or the stable letter); relators of the
  /// factors plus one identification per edge generator.
  Presentation assembled(std::string name = "G") const {
    std::vector<std::string> gens = a_.generators();
    std::vector<Word> rels = a_.relators();
    if (kind_ == SplittingKind::amalgam) {
      for (const auto& g : b_->generators()) gens.push_back(g);
      for (const auto& r : b_->relators()) rels.push_back(lift_second(r));
      for (const auto& e : edges_)
        rels.push_back(e.first * lift_second(e.second).inverse());
    } else {
      gens.push_back(stable_);
      Word t(offset());
      for (const auto& e : edges_)
        rels.push_back(t * e.first * t.inverse() * e.second.inverse());
    }
    return Presentation(std::move(name), std::move(gens), std::move(rels));
  }

 private:
  void check_edges() const {
    const std::size_t na = a_.generator_count();
    const std::size_t nb =
        kind_ == SplittingKind::amalgam ? b_->generator_count() : na;
    for (const auto& e : edges_) {
      for (const auto& s : e.first.syllables())
        if (s.gen >= na) throw ParseError("edge word leaves factor A");
      for (const auto& s : e.second.syllables())
        if (s.gen >= nb) throw ParseError("edge word leaves its factor");
    }
  }

  SplittingKind kind_ = SplittingKind::amalgam;
  Presentation a_;
  std::optional<Presentation> b_;
  std::vector<EdgeGenerator> edges_;
  std::string stable_;
  bool nontrivial_ = false;
};

struct SplittingFile {
  Splitting splitting;
  std::optional<ZMap> phi;  // on splitting.assembled()
  std::string name = "G";
};

inline SplittingFile parse_splitting(std::string_view text,
                                     const std::filesystem::path& base_dir) {
  std::optional<SplittingKind> kind;
  std::optional<Presentation> a, b;
  std::string stable, name = "G";
  std::vector<std::pair<std::string, std::string>> edge_text;
  std::optional<std::string> phi_text;
  bool nontrivial = false;

  auto load = [&](const std::string& rel) {
    std::filesystem::path p = rel;
    if (p.is_relative()) p = base_dir / p;
    return load_group(p.string()).presentation;
  };
  auto kv = [](const std::string& tok, const std::string& key) -> std::optional<std::string> {
    if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    return std::nullopt;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = detail::trim(line);
    if (l.empty() || l[0] == '#') continue;
    auto toks = detail::split_ws(l);
    const std::string& key = toks[0];
    if (key == "group" && toks.size() == 2) {
      name = toks[1];
    } else if (key == "amalgam" || key == "hnn") {
      if (kind) throw ParseError("duplicate splitting header");
      kind = key == "amalgam" ? SplittingKind::amalgam : SplittingKind::hnn;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (auto v = kv(toks[i], "A"))
          a = load(*v);
        else if (auto v2 = kv(toks[i], "B"); v2 && *kind == SplittingKind::amalgam)
          b = load(*v2);
        else if (auto v3 = kv(toks[i], "stable"); v3 && *kind == SplittingKind::hnn)
          stable = *v3;
        else
          throw ParseError("unexpected token '" + toks[i] + "' in " + key + " line");
      }
    } else if (key == "edge") {
      if (!kind) throw ParseError("edge line before amalgam/hnn header");
      const std::string k1 = *kind == SplittingKind::amalgam ? "inA=" : "inC=";
      const std::string k2 = *kind == SplittingKind::amalgam ? "inB=" : "inD=";
      std::string body(detail::trim(l.substr(4)));
      auto p1 = body.find(k1), p2 = body.find(k2);
      if (p1 == std::string::npos || p2 == std::string::npos || p1 > p2)
        throw ParseError("edge expects " + k1 + "<word> " + k2 + "<word>");
      edge_text.emplace_back(body.substr(p1 + 4, p2 - p1 - 4), body.substr(p2 + 4));
    } else if (key == "nontrivial" && toks.size() == 2 &&
               (toks[1] == "yes" || toks[1] == "no")) {
      nontrivial = toks[1] == "yes";
    } else if (key == "phi") {
      phi_text = std::string(l);
    } else {
      throw ParseError("unknown splitting line '" + std::string(l) + "'");
    }
  }
  if (!kind) throw ParseError("missing amalgam/hnn header");
  if (!a) throw ParseError("missing factor A");
  if (*kind == SplittingKind::amalgam && !b) throw ParseError("missing factor B");
  if (*kind == SplittingKind::hnn && stable.empty()) throw ParseError("missing stable letter");

  std::vector<EdgeGenerator> edges;
  const auto& second_gens = *kind == SplittingKind::amalgam ? b->generators() : a->generators();
  for (const auto& [w1, w2] : edge_text)
    edges.push_back({parse_word(w1, a->generators()), parse_word(w2, second_gens)});

  Splitting s = *kind == SplittingKind::amalgam
                    ? Splitting::amalgam(*a, *b, std::move(edges), nontrivial)
                    : Splitting::hnn(*a, stable, std::move(edges));
  SplittingFile out{std::move(s), std::nullopt, name};
  if (phi_text) {
    // Reuse the group parser against the assembled generator list.
    Presentation g = out.splitting.assembled(name);
    std::string stub = "gen";
    for (const auto& gen : g.generators()) stub += " " + gen;
    stub += "\n" + *phi_text + "\n";
    out.phi = parse_group(stub).phi;
  }
  return out;
}

inline SplittingFile load_splitting(const std::string& path) {
  return parse_splitting(read_text_file(path),
                         std::filesystem::path(path).parent_path());
}

}  // namespace fgk
