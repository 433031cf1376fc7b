// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Line-oriented presentation format:
//
//   group <name>
//   gen <id> <id> ...
//   rel <word>                                  (repeatable)
//   phi <id>=<int> ...                          (optional)
//   peripheral meridian=<word> longitude=<word> (optional)
//   assert irreducible | incompressible         (optional)
//
// Words are whitespace-separated tokens <id>^<int>, with ^1 omissible; the
// empty word is written 1. Blank lines and lines starting with # are ignored.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fgk/errors.hpp"
#include "fgk/presentation.hpp"

namespace fgk {

struct GroupFile {
  Presentation presentation;
  std::optional<ZMap> phi;
  std::optional<Peripheral> peripheral;
  bool irreducible = false;
  bool incompressible = false;

  friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(id[0])) && id[0] != '_')
    return false;
  for (char c : id)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline Int parse_int(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
    digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("expected integer, got '" + std::string(s) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected integer, got '" + std::string(s) + "'");
  Int v{std::string(digits)};
  return s[0] == '-' ? Int(-v) : v;
}

}  // namespace detail

inline Word parse_word(std::string_view text,
                       const std::vector<std::string>& generators) {
  auto tokens = detail::split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "1") return Word();
  std::vector<Syllable> raw;
  for (const auto& tok : tokens) {
    std::string_view t = tok;
    std::string_view id = t;
    Int exp = 1;
    if (auto caret = t.find('^'); caret != std::string_view::npos) {
      id = t.substr(0, caret);
      exp = detail::parse_int(t.substr(caret + 1));
      if (exp == 0) throw ParseError("exponent 0 in token '" + tok + "'");
    }
    GenId g = 0;
    bool found = false;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == id) {
        g = static_cast<GenId>(i);
        found = true;
        break;
      }
    if (!found)
      throw ParseError("undeclared generator '" + std::string(id) + "'");
    raw.push_back({g, exp});
  }
  return Word::reduce(raw);
}

inline std::string format_word(const Word& w,
                               const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generators.at(s.gen);
    if (s.exp != 1) out += "^" + s.exp.str();
  }
  return out;
}

inline GroupFile parse_group(std::string_view text) {
  std::string name = "G";
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> rest;  // keyword, body
  bool have_group = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = detail::trim(line);
    if (l.empty() || l[0] == '#') continue;
    auto sp = l.find_first_of(" \t");
    std::string key(l.substr(0, sp));
    std::string body(sp == std::string_view::npos ? "" : detail::trim(l.substr(sp)));
    if (key == "group") {
      if (have_group) throw ParseError("line " + std::to_string(lineno) + ": duplicate group line");
      if (body.empty() || detail::split_ws(body).size() != 1)
        throw ParseError("line " + std::to_string(lineno) + ": group expects one name");
      name = body;
      have_group = true;
    } else if (key == "gen") {
      for (auto& g : detail::split_ws(body)) {
        if (!detail::valid_identifier(g))
          throw ParseError("line " + std::to_string(lineno) + ": bad generator name '" + g + "'");
        gens.push_back(std::move(g));
      }
    } else if (key == "rel" || key == "phi" || key == "peripheral" ||
               key == "assert") {
      rest.emplace_back(key, body);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + key + "'");
    }
  }

  GroupFile out;
  std::vector<Word> rels;
  for (const auto& [key, body] : rest) {
    if (key == "rel") {
      if (body.empty()) throw ParseError("rel line without a word");
      rels.push_back(parse_word(body, gens));
    } else if (key == "phi") {
      if (out.phi) throw ParseError("duplicate phi line");
      std::vector<std::optional<Int>> vals(gens.size());
      for (const auto& tok : detail::split_ws(body)) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("phi entry '" + tok + "' lacks '='");
        std::string id = tok.substr(0, eq);
        std::size_t g = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (gens[i] == id) g = i;
        if (g == gens.size()) throw ParseError("phi names undeclared generator '" + id + "'");
        if (vals[g]) throw ParseError("phi assigns '" + id + "' twice");
        vals[g] = detail::parse_int(tok.substr(eq + 1));
      }
      std::vector<Int> v;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!vals[i]) throw ParseError("phi missing generator '" + gens[i] + "'");
        v.push_back(*vals[i]);
      }
      out.phi = ZMap(std::move(v));
    } else if (key == "peripheral") {
      if (out.peripheral) throw ParseError("duplicate peripheral line");
      auto m = body.find("meridian=");
      auto l = body.find("longitude=");
      if (m == std::string::npos || l == std::string::npos || m > l)
        throw ParseError("peripheral expects meridian=<word> longitude=<word>");
      std::string mw = body.substr(m + 9, l - m - 9);
      std::string lw = body.substr(l + 10);
      if (detail::trim(mw).empty() || detail::trim(lw).empty())
        throw ParseError("peripheral words may not be blank (write 1 for the empty word)");
      out.peripheral = Peripheral{parse_word(mw, gens), parse_word(lw, gens)};
    } else {
      for (const auto& flag : detail::split_ws(body)) {
        if (flag == "irreducible")
          out.irreducible = true;
        else if (flag == "incompressible")
          out.incompressible = true;
        else
          throw ParseError("unknown assertion '" + flag + "'");
      }
    }
  }
  out.presentation = Presentation(name, std::move(gens), std::move(rels));
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupFile load_group(const std::string& path) {
  return parse_group(read_text_file(path));
}

inline std::string format_group(const GroupFile& f) {
  const auto& p = f.presentation;
  const auto& gens = p.generators();
  std::string out = "group " + p.name() + "\n";
  out += "gen";
  for (const auto& g : gens) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators()) out += "rel " + format_word(r, gens) + "\n";
  if (f.phi) {
    out += "phi";
    for (std::size_t i = 0; i < gens.size(); ++i)
      out += " " + gens[i] + "=" + (*f.phi)[static_cast<GenId>(i)].str();
    out += "\n";
  }
  if (f.peripheral)
    out += "peripheral meridian=" + format_word(f.peripheral->meridian, gens) +
           " longitude=" + format_word(f.peripheral->longitude, gens) + "\n";
  if (f.irreducible) out += "assert irreducible\n";
  if (f.incompressible) out += "assert incompressible\n";
  return out;
}

}  // namespace fgk
