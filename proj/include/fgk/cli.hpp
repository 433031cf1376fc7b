// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line driver. run() never exits the process; it returns
//   0 success, 1 parse or usage error, 2 hypothesis violation,
//   3 inference contradiction.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fgk/abelian.hpp"
#include "fgk/coset_graph.hpp"
#include "fgk/errors.hpp"
#include "fgk/format.hpp"
#include "fgk/fox.hpp"
#include "fgk/inference.hpp"
#include "fgk/link.hpp"
#include "fgk/one_relator.hpp"
#include "fgk/report.hpp"
#include "fgk/splitting.hpp"

namespace fgk::cli {

namespace detail {

inline void kv(std::ostream& out, std::string_view key, const std::string& value) {
  out << key << " = " << value << '\n';
}

/// The file's phi, else the canonical map of a two-generator one-relator
/// group, else the abelianization map.
inline ZMap resolve_phi(const GroupFile& f) {
  if (f.phi) {
    if (!zmap_validate(*f.phi, f.presentation))
      throw HypothesisError("phi does not kill every relator");
    return *f.phi;
  }
  if (f.presentation.is_two_generator_one_relator()) return canonical_zmap(f.presentation);
  return abelian_zmap(f.presentation);
}

inline std::string format_zmap(const ZMap& phi, const std::vector<std::string>& gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ' ';
    s += gens[i] + "=" + phi[static_cast<GenId>(i)].str();
  }
  return s;
}

inline void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
  kv(out, "wrote", path);
}

inline void cmd_abelianize(const std::string& file, std::ostream& out) {
  const GroupFile f = load_group(file);
  const auto ab = abelianize(f.presentation);
  kv(out, "abelianization", ab.describe());
  kv(out, "free_rank", std::to_string(ab.free_rank));
  std::string tors;
  for (const auto& d : ab.torsion) tors += (tors.empty() ? "" : " ") + d.str();
  kv(out, "torsion", tors.empty() ? "none" : tors);
}

inline void cmd_phi(const std::string& file, std::ostream& out) {
  const GroupFile f = load_group(file);
  const auto& p = f.presentation;
  if (p.is_two_generator_one_relator()) {
    auto [ps, qs] = exponent_sums(p);
    kv(out, "p", ps.str());
    kv(out, "q", qs.str());
    const Int m = torsion_number(p);
    kv(out, "m", m.str());
    kv(out, "a", Int(ps / m).str());
    kv(out, "b", Int(qs / m).str());
    kv(out, "phi", format_zmap(canonical_zmap(p), p.generators()));
  } else {
    kv(out, "phi", format_zmap(abelian_zmap(p), p.generators()));
  }
}

inline void cmd_analyze(const std::string& file, std::ostream& out) {
  const GroupFile f = load_group(file);
  const auto& p = f.presentation;
  if (!p.is_two_generator_one_relator())
    throw HypothesisError("expected a two-generator one-relator presentation");
  const Word r = cyclic_reduce(p.relators()[0]);
  const RelatorAnalysis a = analyze(r);
  kv(out, "relator", format_word(r, p.generators()));
  kv(out, "p", a.p.str());
  kv(out, "q", a.q.str());
  kv(out, "m", a.m.str());
  kv(out, "a", a.a.str());
  kv(out, "b", a.b.str());
  kv(out, "e", a.e.str());
  if (a.e > 1) {
    const Presentation h = descend(Presentation(p.name(), p.generators(), {r}), a.e);
    kv(out, "descended", format_word(h.relators()[0], h.generators()));
  }
}

inline void cmd_fiber_rank(const std::string& file, const std::vector<std::string>& hints,
                           std::ostream& out) {
  const GroupFile f = load_group(file);
  const FiberRankResult res = fiber_rank(f.presentation, hints);
  for (const auto& t : res.trace) kv(out, "step", t);
  kv(out, "rank", res.rank ? res.rank->str() : "unknown");
}

inline void cmd_alexander(const std::string& file, std::ostream& out) {
  const GroupFile f = load_group(file);
  const LaurentPoly d = alexander_poly(f.presentation, resolve_phi(f));
  kv(out, "alexander", d.str());
  kv(out, "degree", std::to_string(d.span()));
  kv(out, "monic", is_monic(d) ? "yes" : "no");
}

inline ZMap splitting_phi(const SplittingFile& s) {
  if (s.phi) return *s.phi;
  return abelian_zmap(s.splitting.assembled(s.name));
}

inline void print_indices(const KernelIndices& k, SplittingKind kind, std::ostream& out) {
  kv(out, "kind", kind == SplittingKind::amalgam ? "amalgam" : "hnn");
  kv(out, "a_idx", k.a_idx.str());
  if (k.b_idx) kv(out, "b_idx", k.b_idx->str());
  kv(out, "c_idx", k.c_idx.str());
  if (kind == SplittingKind::hnn) kv(out, "stable", k.stable_value.str());
}

inline void cmd_graph(const std::string& file, std::ostream& out) {
  const SplittingFile s = load_splitting(file);
  const KernelIndices k = kernel_indices(s.splitting, splitting_phi(s));
  print_indices(k, s.splitting.kind(), out);
  const CosetGraph g = coset_graph(k, s.splitting.kind());
  kv(out, "vertices", g.vertex_count().str());
  kv(out, "edges", g.edge_count().str());
  const char* second = g.kind == SplittingKind::amalgam ? "B" : "A";
  for (const auto& e : g.edges)
    kv(out, "edge", e.label.str() + ": A" + e.from.str() + " - " + second + e.to.str());
  kv(out, "chi", g.euler_characteristic.str());
  kv(out, "connected", g.connected() ? "yes" : "no");
}

inline void cmd_rank(const std::string& file, const Int& rank_a, const std::optional<Int>& rank_b,
                     std::ostream& out) {
  const SplittingFile s = load_splitting(file);
  const KernelIndices k = kernel_indices(s.splitting, splitting_phi(s));
  print_indices(k, s.splitting.kind(), out);
  const CosetGraph g = coset_graph(k, s.splitting.kind());
  if (g.kind == SplittingKind::amalgam && !rank_b)
    throw HypothesisError("amalgam requires --rank-b");
  kv(out, "chi", g.euler_characteristic.str());
  kv(out, "rank", free_kernel_rank(g, rank_a, rank_b).str());
}

inline void cmd_infer(const std::vector<std::string>& premises, bool hnn, bool nontrivial,
                      bool c_free_abelian, std::ostream& out) {
  InferenceContext ctx{hnn ? SplittingKind::hnn : SplittingKind::amalgam, nontrivial,
                       c_free_abelian};
  FactFlags flags{};
  for (const auto& p : premises) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("premise '" + p + "' lacks '='");
    auto f = parse_fact(p.substr(0, eq));
    if (!f) throw ParseError("unknown fact '" + p.substr(0, eq) + "'");
    const std::string v = p.substr(eq + 1);
    Tri t;
    if (v == "yes")
      t = Tri::yes;
    else if (v == "no")
      t = Tri::no;
    else if (v == "unknown")
      t = Tri::unknown;
    else
      throw ParseError("fact value must be yes, no or unknown, got '" + v + "'");
    flags[static_cast<std::size_t>(*f)] = t;
  }
  const FgConclusions c = fg_inference(ctx, flags);
  for (std::size_t i = 0; i < kFactCount; ++i) {
    const Tri t = c.flags[i];
    kv(out, kFactNames[i], t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown");
  }
  auto lit = [](const Literal& l) {
    return std::string(fact_name(l.fact)) + (l.value ? "=yes" : "=no");
  };
  for (const auto& d : c.disjunctions)
    kv(out, "disjunction", lit(d.first) + " or " + lit(d.second));
  for (const auto& t : c.trace) kv(out, "derived", t);
}

inline std::string splice_text(const std::string& file1, const std::string& file2,
                               PhiPolicy policy) {
  const KnotGroupData k1 = knot_data(load_group(file1));
  const KnotGroupData k2 = knot_data(load_group(file2));
  const SpliceResult s = splice(k1, k2, policy);
  std::string text = "# fibered_splice = ";
  text += k1.incompressible && k2.incompressible ? "fibered iff both inputs are fibered"
                                                 : "not applicable";
  text += "\n";
  return text + format_group(GroupFile{s.presentation, s.phi, std::nullopt, false, false});
}

inline std::string cable_text(const std::string& file, const Int& p, const Int& q,
                              bool peripheral) {
  const KnotGroupData k = knot_data(load_group(file));
  return format_group(group_file(cable_group(k, p, q, peripheral)));
}

inline void cmd_report(const std::string& file, const std::vector<std::string>& hints,
                       std::ostream& out) {
  const GroupFile f = load_group(file);
  out << stallings_report(f.presentation, resolve_phi(f), hints).render();
}

}  // namespace detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Example corpus: group and splitting files, then golden outputs of
/// CLI invocations on them. Returned in write order as (file name, content).
inline std::vector<std::pair<std::string, std::string>> corpus_files(
    const std::filesystem::path& dir);

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finitely presented groups, splittings and fibered knot tests", "fgk"};
  app.require_subcommand(1);

  std::string file, file2, output;
  std::vector<std::string> hints, premises;
  bool hnn = false, nontrivial = false, c_free_abelian = false;
  bool rescale_phi = false, drop_phi = false, peripheral = false;
  std::string rank_a_text = "0", rank_b_text, p_text, q_text;
  std::string corpus_dir = "corpus";

  auto add_file = [&](CLI::App* c, std::string& target, const char* name) {
    c->add_option(name, target, "input file")->required();
  };
  auto add_hints = [&](CLI::App* c) {
    c->add_option("--nielsen", hints, "Nielsen move such as \"u->u y\"; repeat to chain")
        ->allow_extra_args(false);
  };

  auto* c_ab = app.add_subcommand("abelianize", "abelianization via Smith normal form");
  add_file(c_ab, file, "file");
  auto* c_phi = app.add_subcommand("phi", "exponent sums and the canonical map onto Z");
  add_file(c_phi, file, "file");
  auto* c_an = app.add_subcommand("analyze", "exponent sums, torsion number and descent exponent");
  add_file(c_an, file, "file");
  auto* c_fr = app.add_subcommand("fiber-rank", "rank of the free kernel of a one-relator group");
  add_file(c_fr, file, "file");
  add_hints(c_fr);
  auto* c_alex = app.add_subcommand("alexander", "Alexander polynomial by Fox calculus");
  add_file(c_alex, file, "file");
  auto* c_graph = app.add_subcommand("graph", "coset graph of the kernel in a splitting");
  add_file(c_graph, file, "splitting");
  auto* c_inf = app.add_subcommand("infer", "closure of finite-generation facts");
  c_inf->add_option("premises", premises, "fact=yes|no|unknown");
  c_inf->add_flag("--hnn", hnn, "HNN extension instead of an amalgam");
  c_inf->add_flag("--nontrivial", nontrivial, "assert A != C != B");
  c_inf->add_flag("--c-free-abelian", c_free_abelian, "assert C free abelian of finite rank");
  auto* c_rank = app.add_subcommand("rank", "rank of the kernel from vertex ranks");
  add_file(c_rank, file, "splitting");
  c_rank->add_option("--rank-a", rank_a_text, "rank of N meet A");
  c_rank->add_option("--rank-b", rank_b_text, "rank of N meet B");
  auto* c_splice = app.add_subcommand("splice", "splice two knot groups");
  add_file(c_splice, file, "first");
  add_file(c_splice, file2, "second");
  auto* o_rescale = c_splice->add_flag("--rescale-phi", rescale_phi,
                                       "rescale the classes until they agree");
  c_splice->add_flag("--drop-phi", drop_phi, "emit no class")->excludes(o_rescale);
  c_splice->add_option("-o,--output", output, "output path");
  auto* c_cable = app.add_subcommand("cable", "(p, q)-cable of a knot group");
  add_file(c_cable, file, "file");
  c_cable->add_option("-p", p_text, "longitudinal winding")->required();
  c_cable->add_option("-q", q_text, "meridional winding")->required();
  c_cable->add_flag("--peripheral", peripheral, "emit the cable's meridian and longitude");
  c_cable->add_option("-o,--output", output, "output path");
  auto* c_rep = app.add_subcommand("report", "evidence for or against fibering");
  add_file(c_rep, file, "file");
  add_hints(c_rep);
  auto* c_corpus = app.add_subcommand("corpus", "regenerate the example corpus");
  c_corpus->add_option("dir", corpus_dir, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*c_ab) {
      detail::cmd_abelianize(file, out);
    } else if (*c_phi) {
      detail::cmd_phi(file, out);
    } else if (*c_an) {
      detail::cmd_analyze(file, out);
    } else if (*c_fr) {
      detail::cmd_fiber_rank(file, hints, out);
    } else if (*c_alex) {
      detail::cmd_alexander(file, out);
    } else if (*c_graph) {
      detail::cmd_graph(file, out);
    } else if (*c_inf) {
      detail::cmd_infer(premises, hnn, nontrivial, c_free_abelian, out);
    } else if (*c_rank) {
      std::optional<Int> rb;
      if (!rank_b_text.empty()) rb = fgk::detail::parse_int(rank_b_text);
      detail::cmd_rank(file, fgk::detail::parse_int(rank_a_text), rb, out);
    } else if (*c_splice) {
      const PhiPolicy policy = rescale_phi ? PhiPolicy::rescale
                               : drop_phi  ? PhiPolicy::drop
                                           : PhiPolicy::exact;
      detail::emit(out, detail::splice_text(file, file2, policy), output);
    } else if (*c_cable) {
      detail::emit(out,
                   detail::cable_text(file, fgk::detail::parse_int(p_text),
                                      fgk::detail::parse_int(q_text), peripheral),
                   output);
    } else if (*c_rep) {
      detail::cmd_report(file, hints, out);
    } else if (*c_corpus) {
      std::filesystem::create_directories(corpus_dir);
      for (const auto& [name, text] : corpus_files(corpus_dir)) {
        const auto path = std::filesystem::path(corpus_dir) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + path.string() + "'");
        f << text;
        detail::kv(out, "wrote", name);
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ContradictionError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

namespace detail {

struct GoldenRun {
  std::string name;
  std::vector<std::string> args;  // file arguments are corpus-relative
};

inline const std::vector<std::pair<std::string, std::string>>& corpus_sources() {
  static const std::vector<std::pair<std::string, std::string>> files = {
      {"unknot.grp",
       "group unknot\ngen u\nphi u=1\nperipheral meridian=u longitude=1\n"},
      {"ex33.grp", "group ex33\ngen x y\nrel x^2 y^2 x^2 y^-1\nphi x=-1 y=4\n"},
      {"empty.grp", "group empty\ngen x\n"},
      {"commutator.grp", "group commutator\ngen x y\nrel x y x^-1 y^-1\nphi x=1 y=0\n"},
      {"cx.grp", "group cx\ngen x\n"},
      {"cy.grp", "group cy\ngen y\n"},
      {"ca.grp", "group ca\ngen a\n"},
      {"ex33_h.grp", "group ex33_h\ngen u y\nrel u y^2 u y^-1\n"},
      {"trefoil_split.spl",
       "group trefoil\namalgam A=cx.grp B=cy.grp\nedge inA=x^2 inB=y^3\nnontrivial yes\n"
       "phi x=3 y=2\n"},
      {"ex33_split.spl",
       "group ex33\namalgam A=cx.grp B=ex33_h.grp\nedge inA=x^2 inB=u\nnontrivial yes\n"
       "phi x=-1 u=-2 y=4\n"},
      {"z2_hnn.spl", "group z2\nhnn A=ca.grp stable=t\nedge inC=a inD=a\nphi a=1 t=0\n"},
      {"bs12_hnn.spl", "group bs12\nhnn A=ca.grp stable=t\nedge inC=a inD=a^2\nphi a=0 t=1\n"},
  };
  return files;
}

inline const std::vector<GoldenRun>& golden_runs() {
  static const std::vector<GoldenRun> runs = {
      {"empty.abelianize.out", {"abelianize", "empty.grp"}},
      {"unknot.abelianize.out", {"abelianize", "unknot.grp"}},
      {"trefoil.abelianize.out", {"abelianize", "trefoil.grp"}},
      {"ex33.abelianize.out", {"abelianize", "ex33.grp"}},
      {"commutator.abelianize.out", {"abelianize", "commutator.grp"}},
      {"splice_trefoil_trefoil.abelianize.out", {"abelianize", "splice_trefoil_trefoil.grp"}},
      {"splice_trefoil_t25.abelianize.out", {"abelianize", "splice_trefoil_t25.grp"}},
      {"ex33.phi.out", {"phi", "ex33.grp"}},
      {"trefoil.phi.out", {"phi", "trefoil.grp"}},
      {"commutator.phi.out", {"phi", "commutator.grp"}},
      {"ex33.analyze.out", {"analyze", "ex33.grp"}},
      {"ex33_h.analyze.out", {"analyze", "ex33_h.grp"}},
      {"ex33.fiber-rank.out", {"fiber-rank", "ex33.grp", "--nielsen", "u->u y"}},
      {"ex33_nohint.fiber-rank.out", {"fiber-rank", "ex33.grp"}},
      {"trefoil.fiber-rank.out", {"fiber-rank", "trefoil.grp"}},
      {"unknot.alexander.out", {"alexander", "unknot.grp"}},
      {"empty.alexander.out", {"alexander", "empty.grp"}},
      {"trefoil.alexander.out", {"alexander", "trefoil.grp"}},
      {"t25.alexander.out", {"alexander", "t25.grp"}},
      {"t34.alexander.out", {"alexander", "t34.grp"}},
      {"ex33.alexander.out", {"alexander", "ex33.grp"}},
      {"trefoil_split.graph.out", {"graph", "trefoil_split.spl"}},
      {"ex33_split.graph.out", {"graph", "ex33_split.spl"}},
      {"z2_hnn.graph.out", {"graph", "z2_hnn.spl"}},
      {"bs12_hnn.graph.out", {"graph", "bs12_hnn.spl"}},
      {"trefoil_split.rank.out", {"rank", "trefoil_split.spl", "--rank-a", "0", "--rank-b", "0"}},
      {"ex33_split.rank.out", {"rank", "ex33_split.spl", "--rank-a", "0", "--rank-b", "2"}},
      {"z2_hnn.rank.out", {"rank", "z2_hnn.spl", "--rank-a", "0"}},
      {"nontrivial_amalgam.infer.out", {"infer", "--nontrivial", "n_fg=yes", "n_in_c=no"}},
      {"free_kernel.infer.out",
       {"infer", "--nontrivial", "n_cap_c_trivial=yes", "n_in_c=no", "n_cap_a_free=yes",
        "n_cap_b_free=yes", "nc_finite_index=yes", "n_cap_a_fg=yes", "n_cap_b_fg=yes"}},
      {"trefoil.report.out", {"report", "trefoil.grp"}},
      {"t25.report.out", {"report", "t25.grp"}},
      {"ex33.report.out", {"report", "ex33.grp", "--nielsen", "u->u y"}},
      {"commutator.report.out", {"report", "commutator.grp"}},
      {"remark43.abelianize.out", {"abelianize", "remark43.grp"}},
      {"remark43.report.out", {"report", "remark43.grp"}},
  };
  return runs;
}

inline std::string set_name(const std::string& group_text, const std::string& name) {
  GroupFile f = parse_group(group_text);
  f.presentation = f.presentation.renamed(name);
  return format_group(f);
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> corpus_files(
    const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::string>> files = detail::corpus_sources();
  // Derived inputs are produced by the CLI itself and written before the
  // golden runs read them.
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + (dir / name).string() + "'");
    f << text;
  };
  for (const auto& [name, text] : files) write(name, text);
  auto path = [&](const std::string& name) { return (dir / name).string(); };
  auto derive = [&](const std::string& name, std::string text) {
    write(name, text);
    files.emplace_back(name, std::move(text));
  };

  auto with_flags = [](std::string text) { return text + "assert irreducible incompressible\n"; };
  derive("trefoil.grp",
         with_flags(detail::set_name(detail::cable_text(path("unknot.grp"), 2, 3, true), "trefoil")));
  derive("t25.grp",
         with_flags(detail::set_name(detail::cable_text(path("unknot.grp"), 2, 5, true), "t25")));
  derive("t34.grp",
         with_flags(detail::set_name(detail::cable_text(path("unknot.grp"), 3, 4, true), "t34")));
  derive("splice_trefoil_trefoil.grp",
         detail::splice_text(path("trefoil.grp"), path("trefoil.grp"), PhiPolicy::drop));
  derive("splice_trefoil_t25.grp",
         detail::splice_text(path("trefoil.grp"), path("t25.grp"), PhiPolicy::drop));
  // A fibered knot spliced with an unknot in a ball.
  derive("remark43.grp",
         detail::splice_text(path("trefoil.grp"), path("unknot.grp"), PhiPolicy::drop));

  for (const auto& run_spec : detail::golden_runs()) {
    std::vector<std::string> args;
    for (const auto& a : run_spec.args) {
      const bool is_file = a.ends_with(".grp") || a.ends_with(".spl");
      args.push_back(is_file ? path(a) : a);
    }
    std::ostringstream out, err;
    const int code = run(args, out, err);
    std::string text = out.str() + err.str();
    if (code != 0) text += "exit = " + std::to_string(code) + "\n";
    // Paths are printed relative to the corpus so goldens do not depend on it.
    const std::string prefix = dir.string() + "/";
    for (std::size_t pos; (pos = text.find(prefix)) != std::string::npos;)
      text.erase(pos, prefix.size());
    files.emplace_back(run_spec.name, std::move(text));
  }
  return files;
}

}  // namespace fgk::cli
