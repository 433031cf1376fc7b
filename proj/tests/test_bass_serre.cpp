// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <queue>
#include <set>

#include "support.hpp"

using namespace fgk;
using namespace fgk::test;

namespace {

Splitting trefoil_splitting() {
  return Splitting::amalgam(P("A", {"x"}, {}), P("B", {"y"}, {}),
                            {{Word(0, 2), Word(0, 3)}}, true);
}

// <x> *_{x^2 = u} <u, y; u y^2 u y^-1>
Splitting ex33_splitting() {
  return Splitting::amalgam(P("A", {"x"}, {}), P("H", {"u", "y"}, {"u y^2 u y^-1"}),
                            {{Word(0, 2), Word(0)}}, true);
}

// Breadth-first reachability over explicitly enumerated residues.
bool connected_oracle(const CosetGraph& g) {
  const long long na = g.a_idx.convert_to<long long>();
  const long long nb = g.b_idx ? g.b_idx->convert_to<long long>() : 0;
  const long long n = na + nb;
  std::vector<std::vector<long long>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges) {
    long long u = e.from.convert_to<long long>();
    long long v = e.to.convert_to<long long>() + (g.b_idx ? na : 0);
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<long long> q;
  q.push(0);
  seen[0] = true;
  long long count = 1;
  while (!q.empty()) {
    long long u = q.front();
    q.pop();
    for (long long v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++count;
        q.push(v);
      }
  }
  return count == n;
}

std::vector<Int> scaled(const std::vector<Int>& v, const Int& k) {
  std::vector<Int> out;
  for (const auto& x : v) out.push_back(x * k);
  return out;
}

Int phi_of(const Word& w, const std::vector<Int>& values) {
  Int total = 0;
  for (const auto& s : w.syllables()) total += values[s.gen] * s.exp;
  return total;
}

}  // namespace

TEST_CASE("kernel indices of the trefoil splitting", "[bass-serre]") {
  const KernelIndices k = kernel_indices(trefoil_splitting(), Z({3, 2}));
  CHECK(k.a_idx == Index::finite(3));
  REQUIRE(k.b_idx);
  CHECK(*k.b_idx == Index::finite(2));
  CHECK(k.c_idx == Index::finite(6));
  CHECK(k.image == 1);
}

TEST_CASE("kernel indices of the descent splitting", "[bass-serre]") {
  // phi(x) = -1, phi(u) = phi(x^2) = -2, phi(y) = 4.
  const KernelIndices k = kernel_indices(ex33_splitting(), Z({-1, -2, 4}));
  CHECK(k.a_idx == Index::finite(1));
  CHECK(*k.b_idx == Index::finite(2));
  CHECK(k.c_idx == Index::finite(2));
}

TEST_CASE("kernel indices of a free group as an HNN extension", "[bass-serre]") {
  const Splitting s = Splitting::hnn(P("A", {"a"}, {}), "t", {});
  const KernelIndices k = kernel_indices(s, Z({0, 1}));
  CHECK_FALSE(k.a_idx.is_finite());
  CHECK_FALSE(k.c_idx.is_finite());
  CHECK(k.a_idx.str() == "inf");
  CHECK_THROWS_WITH(kernel_indices(s, Z({0, 0})), "N = G, indices undefined");
  CHECK_THROWS_AS(kernel_indices(trefoil_splitting(), Z({1, 1})), HypothesisError);
}

TEST_CASE("coset graph of the trefoil splitting", "[bass-serre]") {
  const CosetGraph g = coset_graph(trefoil_splitting(), Z({3, 2}));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
  CHECK(g.euler_characteristic == -1);
  CHECK(g.connected());
  // Explicit residue enumeration: edge k joins k mod 3 and k mod 2.
  std::set<std::pair<int, int>> expected, actual;
  for (int k = 0; k < 6; ++k) expected.insert({k % 3, k % 2});
  for (const auto& e : g.edges) actual.insert({e.from.convert_to<int>(), e.to.convert_to<int>()});
  CHECK(actual == expected);
  CHECK(free_kernel_rank(g, 0, Int(0)) == 2);
}

TEST_CASE("coset graphs that are trees", "[bass-serre]") {
  KernelIndices unit;
  unit.a_idx = Index::finite(1);
  unit.b_idx = Index::finite(1);
  unit.c_idx = Index::finite(1);
  unit.image = 1;
  const CosetGraph g = coset_graph(unit, SplittingKind::amalgam);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.euler_characteristic == 1);
  CHECK(free_kernel_rank(g, 0, Int(0)) == 0);

  const CosetGraph d = coset_graph(ex33_splitting(), Z({-1, -2, 4}));
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 2);
  CHECK(d.euler_characteristic == 1);
  CHECK(d.connected());
}

TEST_CASE("coset graph of an HNN extension", "[bass-serre]") {
  // Z^2 = <a, t; t a t^-1 = a> with phi(a) = 2, phi(t) = 1: a 2-cycle.
  const Splitting s = Splitting::hnn(P("A", {"a"}, {}), "t", {{Word(0), Word(0)}});
  const CosetGraph g = coset_graph(s, Z({2, 1}));
  CHECK(g.a_idx == 2);
  CHECK(g.c_idx == 2);
  CHECK(g.euler_characteristic == 0);
  CHECK(free_kernel_rank(g, 0) == 1);
}

TEST_CASE("infinite coset graph is refused", "[bass-serre]") {
  const Splitting s = Splitting::hnn(P("A", {"a"}, {}), "t", {{Word(0), Word(0, 2)}});
  CHECK_THROWS_WITH(coset_graph(s, Z({0, 1})),
                    Catch::Matchers::ContainsSubstring("graph infinite"));
}

TEST_CASE("free kernel rank formula", "[bass-serre]") {
  using K = SplittingKind;
  CHECK(free_kernel_rank(K::amalgam, 3, Int(2), 6, 0, Int(0)) == 2);
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s) CHECK(free_kernel_rank(K::amalgam, 1, Int(1), 1, r, Int(s)) == r + s);
  CHECK(free_kernel_rank(K::amalgam, 1, Int(2), 2, 0, Int(2)) == 4);
  CHECK(free_kernel_rank(K::hnn, 1, std::nullopt, 1, 3, std::nullopt) == 4);
  CHECK_THROWS_WITH(free_kernel_rank(K::amalgam, 5, Int(5), 1, 0, Int(0)), "premises inconsistent");
  CHECK_THROWS_AS(free_kernel_rank(K::amalgam, 0, Int(1), 1, 0, Int(0)), HypothesisError);
  CHECK_THROWS_AS(free_kernel_rank(K::amalgam, 1, std::nullopt, 1, 0, std::nullopt), HypothesisError);
  CHECK_THROWS_AS(free_kernel_rank(K::hnn, 1, std::nullopt, 1, -1, std::nullopt), HypothesisError);

  const CosetGraph g = coset_graph(trefoil_splitting(), Z({3, 2}));
  CHECK_THROWS_AS(free_kernel_rank(K::amalgam, 3, Int(2), 12, 0, Int(0), &g), HypothesisError);
}

TEST_CASE("splitting constructors validate input", "[bass-serre]") {
  CHECK_THROWS_AS(Splitting::amalgam(P("A", {"x"}, {}), P("B", {"x"}, {}), {}), ParseError);
  CHECK_THROWS_AS(Splitting::hnn(P("A", {"a"}, {}), "a", {}), ParseError);
  CHECK_THROWS_AS(Splitting::amalgam(P("A", {"x"}, {}), P("B", {"y"}, {}), {{Word(1), Word(0)}}),
                  ParseError);
  const Presentation g = trefoil_splitting().assembled("trefoil");
  CHECK(g.generators() == std::vector<std::string>{"x", "y"});
  CHECK(g.relators() == std::vector<Word>{W("x^2 y^-3")});
  const Presentation h =
      Splitting::hnn(P("A", {"a"}, {}), "t", {{Word(0), Word(0, 2)}}).assembled();
  CHECK(h.relators() == std::vector<Word>{parse_word("t a t^-1 a^-2", {"a", "t"})});
}

TEST_CASE("splitting files", "[bass-serre][format]") {
  const auto dir = std::filesystem::temp_directory_path() / "fgk_test_splitting";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "cx.grp") << "group cx\ngen x\n";
  std::ofstream(dir / "cy.grp") << "group cy\ngen y\n";
  std::ofstream(dir / "ca.grp") << "group ca\ngen a\n";

  const SplittingFile f = parse_splitting(
      "group trefoil\namalgam A=cx.grp B=cy.grp\nedge inA=x^2 inB=y^3\nnontrivial yes\n", dir);
  CHECK(f.name == "trefoil");
  CHECK(f.splitting.kind() == SplittingKind::amalgam);
  CHECK(f.splitting.nontrivial());
  CHECK(f.splitting.edges().size() == 1);
  CHECK_FALSE(f.phi);

  const SplittingFile h =
      parse_splitting("hnn A=ca.grp stable=t\nedge inC=a inD=a\nphi a=1 t=0\n", dir);
  CHECK(h.splitting.kind() == SplittingKind::hnn);
  CHECK(h.splitting.stable_letter() == "t");
  REQUIRE(h.phi);
  CHECK(*h.phi == Z({1, 0}));

  CHECK_THROWS_AS(parse_splitting("edge inA=x inB=y\n", dir), ParseError);
  CHECK_THROWS_AS(parse_splitting("amalgam A=cx.grp\n", dir), ParseError);
  CHECK_THROWS_AS(parse_splitting("hnn A=ca.grp\n", dir), ParseError);
  CHECK_THROWS_AS(parse_splitting("amalgam A=cx.grp B=cy.grp\nedge inB=y inA=x\n", dir),
                  ParseError);
  CHECK_THROWS_AS(parse_splitting("amalgam A=cx.grp B=cy.grp\nwat\n", dir), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("free group consistency between HNN and amalgam", "[bass-serre]") {
  // F2 = <a> * <t> = HNN of <a> over the trivial group.
  const Splitting as_amalgam = Splitting::amalgam(P("A", {"a"}, {}), P("B", {"t"}, {}), {});
  const Splitting as_hnn = Splitting::hnn(P("A", {"a"}, {}), "t", {});
  const KernelIndices ka = kernel_indices(as_amalgam, Z({0, 1}));
  const KernelIndices kh = kernel_indices(as_hnn, Z({0, 1}));
  CHECK_FALSE(ka.a_idx.is_finite());
  CHECK_FALSE(kh.a_idx.is_finite());
  CHECK(ka.c_idx == kh.c_idx);
  CHECK_FALSE(ka.all_finite());
  CHECK_FALSE(kh.all_finite());

  // phi(a) = phi(t) = 1: the kernel is free of infinite rank in both readings.
  const KernelIndices ka1 = kernel_indices(as_amalgam, Z({1, 1}));
  const KernelIndices kh1 = kernel_indices(as_hnn, Z({1, 1}));
  CHECK(ka1.a_idx == kh1.a_idx);
  CHECK_FALSE(ka1.c_idx.is_finite());
  CHECK_FALSE(kh1.c_idx.is_finite());
}

TEST_CASE("property: random amalgams give connected graphs with rank 1 - chi",
          "[bass-serre][property]") {
  Rng rng(31);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t na = static_cast<std::size_t>(uniform(rng, 1, 2));
    const std::size_t nb = static_cast<std::size_t>(uniform(rng, 1, 2));
    std::vector<std::string> ga, gb;
    for (std::size_t i = 0; i < na; ++i) ga.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < nb; ++i) gb.push_back("b" + std::to_string(i));
    const Word w = random_word(rng, na, 3, 4), v = random_word(rng, nb, 3, 4);
    std::vector<Int> pa, pb;
    for (std::size_t i = 0; i < na; ++i) pa.emplace_back(uniform(rng, -6, 6));
    for (std::size_t i = 0; i < nb; ++i) pb.emplace_back(uniform(rng, -6, 6));
    const Int fw = phi_of(w, pa), fv = phi_of(v, pb);
    if (fw == 0 || fv == 0) continue;
    pa = scaled(pa, fv);
    pb = scaled(pb, fw);
    std::vector<EdgeGenerator> edges{{w, v}};
    if (uniform(rng, 0, 1) == 1) edges.push_back({w.pow(2), v.pow(2)});
    const Splitting s = Splitting::amalgam(Presentation("A", ga, {}), Presentation("B", gb, {}),
                                           edges);
    std::vector<Int> phi = pa;
    phi.insert(phi.end(), pb.begin(), pb.end());
    const KernelIndices k = kernel_indices(s, ZMap(phi));
    REQUIRE(k.all_finite());
    const Int a = k.a_idx.value(), b = k.b_idx->value(), c = k.c_idx.value();
    CHECK(c % a == 0);
    CHECK(c % b == 0);
    CHECK(gcd(a, b) == 1);
    if (c > 5000) continue;
    const CosetGraph g = coset_graph(k, SplittingKind::amalgam);
    CHECK(g.connected());
    CHECK(connected_oracle(g));
    CHECK(g.euler_characteristic == a + b - c);
    CHECK(free_kernel_rank(g, 0, Int(0)) == 1 - g.euler_characteristic);
    ++checked;
  }
}

TEST_CASE("property: random HNN extensions give connected graphs with rank 1 - chi",
          "[bass-serre][property]") {
  Rng rng(32);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t na = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<std::string> ga;
    for (std::size_t i = 0; i < na; ++i) ga.push_back("a" + std::to_string(i));
    const Word w = random_word(rng, na, 3, 4), v = random_word(rng, na, 3, 4);
    std::vector<Int> pa;
    for (std::size_t i = 0; i < na; ++i) pa.emplace_back(uniform(rng, -6, 6));
    // Only phi(w) = phi(v) is required; retry until the pair is compatible.
    if (phi_of(w, pa) != phi_of(v, pa) || phi_of(w, pa) == 0) continue;
    std::vector<Int> phi = pa;
    phi.emplace_back(uniform(rng, -6, 6));
    const Splitting s = Splitting::hnn(Presentation("A", ga, {}), "t", {{w, v}});
    const KernelIndices k = kernel_indices(s, ZMap(phi));
    REQUIRE(k.all_finite());
    const Int a = k.a_idx.value(), c = k.c_idx.value();
    CHECK(c % a == 0);
    if (c > 5000) continue;
    const CosetGraph g = coset_graph(k, SplittingKind::hnn);
    CHECK(g.connected());
    CHECK(connected_oracle(g));
    CHECK(g.euler_characteristic == a - c);
    CHECK(free_kernel_rank(g, 0) == 1 - g.euler_characteristic);
    ++checked;
  }
}
