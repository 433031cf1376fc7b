// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace fgk;
using namespace fgk::test;

namespace {

const Presentation kEx33 = P("ex33", {"x", "y"}, {"x^2 y^2 x^2 y^-1"});

Assignment random_automorphism(Rng& rng, int moves) {
  Assignment a{{0, Word(0)}, {1, Word(1)}};
  for (int i = 0; i < moves; ++i) {
    const GenId g = static_cast<GenId>(uniform(rng, 0, 1)), h = 1 - g;
    const int sign = uniform(rng, 0, 1) ? 1 : -1;
    Assignment move{{g, Word(g)}, {h, Word(h)}};
    switch (uniform(rng, 0, 2)) {
      case 0:
        move[g] = Word(g) * Word(h, sign);
        break;
      case 1:
        move[g] = Word(h, sign) * Word(g);
        break;
      default:
        move[g] = Word(g, -1);
        break;
    }
    a = compose(a, move);
  }
  return a;
}

}  // namespace

TEST_CASE("relator analysis", "[one-relator]") {
  const RelatorAnalysis r = analyze(W("x^2 y^2 x^2 y^-1"));
  CHECK(r == RelatorAnalysis{4, 1, 1, 4, 1, 2});
  CHECK(analyze(W("u^2 y^3", kUY)) == RelatorAnalysis{2, 3, 1, 2, 3, 2});
  CHECK(analyze(W("y^5")) == RelatorAnalysis{0, 5, 5, 0, 1, 1});
  // Conjugates are cyclically reduced first.
  CHECK(analyze(W("y x^2 y^-3 y^-1")) == analyze(W("x^2 y^-3")));
  CHECK_THROWS_WITH(analyze(W("x y x^-1 y^-1")),
                    Catch::Matchers::ContainsSubstring("hypothesis violated"));
  CHECK_THROWS_AS(analyze(W("x^3")), HypothesisError);
}

TEST_CASE("descent divides x-exponents", "[one-relator]") {
  CHECK(descend(W("x^2 y^2 x^2 y^-1"), 2) == W("x y^2 x y^-1"));
  CHECK(descend(W("u^2 y^3", kUY), 2) == W("u y^3", kUY));
  CHECK(descend(W("x y"), 1) == W("x y"));
  CHECK_THROWS_AS(descend(W("x^3 y"), 2), HypothesisError);
  CHECK_THROWS_AS(descend(W("x y"), 0), HypothesisError);

  const Presentation h = descend(kEx33, 2);
  CHECK(h.generators() == std::vector<std::string>{"u", "y"});
  CHECK(format_word(h.relators()[0], h.generators()) == "u y^2 u y^-1");
  const Presentation h2 = descend(P("h", {"u", "y"}, {"u^2 y^3"}), 2);
  CHECK(h2.generators() == std::vector<std::string>{"v", "y"});
  CHECK(format_word(h2.relators()[0], h2.generators()) == "v y^3");
}

TEST_CASE("rank transfer", "[one-relator]") {
  CHECK(rank_transfer(2, 4, 1, 2) == 4);
  CHECK(rank_transfer(0, 2, 3, 2) == 2);
  for (int l = 0; l < 6; ++l) CHECK(rank_transfer(l, 7, -3, 1) == l);
  CHECK_THROWS_WITH(rank_transfer(-1, 1, 1, 1), Catch::Matchers::ContainsSubstring("inconsistent input"));
  CHECK_THROWS_AS(rank_transfer(0, 2, 4, 2), HypothesisError);
  CHECK_THROWS_AS(rank_transfer(0, 1, 0, 2), HypothesisError);
  CHECK_THROWS_AS(rank_transfer(0, 1, 1, 0), HypothesisError);
  // gcd(a, e) <= e and |b| >= 1 keep the result nonnegative; l = 0 reaches 0.
  CHECK(rank_transfer(0, 2, 1, 2) == 0);
  CHECK(rank_transfer(0, 9, 1, 3) == 0);
}

TEST_CASE("rank transfer agrees with the descent splitting", "[one-relator]") {
  // [G:NA] = |b|, [G:NB] = (a, e), [G:NC] = |b| e.
  const Splitting s = descent_splitting(kEx33, 2);
  const CosetGraph g = coset_graph(s, Z({-1, -2, 4}));
  CHECK(g.a_idx == 1);
  CHECK(*g.b_idx == 2);
  CHECK(g.c_idx == 2);
  CHECK(free_kernel_rank(g, 0, Int(2)) == rank_transfer(2, 4, 1, 2));
}

TEST_CASE("fiber rank of the worked example", "[one-relator]") {
  const FiberRankResult r = fiber_rank(kEx33, {"u->u y"});
  REQUIRE(r.rank);
  CHECK(*r.rank == 4);
  const FiberRankResult h = fiber_rank(P("h", {"u", "y"}, {"u^2 y^3"}));
  REQUIRE(h.rank);
  CHECK(*h.rank == 2);
  CHECK(fiber_rank(descend(kEx33, 2), {"u->u y"}).rank == Int(2));
  CHECK(fiber_rank(P("c", {"v", "y"}, {"v y^3"})).rank == Int(0));
  CHECK(fiber_rank(P("t", {"u", "y"}, {"u^2 y^-3"})).rank == Int(2));
}

TEST_CASE("fiber rank without hints is unknown", "[one-relator]") {
  const FiberRankResult r = fiber_rank(kEx33);
  CHECK_FALSE(r.rank);
  CHECK(r.trace.back().find("no rule applies") != std::string::npos);
  CHECK_FALSE(fiber_rank(P("g", {"x", "y"}, {"y^3"})).rank);
  CHECK(fiber_rank(P("g", {"x", "y"}, {"y"})).rank == Int(0));
}

TEST_CASE("fiber rank errors", "[one-relator]") {
  CHECK_THROWS_AS(fiber_rank(kEx33, {"u->u^2"}), HypothesisError);
  CHECK_THROWS_AS(fiber_rank(kEx33, {"u->u y u^-1 y^-1"}), HypothesisError);
  CHECK_THROWS_AS(fiber_rank(kEx33, {"x->x y"}), ParseError);
  CHECK_THROWS_AS(fiber_rank(P("g", {"x", "y", "z"}, {"x"})), HypothesisError);
  CHECK_THROWS_AS(fiber_rank(P("g", {"x", "y"}, {"x y x^-1 y^-1"})), HypothesisError);
}

TEST_CASE("nielsen hints parse and invert", "[one-relator][nielsen]") {
  const Presentation h = descend(kEx33, 2);
  const Assignment a = parse_nielsen("u->u y", h);
  CHECK(format_assignment(a, h.generators()) == "u->u y");
  const Assignment inv = inverse_automorphism(a, 2);
  CHECK(substitute(substitute(Word(0), a), inv) == Word(0));
  CHECK(parse_nielsen("u->y, y->u", h).size() == 2);
  CHECK_THROWS_AS(parse_nielsen("u", h), ParseError);
  CHECK_THROWS_AS(parse_nielsen("u->u, u->y", h), ParseError);
  CHECK_THROWS_AS(parse_nielsen("u->", h), ParseError);
}

TEST_CASE("property: torus-type relators", "[one-relator][property]") {
  for (long long alpha = 1; alpha <= 9; ++alpha)
    for (long long beta = 1; beta <= 9; ++beta) {
      if (gcd(Int(alpha), Int(beta)) != 1) continue;
      const Presentation g("t", {"u", "y"}, {Word(0, alpha) * Word(1, -beta)});
      const auto r = fiber_rank(g);
      REQUIRE(r.rank);
      CHECK(*r.rank == (alpha - 1) * (beta - 1));
      const Splitting s = Splitting::amalgam(P("A", {"u"}, {}), P("B", {"y"}, {}),
                                             {{Word(0, alpha), Word(0, beta)}});
      const CosetGraph graph = coset_graph(s, Z({beta, alpha}));
      CHECK(*r.rank == 1 - graph.euler_characteristic);
    }
}

TEST_CASE("property: descent lifting law", "[one-relator][property]") {
  Rng rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const Int e = uniform(rng, 1, 4);
    auto raw = random_syllables(rng, 2, static_cast<std::size_t>(uniform(rng, 1, 8)));
    for (auto& s : raw)
      if (s.gen == 0) s.exp *= e;
    const Word r = Word::reduce(raw);
    if (exponent_sum(r, 1) == 0) continue;
    const Word s = descend(r, e);
    CHECK(exponent_sum(r, 0) == e * exponent_sum(s, 0));
    CHECK(exponent_sum(r, 1) == exponent_sum(s, 1));
    const RelatorAnalysis ar = analyze(r), as = analyze(s);
    CHECK(ar.q == as.q);
    CHECK(ar.p == e * as.p);
    bool has_x = false;
    for (const auto& syl : cyclic_reduce(r).syllables()) has_x = has_x || syl.gen == 0;
    if (has_x) CHECK(ar.e % e == 0);
    CHECK(rank_transfer(trial % 5, ar.a, ar.b, 1) == trial % 5);
  }
}

TEST_CASE("property: Nielsen inverse of random automorphisms", "[one-relator][nielsen][property]") {
  Rng rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    const Assignment a = random_automorphism(rng, static_cast<int>(uniform(rng, 1, 8)));
    const Assignment inv = inverse_automorphism(a, 2);
    for (GenId g = 0; g < 2; ++g) {
      CHECK(substitute(substitute(Word(g), inv), a) == Word(g));
      CHECK(substitute(substitute(Word(g), a), inv) == Word(g));
    }
  }
  // Endomorphisms that are not onto.
  CHECK_THROWS_AS(inverse_automorphism({{0, Word(0, 2)}}, 2), HypothesisError);
  CHECK_THROWS_AS(inverse_automorphism({{0, W("x y x^-1 y^-1")}}, 2), HypothesisError);
  CHECK_THROWS_AS(inverse_automorphism({{0, Word(1)}}, 2), HypothesisError);
}

TEST_CASE("property: invertible hints do not change the fiber rank", "[one-relator][property]") {
  Rng rng(53);
  int terminated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    long long alpha = uniform(rng, 1, 6), beta = uniform(rng, 1, 6);
    if (gcd(Int(alpha), Int(beta)) != 1) continue;
    const Word r = Word(0, alpha) * Word(1, -beta);
    const Assignment sigma = random_automorphism(rng, static_cast<int>(uniform(rng, 1, 4)));
    const Word moved = cyclic_reduce(substitute(r, sigma));
    if (exponent_sum(moved, 1) == 0) continue;
    const std::string hint = format_assignment(inverse_automorphism(sigma, 2), kXY);
    // After a descent the hint names generators that no longer exist.
    std::optional<Int> k;
    try {
      k = fiber_rank(Presentation("g", kXY, {moved}), {hint}).rank;
    } catch (const ParseError&) {
      continue;
    }
    if (!k) continue;
    ++terminated;
    CHECK(*k == (alpha - 1) * (beta - 1));
  }
  CHECK(terminated > 50);
}
