#include <doctest.h>

#include <random>

#include "pcpbench/cpcp.hpp"
#include "pcpbench/errors.hpp"
#include "support/oracles.hpp"

using namespace pcpbench;
using oracle::str;
using oracle::word;

namespace {

const Letter A = Letter::content("a");
const Letter B = Letter::content("b");

Morphism morph(const std::string& ia, const std::string& ib) {
  return Morphism({{A, word(ia)}, {B, word(ib)}});
}

bool valid(const Morphism& h, const Morphism& g, const Word& w, const Split& s) {
  return h.apply(w) == s.u + s.v && g.apply(w) == s.v + s.u;
}

}  // namespace

TEST_CASE("two-split instance") {
  const auto h = morph("aba", "b");
  const auto g = morph("bab", "a");
  const auto sol = solve_bounded(h, g, 5);
  REQUIRE(sol);
  CHECK(str(sol->w) == "ab");
  REQUIRE(sol->splits.size() == 2);
  CHECK(str(sol->splits[0].u) == "a");
  CHECK(str(sol->splits[0].v) == "bab");
  CHECK(str(sol->splits[1].u) == "aba");
  CHECK(str(sol->splits[1].v) == "b");

  CHECK(check_solution(h, g, word("ab"))->size() == 2);
  CHECK_FALSE(check_solution(h, g, word("a")));
  CHECK(check_solution(h, g, word("abab")));
  CHECK_THROWS_AS((void)check_solution(h, g, Word{}), PreconditionError);
}

TEST_CASE("small solve examples") {
  const Morphism id({{A, word("a")}});
  const auto s1 = solve_bounded(id, id, 1);
  REQUIRE(s1);
  CHECK(str(s1->w) == "a");
  bool whole = false;
  for (const auto& s : s1->splits) whole = whole || (str(s.u) == "a" && s.v.empty());
  CHECK(whole);

  const auto s2 = solve_bounded(Morphism({{A, word("ab")}}), Morphism({{A, word("ba")}}), 1);
  REQUIRE(s2);
  REQUIRE(s2->splits.size() == 1);
  CHECK(str(s2->splits[0].u) == "a");
  CHECK(str(s2->splits[0].v) == "b");

  CHECK_FALSE(solve_bounded(Morphism({{A, word("a")}}), Morphism({{A, word("b")}}), 6));
  CHECK_THROWS_AS((void)solve_bounded(Morphism({{A, word("a")}}), Morphism({{B, word("a")}}), 2),
                  PreconditionError);
}

TEST_CASE("solve_bounded is minimal against full enumeration") {
  const auto images = oracle::words_up_to("ab", 3);
  std::size_t solved = 0;
  for (const auto& ha : images)
    for (const auto& hb : images)
      for (const auto& ga : images)
        for (const auto& gb : images) {
          const auto h = morph(ha, hb);
          const auto g = morph(ga, gb);
          const auto mine = solve_bounded(h, g, 4);
          const auto ref = oracle::first_solution(
              std::string("ab"), [&](char c) { return c == 'a' ? ha : hb; },
              [&](char c) { return c == 'a' ? ga : gb; }, 4);
          REQUIRE(mine.has_value() == ref.has_value());
          if (!mine) continue;
          ++solved;
          REQUIRE(str(mine->w) == *ref);
          for (const auto& s : mine->splits) CHECK(valid(h, g, mine->w, s));
        }
  CHECK(solved > 0);
}

TEST_CASE("worker count does not change the answer") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto h = morph(oracle::random_word(rng, "ab", 0, 4), oracle::random_word(rng, "ab", 0, 4));
    const auto g = morph(oracle::random_word(rng, "ab", 0, 4), oracle::random_word(rng, "ab", 0, 4));
    const auto one = solve_bounded(h, g, 6, 1);
    const auto many = solve_bounded(h, g, 6, 4);
    REQUIRE(one.has_value() == many.has_value());
    if (one) CHECK(one->w == many->w);
  }
}

TEST_CASE("solutions are closed under conjugation") {
  std::mt19937 rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto h = morph(oracle::random_word(rng, "ab", 0, 3), oracle::random_word(rng, "ab", 0, 3));
    const auto g = morph(oracle::random_word(rng, "ab", 0, 3), oracle::random_word(rng, "ab", 0, 3));
    for (const auto& s : oracle::words_up_to("ab", 4)) {
      if (s.empty() || !check_solution(h, g, word(s))) continue;
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(check_solution(h, g, word(s).rotated(k)));
    }
  }
}

TEST_CASE("lemma1_backward") {
  const auto h = morph("aba", "b");
  const auto g = morph("bab", "a");
  const auto cert = lemma1_backward(h, g, word("a"), word("b"));
  CHECK(str(cert.w) == "ab");
  CHECK(valid(h, g, cert.w, cert.split));

  const auto trivial = lemma1_backward(h, g, Word{}, word("ab"));
  CHECK(str(trivial.w) == "ab");
  CHECK(valid(h, g, trivial.w, trivial.split));

  const bool witness = perm_pcp_check(g, h, word("ba"), word("ab"), 2, 2).has_value();
  if (witness) {
    const auto ba = lemma1_backward(h, g, word("b"), word("a"));
    CHECK(str(ba.w) == "ba");
    CHECK(valid(h, g, ba.w, ba.split));
  } else {
    CHECK_THROWS_AS((void)lemma1_backward(h, g, word("b"), word("a")), PreconditionError);
  }

  const auto no = morph("a", "a");
  const auto other = morph("b", "b");
  CHECK_THROWS_AS((void)lemma1_backward(no, other, word("a"), word("b")), PreconditionError);
  CHECK_THROWS_AS((void)lemma1_backward(h, g, Word{}, Word{}), PreconditionError);
}

TEST_CASE("the two witness orientations are the same relation") {
  // h(xy) and h(yx) are conjugate, and so are g(xy) and g(yx).
  const auto images = oracle::words_up_to("ab", 2);
  const auto factors = oracle::words_up_to("ab", 2);
  for (const auto& ha : images)
    for (const auto& hb : images)
      for (const auto& ga : images)
        for (const auto& gb : images) {
          const auto h = morph(ha, hb);
          const auto g = morph(ga, gb);
          for (const auto& xs : factors)
            for (const auto& ys : factors) {
              const Word x = word(xs), y = word(ys);
              CHECK(is_conjugate(h.apply(x + y), g.apply(y + x)).has_value() ==
                    is_conjugate(g.apply(x + y), h.apply(y + x)).has_value());
            }
        }
}

TEST_CASE("every (2,2) witness converts, exhaustively on small instances") {
  const auto images = oracle::words_up_to("ab", 2);
  for (const auto& ha : images)
    for (const auto& hb : images)
      for (const auto& ga : images)
        for (const auto& gb : images) {
          const auto h = morph(ha, hb);
          const auto g = morph(ga, gb);
          for (const auto& xs : oracle::words_up_to("ab", 2))
            for (const auto& ys : oracle::words_up_to("ab", 2)) {
              if (xs.empty() && ys.empty()) continue;
              const Word x = word(xs), y = word(ys);
              if (!perm_pcp_check(g, h, x + y, y + x, 2, 2)) continue;
              const auto cert = lemma1_backward(h, g, x, y);
              CHECK(valid(h, g, cert.w, cert.split));
            }
        }
}

TEST_CASE("perm_pcp_check") {
  const auto h = morph("aba", "b");
  const auto g = morph("bab", "a");
  const auto w12 = perm_pcp_check(g, h, word("ab"), word("ab"), 1, 2);
  REQUIRE(w12);
  CHECK(str(w12->first.permuted()) == "ab");
  CHECK(str(w12->second.source()) == "baba");
  CHECK(str(w12->second.permuted()) == "abab");
  CHECK(perm_pcp_check(g, h, word("ab"), word("ba"), 2, 2));
  CHECK_FALSE(perm_pcp_check(g, h, word("a"), word("a"), 1, 2));
  CHECK_THROWS_AS((void)perm_pcp_check(g, h, word("a"), word("a"), 5, 1), PreconditionError);
  CHECK_THROWS_AS((void)perm_pcp_check(g, h, word("a"), word("a"), 0, 1), PreconditionError);
  CHECK_THROWS_AS((void)perm_pcp_check(g, h, word("aaaaaaaaaaaaa"), word("a"), 1, 1),
                  PreconditionError);
}
