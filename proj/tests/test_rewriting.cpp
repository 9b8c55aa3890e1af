#include <doctest.h>

#include <random>

#include "pcpbench/errors.hpp"
#include "pcpbench/rewriting.hpp"
#include "pcpbench/tm2st.hpp"
#include "support/machines.hpp"
#include "support/oracles.hpp"

using namespace pcpbench;
using oracle::str;
using oracle::word;

namespace {

SemiThueSystem sys(const oracle::Rules& rules) {
  std::vector<Rule> out;
  for (const auto& [l, r] : rules) out.emplace_back(word(l), word(r));
  return SemiThueSystem(std::move(out));
}

// Replays a trace through rewrite_at and checks every recorded word.
bool replays(const SemiThueSystem& s, const DerivationTrace& t) {
  Word cur = t.start;
  for (const auto& st : t.steps) {
    cur = rewrite_at(s, cur, st.step);
    if (cur != st.result) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rules and systems") {
  CHECK_THROWS_AS(Rule(Word{}, word("a")), PreconditionError);
  CHECK_NOTHROW(Rule(word("a"), Word{}));
  const auto s = sys({{"ab", "ba"}});
  CHECK(s.alphabet().size() == 2);
  CHECK_THROWS_AS((void)s.rule(1), RewriteError);
  CHECK_THROWS_AS(SemiThueSystem({Letter::content("a")}, {Rule(word("ab"), word("a"))}),
                  PreconditionError);
}

TEST_CASE("rewrite_at") {
  const auto s = sys({{"ab", "ba"}});
  CHECK(str(rewrite_at(s, word("aab"), {0, 1})) == "aba");
  CHECK(str(rewrite_at(s, word("ab"), {0, 0})) == "ba");
  CHECK_THROWS_AS((void)rewrite_at(s, word("aab"), {0, 0}), RewriteError);
  CHECK_THROWS_AS((void)rewrite_at(s, word("aab"), {1, 1}), RewriteError);
  CHECK_THROWS_AS((void)rewrite_at(s, word("ab"), {0, 5}), RewriteError);

  SpellingContext ctx{{"q0"}};
  const SemiThueSystem phase({Rule(Word::parse("s", ctx), Word::parse("~L ~q0 ~a ~R", ctx))});
  CHECK(rewrite_at(phase, Word::parse("s", ctx), {0, 0}).spelling() == "~L ~q0 ~a ~R");

  std::mt19937 rng(5);
  const auto grow = sys({{"ab", "bba"}, {"b", ""}, {"a", "aa"}});
  for (int i = 0; i < 300; ++i) {
    const Word w = word(oracle::random_word(rng, "ab", 1, 8));
    for (const auto& t : successors(grow, w)) {
      const Rule& r = grow.rule(t.step.rule);
      CHECK(static_cast<long>(t.result.size()) - static_cast<long>(w.size()) ==
            static_cast<long>(r.rhs.size()) - static_cast<long>(r.lhs.size()));
    }
  }
}

TEST_CASE("successors are ordered by position, then rule") {
  const auto s = sys({{"ab", "ba"}});
  auto next = successors(s, word("abab"));
  REQUIRE(next.size() == 2);
  CHECK(next[0].step.position == 0);
  CHECK(next[1].step.position == 2);
  CHECK(successors(SemiThueSystem{}, word("ab")).empty());

  auto two = successors(sys({{"b", "c"}, {"ab", "x"}}), word("ab"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].step == DerivationStep{1, 0});
  CHECK(two[1].step == DerivationStep{0, 1});
}

TEST_CASE("derive_bounded") {
  auto t = derive_bounded(sys({{"a", "b"}}), word("a"), word("b"), 1);
  REQUIRE(t);
  CHECK(t->length() == 1);
  CHECK_FALSE(derive_bounded(sys({{"a", "b"}}), word("a"), word("c"), 10));

  const auto s = sys({{"ab", "ba"}});
  auto sort = derive_bounded(s, word("aabb"), word("bbaa"), 6);
  REQUIRE(sort);
  CHECK(sort->length() == 4);
  CHECK(replays(s, *sort));
  CHECK(sort->last() == word("bbaa"));
  CHECK_FALSE(derive_bounded(s, word("aabb"), word("bbaa"), 3));

  auto zero = derive_bounded(s, word("ab"), word("ab"), 0);
  REQUIRE(zero);
  CHECK(zero->length() == 0);
}

TEST_CASE("orbit") {
  auto halt = orbit(sys({{"a", "b"}}), word("a"), 5);
  CHECK(halt.length() == 1);
  CHECK(str(halt.last()) == "b");
  CHECK_FALSE(halt.circular());

  auto cyc = orbit(sys({{"a", "b"}, {"b", "a"}}), word("a"), 10);
  CHECK(cyc.length() == 2);
  CHECK(cyc.circular());

  auto capped = orbit(sys({{"a", "ab"}}), word("a"), 3);
  CHECK(capped.length() == 3);
  CHECK(str(capped.last()) == "abbb");
  CHECK_THROWS_AS((void)orbit(sys({{"a", "b"}, {"a", "c"}}), word("a"), 3), BranchError);
}

TEST_CASE("orbit of the H1 reduction is the 8-step cycle") {
  const auto red = build_T(testing_support::h1());
  const auto t = orbit(red.system, red.w0, 20);
  CHECK(t.circular());
  CHECK(t.length() == 8);
  CHECK(replays(red.system, t));
}

TEST_CASE("find_circular agrees with a BFS oracle") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    oracle::Rules rules;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) {
      rules.emplace_back(oracle::random_word(rng, "ab", 1, 2), oracle::random_word(rng, "ab", 0, 2));
    }
    const std::string start = oracle::random_word(rng, "ab", 1, 4);
    const auto s = sys(rules);
    const auto mine = find_circular(s, word(start), 5);
    const auto ref = oracle::circular_distance(rules, start, 5);
    REQUIRE(mine.has_value() == ref.has_value());
    if (mine) {
      CHECK(mine->circular());
      CHECK(mine->length() >= 1);
      CHECK(replays(s, *mine));
    }
  }
}

TEST_CASE("class determinism checks") {
  const auto red = build_T(testing_support::h1());
  const auto report = check_class_determinism(red.system, red.context(), red.state_class());
  CHECK(report.passed());
  for (const char* name : {check::rule_shape, check::overline_twins, check::unique_rule,
                           check::phase_switch}) {
    REQUIRE(report.find(name) != nullptr);
    CHECK(report.find(name)->passed);
  }

  // Two rules for the same redex.
  SpellingContext ctx{{"q", "p", "r"}};
  const SemiThueSystem clash({Rule(Word::parse("q a", ctx), Word::parse("p a", ctx)),
                              Rule(Word::parse("q a", ctx), Word::parse("r a", ctx)),
                              Rule(Word::parse("~q ~a", ctx), Word::parse("~p ~a", ctx)),
                              Rule(Word::parse("~q ~a", ctx), Word::parse("~r ~a", ctx))});
  const Alphabet a_ctx{Letter::content("a"), Letter::content("b"), Letter::marker("L"),
                       Letter::marker("R")};
  const Alphabet states{Letter::state("q"), Letter::state("p"), Letter::state("r")};
  const auto bad = check_class_determinism(clash, a_ctx, states);
  CHECK_FALSE(bad.find(check::unique_rule)->passed);
  CHECK(bad.find(check::overline_twins)->passed);

  // Compatible contexts on both sides of the state overlap as well.
  const SemiThueSystem overlap({Rule(Word::parse("a q", ctx), Word::parse("p", ctx)),
                                Rule(Word::parse("q b", ctx), Word::parse("r", ctx))});
  CHECK_FALSE(check_class_determinism(overlap, a_ctx, states).find(check::unique_rule)->passed);
  const SemiThueSystem apart({Rule(Word::parse("a q", ctx), Word::parse("p", ctx)),
                              Rule(Word::parse("b q", ctx), Word::parse("r", ctx))});
  CHECK(check_class_determinism(apart, a_ctx, states).find(check::unique_rule)->passed);

  // A rule without a state letter breaks the shape check.
  const SemiThueSystem shapeless({Rule(Word::parse("a", ctx), Word::parse("b", ctx))});
  CHECK_FALSE(check_class_determinism(shapeless, a_ctx, states).find(check::rule_shape)->passed);
}

TEST_CASE("systems passing the checks have at most one successor on state words") {
  for (const auto& m : testing_support::all_machines()) {
    const auto red = build_T(m.tm);
    REQUIRE(check_class_determinism(red.system, red.context(), red.state_class()).passed());
    const Alphabet context = red.context();
    const Alphabet states = red.state_class();
    std::vector<Letter> ctx(context.begin(), context.end());
    for (const auto& a : context) ctx.push_back(a.with_overline());
    std::vector<Letter> mid(states.begin(), states.end());
    for (const auto& a : states) mid.push_back(a.with_overline());
    std::mt19937 rng(23);
    for (int i = 0; i < 400; ++i) {
      Word w;
      for (std::size_t n = rng() % 4; n > 0; --n) w += ctx[rng() % ctx.size()];
      w += mid[rng() % mid.size()];
      for (std::size_t n = rng() % 4; n > 0; --n) w += ctx[rng() % ctx.size()];
      CHECK_MESSAGE(successors(red.system, w).size() <= 1, m.name << ": " << w.spelling());
    }
  }
}

TEST_CASE("validation report formatting") {
  ValidationReport r;
  r.add("one", true);
  r.add("two", false, "broken");
  CHECK_FALSE(r.passed());
  CHECK(r.find("two")->detail == "broken");
  CHECK(r.find("three") == nullptr);
  CHECK(r.to_string().find("broken") != std::string::npos);
}
