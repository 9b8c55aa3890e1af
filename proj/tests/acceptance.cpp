// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "pcpbench/cpcp.hpp"
#include "pcpbench/rewriting.hpp"
#include "pcpbench/st2cpcp.hpp"
#include "pcpbench/tm2st.hpp"
#include "pcpbench/zpcp.hpp"
#include "support/machines.hpp"
#include "support/oracles.hpp"

using namespace pcpbench;
using oracle::str;
using oracle::word;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits, in seconds.
constexpr double kTwoSplitsLimit = 1.0;
constexpr double kH1Limit = 10.0;
constexpr double kConjugacyLimit = 30.0;

constexpr std::size_t kRotationCases = 1000;
constexpr std::size_t kZpcpRandomPairs = 500;
constexpr std::size_t kBridgeInstances = 100;
constexpr std::size_t kBridgeWindow = 50;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Morphism over_ab(const std::string& ia, const std::string& ib) {
  return Morphism({{Letter::content("a"), word(ia)}, {Letter::content("b"), word(ib)}});
}

Outcome two_splits() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto sol = solve_bounded(over_ab("aba", "b"), over_ab("bab", "a"), 6);
  const double dt = since(t0);
  if (!sol) {
    o.fail("no solution");
    return o;
  }
  if (str(sol->w) != "ab") o.fail("w = " + str(sol->w));
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& s : sol->splits) got.emplace(str(s.u), str(s.v));
  const std::set<std::pair<std::string, std::string>> want{{"a", "bab"}, {"aba", "b"}};
  if (got != want) o.fail("splits differ");
  if (dt >= kTwoSplitsLimit) o.fail("took " + std::to_string(dt) + " s");
  o.note << (o.ok ? "w=ab, splits (a,bab) (aba,b), " : "; ") << dt << " s";
  return o;
}

Outcome h1_end_to_end() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto inst = build_instance(build_T(testing_support::h1()));
  const auto trace = orbit(inst.reduction.system, inst.reduction.w0, 100);
  // The hand-checked cycle from L q0 a R.
  const std::vector<std::string> cycle{"L H a R", "L H R",      "s",  "~L ~q0 ~a ~R",
                                       "~L ~H ~a ~R", "~L ~H ~R", "~s", "L q0 a R"};
  if (!trace.circular() || trace.length() != cycle.size()) {
    o.fail("orbit length " + std::to_string(trace.length()));
    return o;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (trace.steps[i].result.spelling() != cycle[i]) o.fail("orbit step " + std::to_string(i));
  }
  const Word w = encode_derivation(inst, trace);
  const auto splits = check_solution(inst.h, inst.g, w);
  bool boundary = false;
  if (splits) {
    for (const auto& s : *splits) {
      if (s.u.empty() || s.v.empty()) continue;
      boundary = boundary || (s.u.front().base() == "$" && s.u.back().base() == "$" &&
                              s.v.front().base() == "£" && s.v.back().base() == "£");
    }
  }
  if (!splits) o.fail("check_solution failed");
  else if (!boundary) o.fail("no $/£ split");
  if (decode_solution(inst, w) != trace) o.fail("decode differs from orbit");
  const double dt = since(t0);
  if (dt >= kH1Limit) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok) o.note << "8-step cycle, |w|=" << w.size() << ", $/£ split, decode exact, ";
  o.note << dt << " s";
  return o;
}

Outcome rotation_invariance() {
  Outcome o;
  std::mt19937 rng(20261015);
  std::size_t positives = 0;
  for (std::size_t t = 0; t < kRotationCases; ++t) {
    const std::string sigma = "abc";
    std::map<char, std::string> hi, gi;
    for (char c : sigma) {
      hi[c] = oracle::random_word(rng, "ab", 0, 5);
      gi[c] = oracle::random_word(rng, "ab", 0, 5);
    }
    // Bias toward conjugate images so both sides of the equivalence occur.
    if (t % 2 == 0) gi = hi;
    std::vector<std::pair<Letter, Word>> hv, gv;
    for (char c : sigma) {
      hv.emplace_back(Letter::content(std::string(1, c)), word(hi[c]));
      gv.emplace_back(Letter::content(std::string(1, c)), word(gi[c]));
    }
    const Morphism h(hv), g(gv);
    const std::string ws = oracle::random_word(rng, sigma, 1, 6);
    const bool lhs = is_conjugate(h.apply(word(ws)), g.apply(word(ws))).has_value();
    const auto img = [](std::map<char, std::string>& m, const std::string& s) {
      std::string out;
      for (char c : s) out += m[c];
      return out;
    };
    bool rhs = true;
    for (std::size_t i = 0; i < ws.size() && rhs; ++i)
      for (std::size_t j = 0; j < ws.size() && rhs; ++j) {
        const std::string w1 = ws.substr(i) + ws.substr(0, i);
        const std::string w2 = ws.substr(j) + ws.substr(0, j);
        rhs = oracle::conjugate(img(hi, w1), img(gi, w2));
      }
    positives += lhs;
    if (lhs != rhs) {
      o.fail("counterexample w=" + ws);
      break;
    }
  }
  if (o.ok) o.note << kRotationCases << " cases, " << positives << " conjugate, 0 counterexamples";
  return o;
}

Outcome conjugacy_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto words = oracle::words_up_to("ab", 8);
  std::vector<Word> ws;
  for (const auto& s : words) ws.push_back(word(s));
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[i].size() != words[j].size()) {
        // Different lengths are never conjugate; still checked, cheaply.
        mismatches += is_conjugate(ws[i], ws[j]).has_value();
        ++pairs;
        continue;
      }
      const bool want = oracle::conjugate(words[i], words[j]);
      mismatches += is_conjugate(ws[i], ws[j]).has_value() != want;
      ++pairs;
    }
  const double dt = since(t0);
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  if (dt >= kConjugacyLimit) o.fail("took " + std::to_string(dt) + " s");
  o.note << (o.ok ? "" : "; ") << pairs << " pairs, " << dt << " s";
  return o;
}

Outcome witness_family() {
  Outcome o;
  const auto images = oracle::words_up_to("ab", 3);
  std::size_t instances = 0, with_witness = 0, converted = 0;
  const auto run = [&](const std::string& sigma, const std::map<char, std::string>& hi,
                       const std::map<char, std::string>& gi) {
    ++instances;
    std::vector<std::pair<Letter, Word>> hv, gv;
    for (char c : sigma) {
      hv.emplace_back(Letter::content(std::string(1, c)), word(hi.at(c)));
      gv.emplace_back(Letter::content(std::string(1, c)), word(gi.at(c)));
    }
    const Morphism h(hv), g(gv);
    const auto img = [&](const std::map<char, std::string>& m, const std::string& s) {
      std::string out;
      for (char c : s) out += m.at(c);
      return out;
    };
    bool one_two = false, two_two = false;
    for (const auto& w : oracle::words_up_to(sigma, 4)) {
      if (w.empty()) continue;
      const bool lib = perm_pcp_check(g, h, word(w), word(w), 1, 2).has_value();
      if (lib != oracle::conjugate(img(gi, w), img(hi, w))) o.fail("(1,2) disagrees with oracle");
      one_two = one_two || lib;
    }
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& xy : oracle::all_words(sigma, n))
        for (std::size_t k = 0; k <= n; ++k) {
          const std::string x = xy.substr(0, k), y = xy.substr(k);
          const bool lib = perm_pcp_check(g, h, word(xy), word(y + x), 2, 2).has_value();
          if (lib != oracle::conjugate(img(gi, xy), img(hi, y + x))) o.fail("(2,2) disagrees with oracle");
          if (!lib) continue;
          two_two = true;
          const auto cert = lemma1_backward(h, g, word(x), word(y));
          const std::string cw = str(cert.w);
          const auto& s = cert.split;
          if (cw.empty() || img(hi, cw) != str(s.u) + str(s.v) || img(gi, cw) != str(s.v) + str(s.u))
            o.fail("conversion invalid for x=" + x + ", y=" + y);
          else
            ++converted;
        }
    with_witness += one_two;
    if (one_two != two_two) o.fail("(1,2) and (2,2) existence differ");
  };
  for (const auto& ha : images)
    for (const auto& ga : images) run("a", {{'a', ha}}, {{'a', ga}});
  for (const auto& ha : images)
    for (const auto& hb : images)
      for (const auto& ga : images)
        for (const auto& gb : images) run("ab", {{'a', ha}, {'b', hb}}, {{'a', ga}, {'b', gb}});
  o.note << (o.ok ? "" : "; ") << instances << " instances, " << with_witness
         << " with witnesses, " << converted << " conversions validated";
  return o;
}

Outcome zpcp_fixtures() {
  Outcome o;
  const auto inst = [](const std::string& u, const std::string& v) {
    return ZpcpInstance::from_pairs({{word(u), word(v)}});
  };
  const auto ab = inst("ab", "ba");
  const auto s1 = find_periodic_solution(ab.h, ab.g, 6);
  if (!s1 || s1->z != Word{index_letter(0)} || s1->shift != 1) o.fail("(ab,ba) not z=1 shift 1");
  const auto aa = inst("a", "aa");
  const auto s2 = find_periodic_solution(aa.h, aa.g, 6);
  if (!s2 || s2->shift != 0) o.fail("(a,aa) not shift 0");
  const auto no = inst("a", "b");
  if (find_periodic_solution(no.h, no.g, 6)) o.fail("(a,b) has a solution");
  const auto ones = BiInfiniteWord::periodic(Word{index_letter(0)});
  if (test_procedure(no.h, no.g, ones, 10, 50).kind != Verdict::Kind::inconclusive)
    o.fail("(a,b) not inconclusive");

  std::mt19937 rng(6);
  std::size_t equal = 0;
  for (std::size_t t = 0; t < kZpcpRandomPairs; ++t) {
    const std::string p = oracle::random_word(rng, "ab", 1, 4);
    std::string q = oracle::random_word(rng, "ab", 1, 4);
    if (t % 2 == 0) {
      const std::size_t r = rng() % p.size();
      q = p.substr(r) + p.substr(0, r);
      if (t % 4 == 0) q += q;
    }
    const auto x = BiInfiniteWord::periodic(word(p));
    const auto y = BiInfiniteWord::periodic(word(q));
    const std::size_t lcm = std::lcm(p.size(), q.size());
    const std::size_t radius = 10 * lcm;
    const auto s = eq_mod_shift_periodic(x, y);
    if (s) {
      ++equal;
      if (!compare_window(x, y, *s, radius).ok()) o.fail("shift rejected by window: " + p + "/" + q);
    } else {
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(lcm); ++k) {
        if (compare_window(x, y, k, radius).ok()) o.fail("missed shift: " + p + "/" + q);
      }
    }
  }
  o.note << (o.ok ? "" : "; ") << "3 fixtures, " << kZpcpRandomPairs << " random pairs (" << equal
         << " equal up to shift)";
  return o;
}

Outcome bridge() {
  Outcome o;
  std::mt19937 rng(7);
  std::size_t instances = 0, solutions = 0, tried = 0;
  while (instances < kBridgeInstances && tried < 100000) {
    ++tried;
    const auto h = over_ab(oracle::random_word(rng, "ab", 1, 3), oracle::random_word(rng, "ab", 1, 3));
    const auto g = over_ab(oracle::random_word(rng, "ab", 1, 3), oracle::random_word(rng, "ab", 1, 3));
    std::size_t here = 0;
    for (const auto& ws : oracle::words_up_to("ab", 4)) {
      if (ws.empty()) continue;
      const Word w = word(ws);
      const auto splits = check_solution(h, g, w);
      if (!splits) continue;
      for (const auto& sp : *splits) {
        ++here;
        const auto br = cpcp_bridge(h, g, w, sp);
        if (static_cast<std::size_t>(std::abs(br.shift)) != sp.u.size())
          o.fail("shift magnitude differs from |u|");
        if (!verify_window(h, g, br.seq, br.shift, kBridgeWindow).ok())
          o.fail("window check failed for w=" + ws);
      }
    }
    if (here) {
      ++instances;
      solutions += here;
    }
  }
  if (instances < kBridgeInstances) o.fail("only " + std::to_string(instances) + " instances");
  o.note << (o.ok ? "" : "; ") << instances << " instances, " << solutions
         << " solution splits, window " << kBridgeWindow;
  return o;
}

ReductionSystem with_rules(const ReductionSystem& red, const std::vector<Rule>& extra,
                           const std::vector<RuleRole>& roles, std::optional<std::size_t> drop) {
  ReductionSystem out = red;
  std::vector<Rule> rules;
  out.roles.clear();
  for (std::size_t i = 0; i < red.system.size(); ++i) {
    if (drop && *drop == i) continue;
    rules.push_back(red.system.rule(i));
    out.roles.push_back(red.roles[i]);
  }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    rules.push_back(extra[i]);
    out.roles.push_back(roles[i]);
  }
  out.system = SemiThueSystem(std::move(rules));
  return out;
}

Outcome validation() {
  Outcome o;
  const auto red = build_T(testing_support::h1());
  const auto report = validate_reduction(red);
  if (!report.passed()) o.fail("H1 reduction fails:\n" + report.to_string());
  std::size_t mutants = 0;

  for (std::size_t i = red.system.size() / 2; i < red.system.size(); ++i) {
    ++mutants;
    if (validate_reduction(with_rules(red, {}, {}, i)).find(check::overline_twins)->passed)
      o.fail("deleted overlined rule " + std::to_string(i) + " undetected");
  }

  for (std::size_t i : red.rules_with_role(RuleRole::simulate)) {
    ++mutants;
    const Rule& r = red.system.rule(i);
    // Same left side, one more context letter on the right; its twin keeps
    // the overline pairing intact.
    const Rule alt{r.lhs, r.rhs + Word{Letter::content("a")}};
    const Rule alt_twin{alt.lhs.toggled(), alt.rhs.toggled()};
    const auto m = with_rules(red, {alt, alt_twin}, {RuleRole::simulate, RuleRole::ov_simulate}, {});
    if (validate_reduction(m).find(check::unique_rule)->passed)
      o.fail("duplicated simulate rule " + std::to_string(i) + " undetected");
  }

  ++mutants;
  auto same = red;
  same.w0 = red.u_halt;
  if (validate_reduction(same).find(check::w0_not_halt)->passed) o.fail("w0 := u_halt undetected");

  o.note << (o.ok ? "" : "; ") << report.checks.size() << " checks pass, " << mutants
         << " mutants detected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 two-split instance", two_splits},
      {"C2 H1 reduction end to end", h1_end_to_end},
      {"C3 conjugate words have conjugate images", rotation_invariance},
      {"C4 conjugacy against factor oracle", conjugacy_oracle},
      {"C5 (1,2) and (2,2) witnesses coincide", witness_family},
      {"C6 bi-infinite fixtures and shift equality", zpcp_fixtures},
      {"C7 solutions bridge to bi-infinite solutions", bridge},
      {"C8 determinism checks and mutations", validation},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    all = all && out.ok;
    std::cout << (out.ok ? "PASS " : "FAIL ") << name << ": " << out.note.str() << std::endl;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
