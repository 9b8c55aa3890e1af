#include "pcpbench/rewriting.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "pcpbench/errors.hpp"

namespace pcpbench {

Rule::Rule(Word lhs_, Word rhs_) : lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
  if (lhs.empty()) throw PreconditionError("rule with empty left side");
}

SemiThueSystem::SemiThueSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    alphabet_.insert(r.lhs.begin(), r.lhs.end());
    alphabet_.insert(r.rhs.begin(), r.rhs.end());
  }
}

SemiThueSystem::SemiThueSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    for (const auto* side : {&r.lhs, &r.rhs}) {
      for (const auto& a : *side) {
        if (!alphabet_.contains(a)) {
          throw PreconditionError("rule letter " + a.spelling() + " outside the alphabet");
        }
      }
    }
  }
}

const Rule& SemiThueSystem::rule(std::size_t i) const {
  if (i >= rules_.size()) {
    throw RewriteError("rule index " + std::to_string(i) + " out of range");
  }
  return rules_[i];
}

Word rewrite_at(const SemiThueSystem& sys, const Word& w, const DerivationStep& step) {
  const Rule& r = sys.rule(step.rule);
  if (!w.occurs_at(r.lhs, step.position)) {
    throw RewriteError("left side of rule " + std::to_string(step.rule) + " not at position " +
                       std::to_string(step.position) + " of '" + w.spelling() + "'");
  }
  return w.prefix(step.position) + r.rhs + w.suffix_from(step.position + r.lhs.size());
}

std::vector<TraceStep> successors(const SemiThueSystem& sys, const Word& w) {
  std::vector<TraceStep> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const Rule& r = sys.rules()[i];
      if (w.occurs_at(r.lhs, pos)) {
        DerivationStep step{i, pos};
        out.push_back({step, w.prefix(pos) + r.rhs + w.suffix_from(pos + r.lhs.size())});
      }
    }
  }
  return out;
}

namespace {

struct Visit {
  Word parent;
  TraceStep via;
};

DerivationTrace unwind(const Word& start, const Word& last,
                       const std::unordered_map<Word, Visit>& seen) {
  std::vector<TraceStep> rev;
  Word cur = last;
  while (cur != start) {
    const Visit& v = seen.at(cur);
    rev.push_back(v.via);
    cur = v.parent;
  }
  return DerivationTrace{start, {rev.rbegin(), rev.rend()}};
}

}  // namespace

std::optional<DerivationTrace> derive_bounded(const SemiThueSystem& sys, const Word& start,
                                              const Word& target, std::size_t max_steps) {
  if (start == target) return DerivationTrace{start, {}};
  std::unordered_map<Word, Visit> seen;
  std::deque<std::pair<Word, std::size_t>> frontier{{start, 0}};
  while (!frontier.empty()) {
    auto [w, depth] = std::move(frontier.front());
    frontier.pop_front();
    if (depth == max_steps) continue;
    for (auto& succ : successors(sys, w)) {
      if (succ.result == start || seen.contains(succ.result)) continue;
      Word next = succ.result;
      seen.emplace(next, Visit{w, succ});
      if (next == target) return unwind(start, next, seen);
      frontier.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

DerivationTrace orbit(const SemiThueSystem& sys, const Word& w0, std::size_t max_steps) {
  DerivationTrace trace{w0, {}};
  Word cur = w0;
  while (trace.length() < max_steps) {
    auto next = successors(sys, cur);
    if (next.empty()) break;
    if (next.size() > 1) {
      throw BranchError("word '" + cur.spelling() + "' has " + std::to_string(next.size()) +
                        " successors");
    }
    cur = next.front().result;
    trace.steps.push_back(std::move(next.front()));
    if (cur == w0) break;
  }
  return trace;
}

namespace {

std::optional<DerivationTrace> bfs_circular(const SemiThueSystem& sys, const Word& w0,
                                            std::size_t max_steps) {
  // Parents of words other than w0; the closing step back to w0 is tracked
  // separately so that w0 can act both as root and as goal.
  std::unordered_map<Word, Visit> seen;
  std::deque<std::pair<Word, std::size_t>> frontier{{w0, 0}};
  while (!frontier.empty()) {
    auto [w, depth] = std::move(frontier.front());
    frontier.pop_front();
    if (depth == max_steps) continue;
    for (auto& succ : successors(sys, w)) {
      if (succ.result == w0) {
        DerivationTrace trace = w == w0 ? DerivationTrace{w0, {}} : unwind(w0, w, seen);
        trace.steps.push_back(succ);
        return trace;
      }
      if (seen.contains(succ.result)) continue;
      Word next = succ.result;
      seen.emplace(next, Visit{w, succ});
      frontier.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<DerivationTrace> find_circular(const SemiThueSystem& sys, const Word& w0,
                                             std::size_t max_steps) {
  try {
    auto trace = orbit(sys, w0, max_steps);
    if (trace.circular()) return trace;
    return std::nullopt;
  } catch (const BranchError&) {
    return bfs_circular(sys, w0, max_steps);
  }
}

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void ValidationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

enum class Phase { plain, overlined, invalid };

struct SideShape {
  Phase phase = Phase::invalid;
  std::size_t state_pos = 0;
};

SideShape classify(const Word& w, const Alphabet& context, const Alphabet& state_class) {
  if (w.empty()) return {};
  const bool over = w.front().overlined();
  std::size_t states = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& a = w[i];
    if (a.overlined() != over) return {};
    const Letter base = a.with_overline(false);
    if (state_class.contains(base)) {
      ++states;
      pos = i;
    } else if (!context.contains(base)) {
      return {};
    }
  }
  if (states != 1) return {};
  return {over ? Phase::overlined : Phase::plain, pos};
}

bool is_marker(const Letter& a, const char* name) {
  return a.role() == Role::marker && a.base() == name;
}

bool whole_word(const Word& w) {
  return !w.empty() && is_marker(w.front(), "L") && is_marker(w.back(), "R");
}

}  // namespace

ValidationReport check_class_determinism(const SemiThueSystem& sys, const Alphabet& context,
                                         const Alphabet& state_class) {
  ValidationReport report;
  const auto& rules = sys.rules();

  std::vector<SideShape> lhs_shape, rhs_shape;
  std::string shape_detail;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    lhs_shape.push_back(classify(rules[i].lhs, context, state_class));
    rhs_shape.push_back(classify(rules[i].rhs, context, state_class));
    if (shape_detail.empty() &&
        (lhs_shape[i].phase == Phase::invalid || rhs_shape[i].phase == Phase::invalid)) {
      shape_detail = "rule " + std::to_string(i) + " (" + rules[i].lhs.spelling() + " -> " +
                     rules[i].rhs.spelling() + ") has a side outside A*BA* and its overline";
    }
  }
  report.add(check::rule_shape, shape_detail.empty(), shape_detail);

  std::string twin_detail;
  for (std::size_t i = 0; i < rules.size() && twin_detail.empty(); ++i) {
    const Rule twin(rules[i].lhs.toggled(), rules[i].rhs.toggled());
    bool found = false;
    for (const auto& r : rules) found = found || r == twin;
    if (!found) {
      twin_detail = "rule " + std::to_string(i) + " (" + rules[i].lhs.spelling() + " -> " +
                    rules[i].rhs.spelling() + ") has no overline twin";
    }
  }
  report.add(check::overline_twins, twin_detail.empty(), twin_detail);

  // Two left sides fire on a common one-state word exactly when they agree
  // on the state letter and their contexts are suffix/prefix compatible.
  std::string unique_detail;
  for (std::size_t i = 0; i < rules.size() && unique_detail.empty(); ++i) {
    if (lhs_shape[i].phase == Phase::invalid) continue;
    const Word& li = rules[i].lhs;
    const auto pi = lhs_shape[i].state_pos;
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (lhs_shape[j].phase == Phase::invalid) continue;
      const Word& lj = rules[j].lhs;
      const auto pj = lhs_shape[j].state_pos;
      if (li[pi] != lj[pj]) continue;
      const Word xi = li.prefix(pi), xj = lj.prefix(pj);
      const Word yi = li.suffix_from(pi + 1), yj = lj.suffix_from(pj + 1);
      const bool left_ok = xi.size() <= xj.size() ? xj.ends_with(xi) : xi.ends_with(xj);
      const bool right_ok = yi.size() <= yj.size() ? yj.starts_with(yi) : yi.starts_with(yj);
      if (left_ok && right_ok) {
        const Word x = xi.size() >= xj.size() ? xi : xj;
        const Word y = yi.size() >= yj.size() ? yi : yj;
        unique_detail = "rules " + std::to_string(i) + " and " + std::to_string(j) +
                        " both apply to '" + (x + li[pi] + y).spelling() + "'";
        break;
      }
    }
  }
  report.add(check::unique_rule, unique_detail.empty(), unique_detail);

  std::vector<std::size_t> to_over, to_plain;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (lhs_shape[i].phase == Phase::plain && rhs_shape[i].phase == Phase::overlined) {
      to_over.push_back(i);
    }
    if (lhs_shape[i].phase == Phase::overlined && rhs_shape[i].phase == Phase::plain) {
      to_plain.push_back(i);
    }
  }
  std::string phase_detail;
  if (to_over.size() != 1 || to_plain.size() != 1) {
    phase_detail = std::to_string(to_over.size()) + " plain->overlined and " +
                   std::to_string(to_plain.size()) + " overlined->plain rules (need 1 each)";
  } else {
    const Rule& a = rules[to_over.front()];
    const Rule& b = rules[to_plain.front()];
    auto whole_lhs = [](const Word& w) { return w.size() == 1 || whole_word(w); };
    if (!whole_word(a.rhs) || !whole_word(b.rhs) || !whole_lhs(a.lhs) || !whole_lhs(b.lhs)) {
      phase_detail = "phase switch does not rewrite a whole L...R word";
    } else if (a.rhs.toggled() != b.rhs || a.lhs.toggled() != b.lhs) {
      phase_detail = "the two phase switches are not overline twins";
    }
  }
  report.add(check::phase_switch, phase_detail.empty(), phase_detail);
  return report;
}

}  // namespace pcpbench
