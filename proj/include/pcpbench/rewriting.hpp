#pragma once

// Semi-Thue systems: single steps, bounded derivation search, deterministic
// orbits and the state-class determinism checks used by the reductions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcpbench/wordcore.hpp"

namespace pcpbench {

/// lhs -> rhs. The left side is never empty; the right side may be.
struct Rule {
  Rule(Word lhs_, Word rhs_);

  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

class SemiThueSystem {
 public:
  SemiThueSystem() = default;
  /// Alphabet is inferred from the rules.
  explicit SemiThueSystem(std::vector<Rule> rules);
  SemiThueSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const Rule& rule(std::size_t i) const;
  std::size_t size() const noexcept { return rules_.size(); }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
};

/// Rule `rule` applied with its lhs starting at offset `position`.
struct DerivationStep {
  std::size_t rule = 0;
  std::size_t position = 0;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct TraceStep {
  DerivationStep step;
  Word result;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DerivationTrace {
  Word start;
  std::vector<TraceStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const Word& last() const { return steps.empty() ? start : steps.back().result; }
  /// Word before step i (i.e. start for i == 0).
  const Word& before(std::size_t i) const { return i == 0 ? start : steps[i - 1].result; }
  bool circular() const { return !steps.empty() && last() == start; }

  friend bool operator==(const DerivationTrace&, const DerivationTrace&) = default;
};

Word rewrite_at(const SemiThueSystem& sys, const Word& w, const DerivationStep& step);

/// All one-step rewrites of w, ordered by (position, rule index).
std::vector<TraceStep> successors(const SemiThueSystem& sys, const Word& w);

/// Breadth-first search; returns a shortest trace when target is reachable
/// in at most max_steps steps.
std::optional<DerivationTrace> derive_bounded(const SemiThueSystem& sys, const Word& start,
                                              const Word& target, std::size_t max_steps);

/// Follows the unique successor from w0 until max_steps, a dead end, or the
/// first return to w0. Throws BranchError when a word has two successors.
DerivationTrace orbit(const SemiThueSystem& sys, const Word& w0, std::size_t max_steps);

/// A derivation of length >= 1 from w0 back to w0, if one exists within the
/// bound. Uses the orbit for deterministic systems and BFS otherwise.
std::optional<DerivationTrace> find_circular(const SemiThueSystem& sys, const Word& w0,
                                             std::size_t max_steps);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  void add(std::string name, bool passed, std::string detail = {});
  std::string to_string() const;
};

namespace check {
inline constexpr const char* rule_shape = "rule-shape";
inline constexpr const char* overline_twins = "overline-twins";
inline constexpr const char* unique_rule = "unique-rule";
inline constexpr const char* phase_switch = "phase-switch";
}  // namespace check

/// Structural determinism with respect to a letter class B (and its overlined
/// copy) over a context alphabet A:
///  - rule-shape: every side lies in A*BA* or in its fully overlined copy;
///  - overline-twins: toggling every overline of a rule yields another rule;
///  - unique-rule: no word of (A+~A)*(B+~B)(A+~A)* admits two rules
///    (checked exactly over every pair of left sides);
///  - phase-switch: exactly one rule crosses from plain to overlined and one
///    back, both rewriting a whole L...R word.
ValidationReport check_class_determinism(const SemiThueSystem& sys, const Alphabet& context,
                                         const Alphabet& state_class);

}  // namespace pcpbench
