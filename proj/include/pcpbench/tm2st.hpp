#pragma once

// Turing machine -> semi-Thue reduction with a normal and an overlined phase.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcpbench/machine.hpp"
#include "pcpbench/rewriting.hpp"
#include "pcpbench/wordcore.hpp"

namespace pcpbench {

/// Fixed-width binary code of the tape alphabet over {a, b}. The i-th tape
/// symbol (declared order) gets the i-th word of {a,b}^k in lexicographic
/// order, k = max(1, ceil(log2 |tape|)).
class EncodingMap {
 public:
  EncodingMap() = default;
  explicit EncodingMap(const std::vector<std::string>& tape_alphabet);

  std::size_t width() const noexcept { return width_; }
  const std::vector<std::pair<std::string, Word>>& table() const noexcept { return table_; }

  const Word& encode(const std::string& symbol) const;
  /// Replaces every content letter by its code; other letters are kept.
  Word encode(const Word& w) const;
  /// Inverse of encode on words whose content letters come in full blocks.
  Word decode(const Word& w) const;

 private:
  std::size_t width_ = 0;
  std::vector<std::pair<std::string, Word>> table_;
};

enum class RuleRole {
  simulate,
  extend,
  cancel,
  to_intermediate,  // (u_halt, s)
  phase_switch,     // (s, ~w0)
  ov_simulate,
  ov_extend,
  ov_cancel,
  ov_to_intermediate,  // (~u_halt, ~s)
  ov_phase_switch,     // (~s, w0)
};

std::string_view to_string(RuleRole role);
RuleRole rule_role_from_string(std::string_view name);
bool is_overlined_role(RuleRole role);
RuleRole overlined_role(RuleRole role);

struct RoledRule {
  Rule rule;
  RuleRole role;
};

/// The special system built from a machine. Rules [0, n) form the normal
/// phase and rule n + i is the overline twin of rule i.
struct ReductionSystem {
  SemiThueSystem system;
  std::vector<RuleRole> roles;
  Word w0;
  Word u_halt;
  Letter s = Letter::special("s");
  EncodingMap encoding;
  std::vector<std::string> states;

  /// A = {a, b, L, R}.
  Alphabet context() const;
  /// B = Q together with the intermediate letter s.
  Alphabet state_class() const;
  SpellingContext spelling() const;
  std::vector<std::size_t> rules_with_role(RuleRole role) const;
};

/// Simulation and blank-extension rules over the unencoded alphabet.
std::vector<Rule> build_base_rules(const TuringMachine& tm);
std::vector<Rule> add_halting_cancellation(std::vector<Rule> rules, const TuringMachine& tm);

ReductionSystem build_T(const TuringMachine& tm);

ValidationReport validate_reduction(const ReductionSystem& red);

namespace check {
inline constexpr const char* alphabet_disjoint = "alphabet-disjoint";
inline constexpr const char* encoding_injective = "encoding-injective";
inline constexpr const char* phase_rules = "phase-rules";
inline constexpr const char* w0_not_halt = "w0-differs-from-halt";
}  // namespace check

/// Reads a rewriting word L x q y R back as a machine configuration.
Configuration decode_configuration(const ReductionSystem& red, const TuringMachine& tm,
                                   const Word& w);

/// True iff the orbit from w0, up to the first cancellation step, visits the
/// encodings of the machine's configurations from the empty tape in order.
bool bisimulate(const TuringMachine& tm, const ReductionSystem& red, std::size_t max_steps);

}  // namespace pcpbench
