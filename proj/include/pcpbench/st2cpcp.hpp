#pragma once

// Conjugate-PCP instance built from a reduction system, plus the encoding of
// circular derivations as solutions and the decoding back.

#include <cstddef>
#include <string>
#include <vector>

#include "pcpbench/rewriting.hpp"
#include "pcpbench/tm2st.hpp"
#include "pcpbench/wordcore.hpp"

namespace pcpbench {

/// One row of the morphism table: a domain letter, the row it belongs to and
/// its two images.
struct TableRow {
  std::string row;  // "I", "x_1", "x_2", "rule", "enter", "switch", "#", "~x_1", ...
  Letter letter;
  Word h;
  Word g;
};

struct CpcpInstance {
  ReductionSystem reduction;
  Morphism h;
  Morphism g;
  Alphabet codomain;
  std::vector<TableRow> rows;  // table order
  /// Rule letter t_k stands for system rule normal_rules[k]; ~t_k for
  /// overlined_rules[k].
  std::vector<std::size_t> normal_rules;
  std::vector<std::size_t> overlined_rules;
  std::size_t enter = 0;     // k of (u_halt, s)
  std::size_t switch_ = 0;   // k of (s, ~w0)

  Letter rule_letter(std::size_t system_index) const;
  /// System rule index named by a rule letter.
  std::size_t system_rule(const Letter& rule_letter) const;
  Letter enter_letter(bool overlined = false) const {
    return Letter::rule(enter).with_overline(overlined);
  }
  Letter switch_letter(bool overlined = false) const {
    return Letter::rule(switch_).with_overline(overlined);
  }
};

inline const Letter kStartLetter = Letter::special("I");
inline const Letter kSeparator = Letter::special("#");

CpcpInstance build_instance(const ReductionSystem& red);

/// alpha t beta: letters left of the redex carry subscript 1, right of it 2.
struct DerivationBlock {
  Word alpha;
  Letter rule_letter = Letter::rule(0);
  Word beta;
  bool overlined = false;

  Word letters() const { return alpha + rule_letter + beta; }
};

DerivationBlock block_for_step(const CpcpInstance& inst, const Word& before,
                               const DerivationStep& step);

/// I b_1 # ... # b_k # t_enter t_switch ~b'_1 ~# ... ~# ~t_enter ~t_switch for a
/// circular orbit from w0 that passes once through each phase.
Word encode_derivation(const CpcpInstance& inst, const DerivationTrace& trace);

/// Rotation of w starting at an I that follows ~t_switch.
Word rotate_to_canonical(const CpcpInstance& inst, const Word& w);

/// Validates the solution structure and replays it as a circular derivation
/// of the reduction system. Throws DecodeError on any structural defect.
DerivationTrace decode_solution(const CpcpInstance& inst, const Word& w);

}  // namespace pcpbench
