#include "pcpbench/st2cpcp.hpp"

#include <algorithm>

#include "pcpbench/errors.hpp"

namespace pcpbench {

namespace {

const Letter kD = Letter::special("d");
const Letter kE = Letter::special("e");
const Letter kF = Letter::special("f");
const Letter kDollar = Letter::special("$");
const Letter kPound = Letter::special("£");

const std::vector<Letter>& table_letters() {
  static const std::vector<Letter> xs{Letter::content("a"), Letter::content("b"),
                                      Letter::marker("L"), Letter::marker("R")};
  return xs;
}

bool is_phase(RuleRole r) {
  return r == RuleRole::to_intermediate || r == RuleRole::phase_switch ||
         r == RuleRole::ov_to_intermediate || r == RuleRole::ov_phase_switch;
}

// Drops `count` leading copies of `pad`; the table's d^{-1} and e^{-2}.
Word strip_leading(const Word& w, const Letter& pad, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (i >= w.size() || w[i] != pad) {
      throw ConstructionError("image '" + w.spelling() + "' does not start with " +
                              std::to_string(count) + " " + pad.spelling());
    }
  }
  return w.suffix_from(count);
}

bool has_cyclic_factor(const Word& w, const Word& factor) {
  if (w.empty() || factor.size() > w.size()) return false;
  const Word doubled = w + w.prefix(factor.size() - 1);
  return doubled.find(factor).has_value();
}

}  // namespace

Letter CpcpInstance::rule_letter(std::size_t system_index) const {
  for (std::size_t k = 0; k < normal_rules.size(); ++k) {
    if (normal_rules[k] == system_index) return Letter::rule(k);
    if (overlined_rules[k] == system_index) return Letter::rule(k).with_overline();
  }
  throw PreconditionError("system rule " + std::to_string(system_index) + " has no rule letter");
}

std::size_t CpcpInstance::system_rule(const Letter& rule_letter) const {
  const std::size_t k = rule_letter.rule_index();
  if (k >= normal_rules.size()) {
    throw PreconditionError("rule letter " + rule_letter.spelling() + " out of range");
  }
  return rule_letter.overlined() ? overlined_rules[k] : normal_rules[k];
}

CpcpInstance build_instance(const ReductionSystem& red) {
  CpcpInstance inst;
  inst.reduction = red;
  const auto& rules = red.system.rules();

  std::optional<std::size_t> enter, switch_;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (is_overlined_role(red.roles.at(i))) continue;
    const Rule twin(rules[i].lhs.toggled(), rules[i].rhs.toggled());
    auto it = std::find(rules.begin(), rules.end(), twin);
    if (it == rules.end()) {
      throw ConstructionError("rule " + std::to_string(i) + " has no overline twin");
    }
    if (red.roles[i] == RuleRole::to_intermediate) enter = inst.normal_rules.size();
    if (red.roles[i] == RuleRole::phase_switch) switch_ = inst.normal_rules.size();
    inst.normal_rules.push_back(i);
    inst.overlined_rules.push_back(static_cast<std::size_t>(it - rules.begin()));
  }
  if (!enter || !switch_) throw ConstructionError("reduction system lacks its phase rules");
  inst.enter = *enter;
  inst.switch_ = *switch_;

  inst.codomain = {Letter::content("a"), Letter::content("b"), Letter::marker("L"),
                   Letter::marker("R"), kD, kE, kF, kSeparator, kDollar, kPound, red.s};
  for (const auto& q : red.states) inst.codomain.insert(Letter::state(q));

  const Morphism ld2 = left_desync({kD, kD}, inst.codomain);
  const Morphism le2 = left_desync({kE, kE}, inst.codomain);
  const Morphism rd2 = right_desync({kD, kD}, inst.codomain);
  const Morphism re2 = right_desync({kE, kE}, inst.codomain);

  const Word w0 = red.w0.plain();
  const Word u = rules[inst.normal_rules[inst.enter]].lhs.plain();
  const Word s(red.s);
  const Word hash(kSeparator);
  auto& rows = inst.rows;

  rows.push_back({"I", kStartLetter, Word(kDollar) + ld2.apply(w0 + hash) + kD,
                  Word{kPound, kE, kE}});
  for (const auto& x : table_letters()) {
    rows.push_back({"x_1", x.with_subscript(Subscript::one), Word{kD, x, kD}, Word{x, kE, kE}});
  }
  for (const auto& x : table_letters()) {
    rows.push_back({"x_2", x.with_subscript(Subscript::two), Word{kD, kD, x}, Word{x, kE, kE}});
  }
  for (std::size_t k = 0; k < inst.normal_rules.size(); ++k) {
    if (k == inst.enter || k == inst.switch_) continue;
    const Rule& r = rules[inst.normal_rules[k]];
    if (r.rhs.empty()) {
      throw ConstructionError("rule " + std::to_string(k) + " has an empty right side");
    }
    rows.push_back({"rule", Letter::rule(k), strip_leading(ld2.apply(r.rhs.plain()), kD, 1),
                    re2.apply(r.lhs.plain())});
  }
  rows.push_back({"enter", inst.enter_letter(), Word{kD} + s + Word{kF, kF}, re2.apply(u + hash)});
  rows.push_back({"switch", inst.switch_letter(),
                  Word{kF, kDollar, kPound} + le2.apply(w0 + hash) + Word{kE, kE},
                  s + Word{kF, kF, kF, kPound, kDollar, kD, kD}});
  rows.push_back({"#", kSeparator, Word{kD, kD, kSeparator, kD}, Word{kSeparator, kE, kE}});
  for (const auto& x : table_letters()) {
    rows.push_back({"~x_1", x.with_overline().with_subscript(Subscript::one), Word{x, kE, kE},
                    Word{x, kD, kD}});
  }
  for (const auto& x : table_letters()) {
    rows.push_back({"~x_2", x.with_overline().with_subscript(Subscript::two), Word{kE, x, kE},
                    Word{x, kD, kD}});
  }
  for (std::size_t k = 0; k < inst.normal_rules.size(); ++k) {
    if (k == inst.enter || k == inst.switch_) continue;
    const Rule& r = rules[inst.normal_rules[k]];
    rows.push_back({"~rule", Letter::rule(k).with_overline(),
                    strip_leading(le2.apply(r.rhs.plain()), kE, 2) + kE, rd2.apply(r.lhs.plain())});
  }
  rows.push_back({"~enter", inst.enter_letter(true), s + kF, rd2.apply(u + hash)});
  rows.push_back({"~switch", inst.switch_letter(true), Word{kF, kF, kPound},
                  s + Word{kF, kF, kF, kDollar}});
  rows.push_back({"~#", kSeparator.with_overline(), Word{kE, kSeparator, kE, kE},
                  Word{kSeparator, kD, kD}});

  std::vector<std::pair<Letter, Word>> h_images, g_images;
  for (const auto& row : rows) {
    h_images.emplace_back(row.letter, row.h);
    g_images.emplace_back(row.letter, row.g);
  }
  inst.h = Morphism(std::move(h_images), inst.codomain);
  inst.g = Morphism(std::move(g_images), inst.codomain);
  return inst;
}

DerivationBlock block_for_step(const CpcpInstance& inst, const Word& before,
                               const DerivationStep& step) {
  const Rule& r = inst.reduction.system.rule(step.rule);
  if (!before.occurs_at(r.lhs, step.position)) {
    throw EncodingError("step does not apply to '" + before.spelling() + "'");
  }
  DerivationBlock block;
  try {
    block.alpha = before.prefix(step.position).with_subscript(Subscript::one);
    block.beta = before.suffix_from(step.position + r.lhs.size()).with_subscript(Subscript::two);
  } catch (const PreconditionError&) {
    throw EncodingError("context of the redex in '" + before.spelling() +
                        "' holds a non-tape letter");
  }
  block.rule_letter = inst.rule_letter(step.rule);
  block.overlined = block.rule_letter.overlined();
  return block;
}

Word encode_derivation(const CpcpInstance& inst, const DerivationTrace& trace) {
  if (trace.steps.empty()) throw EncodingError("empty derivation");
  if (!trace.circular()) throw EncodingError("derivation is not circular");
  if (trace.start != inst.reduction.w0) throw EncodingError("derivation does not start at w0");

  const auto& steps = trace.steps;
  Word out{kStartLetter};
  std::size_t i = 0;
  auto rule_at = [&](std::size_t idx) -> std::size_t {
    if (idx >= steps.size()) throw EncodingError("derivation ends before both phase switches");
    return steps[idx].step.rule;
  };
  for (bool overlined : {false, true}) {
    const std::size_t enter_rule = overlined ? inst.overlined_rules[inst.enter]
                                             : inst.normal_rules[inst.enter];
    const std::size_t switch_rule = overlined ? inst.overlined_rules[inst.switch_]
                                              : inst.normal_rules[inst.switch_];
    while (rule_at(i) != enter_rule) {
      const DerivationBlock block = block_for_step(inst, trace.before(i), steps[i].step);
      const RuleRole role = inst.reduction.roles.at(steps[i].step.rule);
      if (block.overlined != overlined || is_phase(role)) {
        throw EncodingError("step " + std::to_string(i) + " is out of phase");
      }
      out += block.letters();
      out += kSeparator.with_overline(overlined);
      ++i;
    }
    if (rule_at(i + 1) != switch_rule) {
      throw EncodingError("step " + std::to_string(i + 1) + " should be the phase switch");
    }
    out += inst.enter_letter(overlined);
    out += inst.switch_letter(overlined);
    i += 2;
  }
  if (i != steps.size()) throw EncodingError("derivation continues past its first cycle");
  return out;
}

Word rotate_to_canonical(const CpcpInstance& inst, const Word& w) {
  const Letter last = inst.switch_letter(true);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == kStartLetter && w[(i + w.size() - 1) % w.size()] == last) return w.rotated(i);
  }
  throw DecodeError("no I follows " + last.spelling() + "; no canonical rotation", 0);
}

namespace {

class BlockParser {
 public:
  BlockParser(const CpcpInstance& inst, const Word& w) : inst_(inst), w_(w) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == w_.size(); }

  bool at(const Letter& a) const { return pos_ < w_.size() && w_[pos_] == a; }

  void expect(const Letter& a, const char* what) {
    if (!at(a)) throw DecodeError(std::string("expected ") + what + " " + a.spelling(), pos_);
    ++pos_;
  }

  DerivationBlock block(bool overlined) {
    DerivationBlock b;
    b.overlined = overlined;
    b.alpha = run(Subscript::one, overlined);
    if (pos_ >= w_.size() || !w_[pos_].is_rule() || w_[pos_].overlined() != overlined) {
      throw DecodeError("block has no rule letter", pos_);
    }
    b.rule_letter = w_[pos_];
    const auto k = b.rule_letter.rule_index();
    if (k >= inst_.normal_rules.size() || k == inst_.enter || k == inst_.switch_) {
      throw DecodeError("malformed block: rule letter " + b.rule_letter.spelling(), pos_);
    }
    ++pos_;
    b.beta = run(Subscript::two, overlined);
    return b;
  }

 private:
  Word run(Subscript sub, bool overlined) {
    Word out;
    while (pos_ < w_.size() && w_[pos_].subscript() == sub) {
      if (w_[pos_].overlined() != overlined) throw DecodeError("block mixes phases", pos_);
      out += w_[pos_++];
    }
    return out;
  }

  const CpcpInstance& inst_;
  const Word& w_;
  std::size_t pos_ = 0;
};

}  // namespace

DerivationTrace decode_solution(const CpcpInstance& inst, const Word& w) {
  if (w.empty()) throw DecodeError("empty word", 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!inst.h.defined_on(w[i])) {
      throw DecodeError("letter " + w[i].spelling() + " outside the instance domain", i);
    }
  }
  const Word hw = inst.h.apply(w);
  const Word gw = inst.g.apply(w);
  if (!has_cyclic_factor(hw, Word{kF, kF, kF})) {
    throw DecodeError("no phase switch: no f^3 segment in h(w)", 0);
  }
  for (bool over : {false, true}) {
    if (!has_cyclic_factor(w, Word{inst.enter_letter(over), inst.switch_letter(over)})) {
      throw DecodeError(std::string("no phase switch: w lacks the ") +
                            (over ? "overlined" : "plain") + " enter/switch factor",
                        0);
    }
  }
  if (!is_conjugate(hw, gw)) throw DecodeError("h(w) and g(w) are not conjugate", 0);

  const Word canon = rotate_to_canonical(inst, w);
  const auto& red = inst.reduction;
  BlockParser parser(inst, canon);
  DerivationTrace trace{red.w0, {}};
  Word cur = red.w0;

  auto apply_step = [&](std::size_t rule, std::size_t position, std::size_t at) {
    try {
      Word next = rewrite_at(red.system, cur, {rule, position});
      trace.steps.push_back({{rule, position}, next});
      cur = std::move(next);
    } catch (const RewriteError& e) {
      throw DecodeError(std::string("block inconsistent with the previous word: ") + e.what(), at);
    }
  };

  while (!parser.done()) {
    parser.expect(kStartLetter, "cycle start");
    for (bool overlined : {false, true}) {
      while (!parser.at(inst.enter_letter(overlined))) {
        const std::size_t at = parser.pos();
        const DerivationBlock b = parser.block(overlined);
        const Word alpha = b.alpha.with_subscript(Subscript::none);
        const Word beta = b.beta.with_subscript(Subscript::none);
        const std::size_t rule = inst.system_rule(b.rule_letter);
        if (alpha + red.system.rule(rule).lhs + beta != cur) {
          throw DecodeError("block " + b.letters().spelling() + " does not rewrite '" +
                                cur.spelling() + "'",
                            at);
        }
        apply_step(rule, alpha.size(), at);
        parser.expect(kSeparator.with_overline(overlined), "separator");
      }
      const std::size_t at = parser.pos();
      parser.expect(inst.enter_letter(overlined), "enter rule");
      apply_step(inst.system_rule(inst.enter_letter(overlined)), 0, at);
      parser.expect(inst.switch_letter(overlined), "switch rule");
      apply_step(inst.system_rule(inst.switch_letter(overlined)), 0, at + 1);
    }
  }
  if (!trace.circular()) throw DecodeError("decoded derivation does not return to w0", w.size());
  return trace;
}

}  // namespace pcpbench
