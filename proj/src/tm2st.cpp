#include "pcpbench/tm2st.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "pcpbench/errors.hpp"

namespace pcpbench {

namespace {

const Letter kL = Letter::marker("L");
const Letter kR = Letter::marker("R");

}  // namespace

EncodingMap::EncodingMap(const std::vector<std::string>& tape_alphabet) {
  const std::size_t n = tape_alphabet.size();
  if (n == 0) throw ConstructionError("empty tape alphabet");
  width_ = 1;
  while ((std::size_t{1} << width_) < n) ++width_;
  for (std::size_t i = 0; i < n; ++i) {
    Word code;
    for (std::size_t bit = width_; bit-- > 0;) {
      code += Letter::content(((i >> bit) & 1U) != 0 ? "b" : "a");
    }
    table_.emplace_back(tape_alphabet[i], std::move(code));
  }
}

const Word& EncodingMap::encode(const std::string& symbol) const {
  for (const auto& [name, code] : table_) {
    if (name == symbol) return code;
  }
  throw EncodingError("tape symbol '" + symbol + "' has no code");
}

Word EncodingMap::encode(const Word& w) const {
  Word out;
  for (const auto& a : w) {
    if (a.role() == Role::content) {
      out += encode(a.base()).overlined(a.overlined());
    } else {
      out += a;
    }
  }
  return out;
}

Word EncodingMap::decode(const Word& w) const {
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i].role() != Role::content) {
      out += w[i++];
      continue;
    }
    const bool over = w[i].overlined();
    if (i + width_ > w.size()) throw EncodingError("truncated code block in '" + w.spelling() + "'");
    const Word block = w.slice(i, width_).overlined(false);
    auto it = std::find_if(table_.begin(), table_.end(),
                           [&](const auto& entry) { return entry.second == block; });
    if (it == table_.end()) throw EncodingError("unknown code block '" + block.spelling() + "'");
    out += Letter::content(it->first).with_overline(over);
    i += width_;
  }
  return out;
}

std::string_view to_string(RuleRole role) {
  switch (role) {
    case RuleRole::simulate: return "simulate";
    case RuleRole::extend: return "extend";
    case RuleRole::cancel: return "cancel";
    case RuleRole::to_intermediate: return "to-intermediate";
    case RuleRole::phase_switch: return "phase-switch";
    case RuleRole::ov_simulate: return "ov-simulate";
    case RuleRole::ov_extend: return "ov-extend";
    case RuleRole::ov_cancel: return "ov-cancel";
    case RuleRole::ov_to_intermediate: return "ov-to-intermediate";
    case RuleRole::ov_phase_switch: return "ov-phase-switch";
  }
  return "?";
}

RuleRole rule_role_from_string(std::string_view name) {
  for (auto r : {RuleRole::simulate, RuleRole::extend, RuleRole::cancel,
                 RuleRole::to_intermediate, RuleRole::phase_switch, RuleRole::ov_simulate,
                 RuleRole::ov_extend, RuleRole::ov_cancel, RuleRole::ov_to_intermediate,
                 RuleRole::ov_phase_switch}) {
    if (to_string(r) == name) return r;
  }
  throw ParseError("unknown rule role '" + std::string(name) + "'");
}

bool is_overlined_role(RuleRole role) { return role >= RuleRole::ov_simulate; }

RuleRole overlined_role(RuleRole role) {
  if (is_overlined_role(role)) return role;
  return static_cast<RuleRole>(static_cast<int>(role) + 5);
}

Alphabet ReductionSystem::context() const {
  return {Letter::content("a"), Letter::content("b"), kL, kR};
}

Alphabet ReductionSystem::state_class() const {
  Alphabet out{s};
  for (const auto& q : states) out.insert(Letter::state(q));
  return out;
}

SpellingContext ReductionSystem::spelling() const {
  SpellingContext ctx;
  ctx.states.insert(states.begin(), states.end());
  return ctx;
}

std::vector<std::size_t> ReductionSystem::rules_with_role(RuleRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == role) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<RoledRule> base_rules_with_roles(const TuringMachine& tm) {
  std::vector<RoledRule> out;
  auto add = [&](Word lhs, Word rhs, RuleRole role) {
    out.push_back({Rule(std::move(lhs), std::move(rhs)), role});
  };
  const Letter blank = tm.blank_letter();
  for (const auto& t : tm.transitions()) {
    const Letter q = Letter::state(t.from);
    const Letter p = Letter::state(t.to);
    const Letter b = tm.tape_letter(t.read);
    const Letter c = tm.tape_letter(t.write);
    switch (t.move) {
      case Move::right: {
        std::vector<Letter> contexts;
        for (const auto& sym : tm.tape_alphabet()) contexts.push_back(tm.tape_letter(sym));
        contexts.push_back(kL);
        for (const auto& a : contexts) add({a, q, b}, {a, c, p}, RuleRole::simulate);
        break;
      }
      case Move::stay:
        add({q, b}, {p, c}, RuleRole::simulate);
        break;
      case Move::left:
        for (const auto& sym : tm.tape_alphabet()) {
          const Letter a = tm.tape_letter(sym);
          add({a, q, b}, {p, a, c}, RuleRole::simulate);
        }
        add({kL, q, b}, {kL, p, blank, c}, RuleRole::simulate);
        break;
    }
  }
  for (const auto& name : tm.states()) {
    if (name == tm.halt() || !tm.has_transitions_from(name)) continue;
    const Letter q = Letter::state(name);
    add({q, kR}, {q, blank, kR}, RuleRole::extend);
  }
  return out;
}

std::vector<RoledRule> cancellation_rules(const TuringMachine& tm) {
  std::vector<RoledRule> out;
  const Letter halt = Letter::state(tm.halt());
  for (const auto& sym : tm.tape_alphabet()) {
    out.push_back({Rule({halt, tm.tape_letter(sym)}, {halt}), RuleRole::cancel});
  }
  for (const auto& sym : tm.tape_alphabet()) {
    out.push_back({Rule({tm.tape_letter(sym), halt, kR}, {halt, kR}), RuleRole::cancel});
  }
  return out;
}

void check_state_names(const TuringMachine& tm) {
  SpellingContext ctx;
  ctx.states.insert(tm.states().begin(), tm.states().end());
  for (const auto& q : tm.states()) {
    const bool blank_free = std::none_of(q.begin(), q.end(), [](char c) { return c == ' '; });
    if (q.empty() || !blank_free || parse_letter(q, ctx) != Letter::state(q)) {
      throw ConstructionError("state name '" + q + "' clashes with a reserved letter spelling");
    }
  }
}

}  // namespace

std::vector<Rule> build_base_rules(const TuringMachine& tm) {
  std::vector<Rule> out;
  for (auto& r : base_rules_with_roles(tm)) out.push_back(std::move(r.rule));
  return out;
}

std::vector<Rule> add_halting_cancellation(std::vector<Rule> rules, const TuringMachine& tm) {
  for (auto& r : cancellation_rules(tm)) rules.push_back(std::move(r.rule));
  return rules;
}

ReductionSystem build_T(const TuringMachine& tm) {
  check_state_names(tm);
  ReductionSystem red;
  red.encoding = EncodingMap(tm.tape_alphabet());
  red.states = tm.states();

  auto plain = base_rules_with_roles(tm);
  for (auto& r : cancellation_rules(tm)) plain.push_back(std::move(r));

  const Letter halt = Letter::state(tm.halt());
  red.u_halt = Word{kL, halt, kR};
  red.w0 = Word{kL, Letter::state(tm.initial())} + red.encoding.encode(tm.blank()) + kR;

  std::vector<RoledRule> normal;
  for (const auto& r : plain) {
    normal.push_back({Rule(red.encoding.encode(r.rule.lhs), red.encoding.encode(r.rule.rhs)),
                      r.role});
  }
  normal.push_back({Rule(red.u_halt, Word(red.s)), RuleRole::to_intermediate});
  normal.push_back({Rule(Word(red.s), red.w0.overlined()), RuleRole::phase_switch});

  std::vector<Rule> rules;
  for (const auto& r : normal) {
    rules.push_back(r.rule);
    red.roles.push_back(r.role);
  }
  for (const auto& r : normal) {
    rules.emplace_back(r.rule.lhs.toggled(), r.rule.rhs.toggled());
    red.roles.push_back(overlined_role(r.role));
  }
  red.system = SemiThueSystem(std::move(rules));
  return red;
}

ValidationReport validate_reduction(const ReductionSystem& red) {
  const Alphabet context = red.context();
  const Alphabet states = red.state_class();

  ValidationReport report;
  {
    // Letters of A, ~A, B, ~B must be pairwise distinct and every rule
    // letter must come from their union.
    std::set<std::string> spellings;
    std::string detail;
    std::size_t total = 0;
    Alphabet sigma;
    for (const auto* cls : {&context, &states}) {
      for (const auto& a : *cls) {
        for (bool over : {false, true}) {
          sigma.insert(a.with_overline(over));
          spellings.insert(a.with_overline(over).spelling());
          ++total;
        }
      }
    }
    if (spellings.size() != total) detail = "two letters of A, ~A, B, ~B share a spelling";
    for (const auto& a : red.system.alphabet()) {
      if (detail.empty() && !sigma.contains(a)) {
        detail = "rule letter " + a.spelling() + " outside A, ~A, B, ~B";
      }
    }
    report.add(check::alphabet_disjoint, detail.empty(), detail);
  }
  {
    std::set<Word> codes;
    bool ok = red.encoding.width() > 0;
    for (const auto& [sym, code] : red.encoding.table()) {
      ok = ok && code.size() == red.encoding.width() && codes.insert(code).second;
    }
    report.add(check::encoding_injective, ok, ok ? "" : "tape codes collide or differ in width");
  }

  for (auto& c : check_class_determinism(red.system, context, states).checks) {
    report.checks.push_back(std::move(c));
  }

  {
    std::string detail;
    const Letter s_bar = red.s.toggled();
    const std::array<std::pair<RuleRole, Rule>, 4> expected{{
        {RuleRole::to_intermediate, Rule(red.u_halt, Word(red.s))},
        {RuleRole::phase_switch, Rule(Word(red.s), red.w0.overlined())},
        {RuleRole::ov_to_intermediate, Rule(red.u_halt.overlined(), Word(s_bar))},
        {RuleRole::ov_phase_switch, Rule(Word(s_bar), red.w0)},
    }};
    for (const auto& [role, rule] : expected) {
      if (!detail.empty()) break;
      const auto idx = red.rules_with_role(role);
      if (idx.size() != 1) {
        detail = std::to_string(idx.size()) + " rules with role " + std::string(to_string(role));
      } else if (red.system.rule(idx.front()) != rule) {
        detail = "rule with role " + std::string(to_string(role)) + " is not " +
                 rule.lhs.spelling() + " -> " + rule.rhs.spelling();
      }
    }
    if (detail.empty() && red.roles.size() != red.system.size()) {
      detail = "role table does not cover every rule";
    }
    report.add(check::phase_rules, detail.empty(), detail);
  }
  report.add(check::w0_not_halt, red.w0 != red.u_halt, red.w0 != red.u_halt ? "" : "w0 == u_halt");
  return report;
}

Configuration decode_configuration(const ReductionSystem& red, const TuringMachine& tm,
                                   const Word& word) {
  const Word w = word.overlined(false);
  if (w.size() < 3 || w.front() != kL || w.back() != kR) {
    throw EncodingError("'" + word.spelling() + "' is not an L...R configuration word");
  }
  std::size_t state_pos = w.size();
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i].role() == Role::state) {
      if (state_pos != w.size()) throw EncodingError("two states in '" + word.spelling() + "'");
      state_pos = i;
    } else if (w[i].role() != Role::content) {
      throw EncodingError("unexpected letter in '" + word.spelling() + "'");
    }
  }
  if (state_pos == w.size()) throw EncodingError("no state in '" + word.spelling() + "'");
  Configuration c{red.encoding.decode(w.slice(1, state_pos - 1)), w[state_pos].base(),
                  red.encoding.decode(w.slice(state_pos + 1, w.size() - state_pos - 2))};
  return normalize(std::move(c), tm.blank_letter());
}

bool bisimulate(const TuringMachine& tm, const ReductionSystem& red, std::size_t max_steps) {
  const RunResult run = run_bounded(tm, Word{}, max_steps);
  const DerivationTrace trace = orbit(red.system, red.w0, max_steps);

  std::vector<Configuration> seen{decode_configuration(red, tm, red.w0)};
  bool left_simulation = false;
  for (const auto& st : trace.steps) {
    const RuleRole role = red.roles.at(st.step.rule);
    if (role == RuleRole::extend) continue;
    if (role != RuleRole::simulate) {
      left_simulation = true;
      break;
    }
    seen.push_back(decode_configuration(red, tm, st.result));
  }

  const bool stuck = !trace.circular() && trace.length() < max_steps;
  if (left_simulation || stuck) {
    return run.status == RunStatus::halted && seen == run.trace;
  }
  return seen.size() <= run.trace.size() &&
         std::equal(seen.begin(), seen.end(), run.trace.begin());
}

}  // namespace pcpbench
