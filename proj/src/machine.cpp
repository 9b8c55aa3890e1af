#include "pcpbench/machine.hpp"

#include <algorithm>

#include "pcpbench/errors.hpp"

namespace pcpbench {

namespace {

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> states,
                             std::vector<std::string> input_alphabet,
                             std::vector<std::string> tape_alphabet, std::string blank,
                             std::vector<Transition> transitions, std::string initial,
                             std::string halt)
    : states_(std::move(states)),
      input_(std::move(input_alphabet)),
      tape_(std::move(tape_alphabet)),
      blank_(std::move(blank)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      halt_(std::move(halt)) {
  if (!contains(states_, initial_)) throw ConstructionError("initial state not in Q");
  if (!contains(states_, halt_)) throw ConstructionError("halt state not in Q");
  if (!contains(tape_, blank_)) tape_.insert(tape_.begin(), blank_);
  for (const auto& s : input_) {
    if (s == blank_) throw ConstructionError("blank symbol in the input alphabet");
    if (!contains(tape_, s)) throw ConstructionError("input symbol '" + s + "' not on tape");
  }
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if (!contains(states_, t.from) || !contains(states_, t.to)) {
      throw ConstructionError("transition " + std::to_string(i) + " uses an unknown state");
    }
    if (!contains(tape_, t.read) || !contains(tape_, t.write)) {
      throw ConstructionError("transition " + std::to_string(i) + " uses an unknown symbol");
    }
    if (t.from == halt_) throw ConstructionError("transition leaving the halt state");
    auto [it, fresh] = index_.emplace(std::make_pair(t.from, t.read), i);
    if (!fresh) {
      throw DeterminismError("two transitions for (" + t.from + ", " + t.read + "): " +
                             std::to_string(it->second) + " and " + std::to_string(i));
    }
  }
}

const Transition* TuringMachine::lookup(const std::string& state, const std::string& read) const {
  auto it = index_.find({state, read});
  return it == index_.end() ? nullptr : &transitions_[it->second];
}

bool TuringMachine::has_transitions_from(const std::string& state) const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [&](const Transition& t) { return t.from == state; });
}

Configuration normalize(Configuration c, const Letter& blank) {
  std::size_t lead = 0;
  while (lead < c.left.size() && c.left[lead] == blank) ++lead;
  std::size_t keep = c.right.size();
  while (keep > 0 && c.right[keep - 1] == blank) --keep;
  return {c.left.suffix_from(lead), std::move(c.state), c.right.prefix(keep)};
}

std::string to_string(const Configuration& c) {
  std::string out = c.left.spelling();
  if (!out.empty()) out += ' ';
  out += '[' + c.state + ']';
  if (!c.right.empty()) out += ' ' + c.right.spelling();
  return out;
}

std::optional<Configuration> step(const TuringMachine& tm, const Configuration& c) {
  const Letter blank = tm.blank_letter();
  const Letter head = c.right.empty() ? blank : c.right.front();
  const Transition* t = tm.lookup(c.state, head.base());
  if (t == nullptr) return std::nullopt;

  const Word rest = c.right.empty() ? Word{} : c.right.suffix_from(1);
  const Letter written = tm.tape_letter(t->write);
  Configuration next{c.left, t->to, {}};
  switch (t->move) {
    case Move::stay:
      next.right = Word(written) + rest;
      break;
    case Move::right:
      next.left += written;
      next.right = rest;
      break;
    case Move::left:
      if (c.left.empty()) {
        next.right = Word{blank, written} + rest;
      } else {
        next.right = Word{c.left.back(), written} + rest;
        next.left = c.left.prefix(c.left.size() - 1);
      }
      break;
  }
  return normalize(std::move(next), blank);
}

RunResult run_bounded(const TuringMachine& tm, const Word& input, std::size_t max_steps) {
  RunResult out;
  out.trace.push_back(normalize({Word{}, tm.initial(), input}, tm.blank_letter()));
  while (true) {
    auto next = step(tm, out.trace.back());
    if (!next) {
      out.status = RunStatus::halted;
      break;
    }
    if (out.steps() == max_steps) break;
    out.trace.push_back(std::move(*next));
  }
  return out;
}

}  // namespace pcpbench
