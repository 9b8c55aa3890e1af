#pragma once

// Deterministic single-tape Turing machines with a unique halting state.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcpbench/wordcore.hpp"

namespace pcpbench {

enum class Move { left, right, stay };

struct Transition {
  std::string from;
  std::string read;
  std::string to;
  std::string write;
  Move move = Move::stay;
};

class TuringMachine {
 public:
  /// Throws DeterminismError when two transitions share (from, read), and
  /// ConstructionError for unknown states/symbols or transitions leaving halt.
  TuringMachine(std::vector<std::string> states, std::vector<std::string> input_alphabet,
                std::vector<std::string> tape_alphabet, std::string blank,
                std::vector<Transition> transitions, std::string initial, std::string halt);

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& input_alphabet() const noexcept { return input_; }
  /// Declared order; the blank is always a member.
  const std::vector<std::string>& tape_alphabet() const noexcept { return tape_; }
  const std::string& blank() const noexcept { return blank_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::string& initial() const noexcept { return initial_; }
  const std::string& halt() const noexcept { return halt_; }

  const Transition* lookup(const std::string& state, const std::string& read) const;
  bool has_transitions_from(const std::string& state) const;

  Letter tape_letter(const std::string& symbol) const { return Letter::content(symbol); }
  Letter blank_letter() const { return Letter::content(blank_); }

 private:
  std::vector<std::string> states_;
  std::vector<std::string> input_;
  std::vector<std::string> tape_;
  std::string blank_;
  std::vector<Transition> transitions_;
  std::string initial_;
  std::string halt_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

/// left · state · right with the head on the first letter of `right` (a blank
/// when right is empty). Canonical: no leading blanks in left, no trailing
/// blanks in right.
struct Configuration {
  Word left;
  std::string state;
  Word right;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration normalize(Configuration c, const Letter& blank);

std::string to_string(const Configuration& c);

std::optional<Configuration> step(const TuringMachine& tm, const Configuration& c);

enum class RunStatus { halted, running };

struct RunResult {
  std::vector<Configuration> trace;  // includes the initial configuration
  RunStatus status = RunStatus::running;

  std::size_t steps() const noexcept { return trace.empty() ? 0 : trace.size() - 1; }
};

/// Runs from (empty, initial, input). `halted` means no transition applies to
/// the last configuration.
RunResult run_bounded(const TuringMachine& tm, const Word& input, std::size_t max_steps);

}  // namespace pcpbench
