#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcpbench {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A letter was fed to a morphism that is not defined on it.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Bad rule index, or the rule's left side is not at the requested offset.
class RewriteError : public Error {
 public:
  using Error::Error;
};

// A deterministic walk met a word with more than one successor.
class BranchError : public Error {
 public:
  using Error::Error;
};

// Transition function of a Turing machine is not a partial function.
class DeterminismError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pcpbench
