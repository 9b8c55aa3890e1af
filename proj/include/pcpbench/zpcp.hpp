#pragma once

// Bi-infinite PCP: ultimately periodic bi-infinite words, equality up to a
// shift, periodic candidate search and the windowed shift test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcpbench/wordcore.hpp"

namespace pcpbench {

/// ...lll · c · rrr... Position 0 is the first letter of the center, or of
/// the right period when the center is empty; position -1 is the last
/// letter of the left period.
class BiInfiniteWord {
 public:
  BiInfiniteWord(Word left_period, Word center, Word right_period);
  static BiInfiniteWord periodic(const Word& z) { return {z, Word{}, z}; }

  const Word& left_period() const noexcept { return left_; }
  const Word& center() const noexcept { return center_; }
  const Word& right_period() const noexcept { return right_; }

  const Letter& at(std::int64_t i) const;

  /// The primitive z with this word equal to z^Z (z starting at position 0),
  /// or nullopt if the word is not purely periodic.
  std::optional<Word> periodic_root() const;

 private:
  Word left_;
  Word center_;
  Word right_;
};

/// Index sequences are bi-infinite words over the letters naming the pairs.
using IndexSequence = BiInfiniteWord;

inline const Letter& letter_at(const BiInfiniteWord& w, std::int64_t i) { return w.at(i); }

BiInfiniteWord image_biword(const Morphism& m, const IndexSequence& seq);

/// Least s >= 0 with p(i) = q(i + s) for all i. Exact; both words must be
/// purely periodic (PreconditionError otherwise, use verify_window).
std::optional<std::int64_t> eq_mod_shift_periodic(const BiInfiniteWord& p,
                                                  const BiInfiniteWord& q);

struct WindowResult {
  std::optional<std::size_t> mismatch;  // first failing radius

  bool ok() const noexcept { return !mismatch; }
};

/// Checks u(m) = v(m + s) and u(-m) = v(-m + s) for m = 0..radius.
WindowResult compare_window(const BiInfiniteWord& u, const BiInfiniteWord& v, std::int64_t shift,
                            std::size_t radius);

WindowResult verify_window(const Morphism& h, const Morphism& g, const IndexSequence& seq,
                           std::int64_t shift, std::size_t radius);

/// Shifts tried by the test loop: start at 0, negate after an odd-numbered
/// failure and step to |s|+1 after an even-numbered one, skipping the
/// repeated 0. Yields 0, 1, -1, 2, -2, ...
class ShiftSchedule {
 public:
  std::int64_t next();

 private:
  std::int64_t s_ = 0;
  std::size_t tests_ = 0;
  bool zero_done_ = false;
};

struct Verdict {
  enum class Kind { accepted, rejected, inconclusive };

  Kind kind = Kind::inconclusive;
  std::int64_t shift = 0;       // accepted only
  std::size_t rounds_used = 0;  // accepting round, or all rounds
  std::size_t window = 0;
};

/// Never returns `rejected`: finitely many finite windows cannot rule out
/// every shift.
Verdict test_procedure(const Morphism& h, const Morphism& g, const IndexSequence& seq,
                       std::size_t max_rounds, std::size_t radius);

/// (i_0, i_0)(i_1, i_-1)...(i_{n-1}, i_{-(n-1)}).
std::vector<std::pair<Letter, Letter>> pair_code_prefix(const IndexSequence& seq, std::size_t n);

struct PeriodicSolution {
  Word z;
  std::int64_t shift = 0;
};

/// Smallest z (length-lex over h's domain order) whose periodic sequence z^Z
/// has images equal up to shift.
std::optional<PeriodicSolution> find_periodic_solution(const Morphism& h, const Morphism& g,
                                                       std::size_t max_len);

struct Bridge {
  IndexSequence seq;
  std::int64_t shift = 0;
};

/// From a conjugate-PCP solution h(w) = uv, g(w) = vu: the sequence w^Z with
/// shift -|u|, since g(w^Z)(i) = h(w^Z)(i + |u|).
Bridge cpcp_bridge(const Morphism& h, const Morphism& g, const Word& w, const Split& split);

/// Pairs (u_i, v_i) with u_i = h(i), v_i = g(i) over index letters "1".."n".
struct ZpcpInstance {
  Morphism h;
  Morphism g;

  static ZpcpInstance from_pairs(const std::vector<std::pair<Word, Word>>& pairs);
};

Letter index_letter(std::size_t i);

}  // namespace pcpbench
