#include "pcpbench/zpcp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pcpbench/errors.hpp"

namespace pcpbench {

BiInfiniteWord::BiInfiniteWord(Word left_period, Word center, Word right_period)
    : left_(std::move(left_period)), center_(std::move(center)), right_(std::move(right_period)) {
  if (left_.empty() || right_.empty()) {
    throw PreconditionError("degenerate period: bi-infinite word with an empty period");
  }
}

const Letter& BiInfiniteWord::at(std::int64_t i) const {
  const auto c = static_cast<std::int64_t>(center_.size());
  if (i >= 0) {
    if (i < c) return center_[static_cast<std::size_t>(i)];
    return right_[static_cast<std::size_t>(i - c) % right_.size()];
  }
  const auto back = static_cast<std::size_t>(-(i + 1)) % left_.size();
  return left_[left_.size() - 1 - back];
}

std::optional<Word> BiInfiniteWord::periodic_root() const {
  const auto p = static_cast<std::int64_t>(primitive_root(right_).size());
  const auto lo = -p - static_cast<std::int64_t>(left_.size());
  const auto hi = static_cast<std::int64_t>(center_.size());
  for (std::int64_t i = lo; i < hi; ++i) {
    if (at(i) != at(i + p)) return std::nullopt;
  }
  Word z;
  for (std::int64_t i = 0; i < p; ++i) z += at(i);
  return z;
}

BiInfiniteWord image_biword(const Morphism& m, const IndexSequence& seq) {
  Word l = m.apply(seq.left_period());
  Word r = m.apply(seq.right_period());
  if (l.empty() || r.empty()) {
    throw PreconditionError("degenerate period: a period of the sequence has an empty image");
  }
  return {std::move(l), m.apply(seq.center()), std::move(r)};
}

std::optional<std::int64_t> eq_mod_shift_periodic(const BiInfiniteWord& p,
                                                  const BiInfiniteWord& q) {
  const auto zp = p.periodic_root();
  const auto zq = q.periodic_root();
  if (!zp || !zq) {
    throw PreconditionError("not purely periodic; use verify_window for a windowed check");
  }
  const auto n = zp->size();
  if (zq->size() != n) return std::nullopt;
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = (*zp)[i] == (*zq)[(i + s) % n];
    if (ok) return static_cast<std::int64_t>(s);
  }
  return std::nullopt;
}

WindowResult compare_window(const BiInfiniteWord& u, const BiInfiniteWord& v, std::int64_t shift,
                            std::size_t radius) {
  for (std::size_t m = 0; m <= radius; ++m) {
    const auto i = static_cast<std::int64_t>(m);
    if (u.at(i) != v.at(i + shift) || u.at(-i) != v.at(-i + shift)) return {m};
  }
  return {};
}

WindowResult verify_window(const Morphism& h, const Morphism& g, const IndexSequence& seq,
                           std::int64_t shift, std::size_t radius) {
  return compare_window(image_biword(h, seq), image_biword(g, seq), shift, radius);
}

std::int64_t ShiftSchedule::next() {
  while (true) {
    const std::int64_t candidate = s_;
    ++tests_;
    s_ = tests_ % 2 == 1 ? -s_ : std::abs(s_) + 1;
    // The literal rule yields 0 twice (0, -0, 1, -1, ...); every other value
    // appears once.
    if (candidate == 0) {
      if (zero_done_) continue;
      zero_done_ = true;
    }
    return candidate;
  }
}

Verdict test_procedure(const Morphism& h, const Morphism& g, const IndexSequence& seq,
                       std::size_t max_rounds, std::size_t radius) {
  if (max_rounds == 0) throw PreconditionError("test_procedure needs at least one round");
  const BiInfiniteWord u = image_biword(h, seq);
  const BiInfiniteWord v = image_biword(g, seq);
  ShiftSchedule schedule;
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    const std::int64_t s = schedule.next();
    if (compare_window(u, v, s, radius).ok()) {
      return {Verdict::Kind::accepted, s, round, radius};
    }
  }
  return {Verdict::Kind::inconclusive, 0, max_rounds, radius};
}

std::vector<std::pair<Letter, Letter>> pair_code_prefix(const IndexSequence& seq, std::size_t n) {
  if (n == 0) throw PreconditionError("pair_code_prefix needs n >= 1");
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::int64_t>(k);
    out.emplace_back(seq.at(i), seq.at(-i));
  }
  return out;
}

std::optional<PeriodicSolution> find_periodic_solution(const Morphism& h, const Morphism& g,
                                                       std::size_t max_len) {
  if (max_len == 0) throw PreconditionError("find_periodic_solution needs max_len >= 1");
  const auto& order = h.domain();
  if (order.empty()) return std::nullopt;
  std::size_t count = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    count *= order.size();
    for (std::size_t idx = 0; idx < count; ++idx) {
      const Word z = nth_word(order, len, idx);
      const Word hz = h.apply(z);
      const Word gz = g.apply(z);
      if (hz.empty() || gz.empty()) continue;
      const auto u = BiInfiniteWord::periodic(hz);
      const auto v = BiInfiniteWord::periodic(gz);
      const auto s = eq_mod_shift_periodic(u, v);
      if (!s) continue;
      if (compare_window(u, v, *s, 10 * std::max(hz.size(), gz.size())).ok()) {
        return PeriodicSolution{z, *s};
      }
    }
  }
  return std::nullopt;
}

Bridge cpcp_bridge(const Morphism& h, const Morphism& g, const Word& w, const Split& split) {
  if (w.empty()) throw PreconditionError("cpcp_bridge needs a nonempty solution");
  if (h.apply(w) != split.u + split.v || g.apply(w) != split.v + split.u) {
    throw PreconditionError("split does not witness h(w) = uv, g(w) = vu");
  }
  return {BiInfiniteWord::periodic(w), -static_cast<std::int64_t>(split.u.size())};
}

Letter index_letter(std::size_t i) { return Letter::content(std::to_string(i + 1)); }

ZpcpInstance ZpcpInstance::from_pairs(const std::vector<std::pair<Word, Word>>& pairs) {
  std::vector<std::pair<Letter, Word>> hs, gs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    hs.emplace_back(index_letter(i), pairs[i].first);
    gs.emplace_back(index_letter(i), pairs[i].second);
  }
  return {Morphism(std::move(hs)), Morphism(std::move(gs))};
}

}  // namespace pcpbench
