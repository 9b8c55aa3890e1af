#include "pcpbench/cpcp.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>

#include "pcpbench/errors.hpp"

namespace pcpbench {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / base) {
      throw PreconditionError("search space too large");
    }
    out *= base;
  }
  return out;
}

std::optional<std::size_t> first_solution(const Morphism& h, const Morphism& g, std::size_t len,
                                          std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    const Word w = nth_word(h.domain(), len, i);
    if (is_conjugate(h.apply(w), g.apply(w))) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConjugateSolution> solve_bounded(const Morphism& h, const Morphism& g,
                                               std::size_t max_len, std::size_t workers) {
  const std::set<Letter> hd(h.domain().begin(), h.domain().end());
  const std::set<Letter> gd(g.domain().begin(), g.domain().end());
  if (hd != gd) throw PreconditionError("h and g have different domains");
  if (hd.empty()) return std::nullopt;
  workers = std::max<std::size_t>(workers, 1);

  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t total = checked_pow(h.domain().size(), len);
    std::optional<std::size_t> best;
    if (workers == 1 || total < 2 * workers) {
      best = first_solution(h, g, len, 0, total);
    } else {
      std::vector<std::future<std::optional<std::size_t>>> parts;
      const std::size_t chunk = (total + workers - 1) / workers;
      for (std::size_t b = 0; b < total; b += chunk) {
        parts.push_back(std::async(std::launch::async, first_solution, std::cref(h), std::cref(g),
                                   len, b, std::min(total, b + chunk)));
      }
      // Chunks are in order, so the first hit is the global minimum.
      for (auto& p : parts) {
        auto r = p.get();
        if (!best && r) best = r;
      }
    }
    if (best) {
      Word w = nth_word(h.domain(), len, *best);
      auto splits = conjugacy_splits(h.apply(w), g.apply(w));
      return ConjugateSolution{std::move(w), std::move(splits)};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Split>> check_solution(const Morphism& h, const Morphism& g,
                                                 const Word& w) {
  if (w.empty()) throw PreconditionError("the empty word is never a solution");
  auto splits = conjugacy_splits(h.apply(w), g.apply(w));
  if (splits.empty()) return std::nullopt;
  return splits;
}

namespace {

// Given first(xy) = z w' and second(yx) = w' z, returns (u, v) with
// second(xy) = u v and first(xy) = v u.
std::optional<Lemma1Certificate> backward_once(const Morphism& first, const Morphism& second,
                                               const Word& x, const Word& y) {
  const Word xy = x + y;
  const Word first_xy = first.apply(xy);
  const Word second_xy = second.apply(xy);
  const Word second_x = second.apply(x);
  const Word second_y = second.apply(y);
  for (const auto& [z, w_prime] : conjugacy_splits(first_xy, second.apply(y + x))) {
    Lemma1Certificate cert;
    cert.w = xy;
    cert.z = z;
    cert.w_prime = w_prime;
    if (w_prime.starts_with(second_y)) {
      // w' = second(y) r
      cert.image_of_y_is_prefix = true;
      cert.split = {w_prime.suffix_from(second_y.size()), z + second_y};
    } else if (second_y.starts_with(w_prime)) {
      // second(y) = w' r, z = r second(x)
      cert.split = {second_x + w_prime, second_y.suffix_from(w_prime.size())};
    } else {
      continue;
    }
    if (cert.split.u + cert.split.v == second_xy && cert.split.v + cert.split.u == first_xy) {
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

Lemma1Certificate lemma1_backward(const Morphism& h, const Morphism& g, const Word& x,
                                  const Word& y) {
  if (x.empty() && y.empty()) throw PreconditionError("not a (2,2)-witness: xy is empty");
  if (auto cert = backward_once(g, h, x, y)) {
    cert->orientation = WitnessOrientation::g_xy_h_yx;
    return *cert;
  }
  if (auto cert = backward_once(h, g, x, y)) {
    // Produced g(xy) = u v, h(xy) = v u; flip into h = u v, g = v u.
    std::swap(cert->split.u, cert->split.v);
    cert->orientation = WitnessOrientation::h_xy_g_yx;
    return *cert;
  }
  throw PreconditionError("not a (2,2)-witness: (" + x.spelling() + " | " + y.spelling() + ")");
}

std::optional<std::pair<PermWitness, PermWitness>> perm_pcp_check(
    const Morphism& g, const Morphism& h, const Word& u, const Word& v, std::size_t m,
    std::size_t n, const PermLimits& limits) {
  if (m == 0 || n == 0) throw PreconditionError("m and n must be positive");
  if (m > limits.max_m || n > limits.max_n) throw PreconditionError("m or n above the limit");
  if (u.size() > limits.max_word || v.size() > limits.max_word) {
    throw PreconditionError("word longer than the limit");
  }
  auto pre = sim_m(u, v, m);
  if (!pre) return std::nullopt;
  auto img = sim_m(g.apply(u), h.apply(v), n);
  if (!img) return std::nullopt;
  return std::make_pair(std::move(*pre), std::move(*img));
}

}  // namespace pcpbench
