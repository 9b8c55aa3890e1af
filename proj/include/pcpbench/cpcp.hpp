#pragma once

// Bounded search and checking for the conjugate-PCP and the permutational
// PCP family.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pcpbench/wordcore.hpp"

namespace pcpbench {

/// h(w) = u v and g(w) = v u for every split.
struct ConjugateSolution {
  Word w;
  std::vector<Split> splits;
};

/// Shortest, then lexicographically first (in h's domain order), nonempty w
/// with h(w) and g(w) conjugate. `workers` > 1 splits each length across
/// threads; the result does not depend on it.
std::optional<ConjugateSolution> solve_bounded(const Morphism& h, const Morphism& g,
                                               std::size_t max_len, std::size_t workers = 1);

/// Splits of (h(w), g(w)); nullopt when the images are not conjugate.
std::optional<std::vector<Split>> check_solution(const Morphism& h, const Morphism& g,
                                                 const Word& w);

/// Which pair of images the (2,2)-witness relates.
enum class WitnessOrientation {
  g_xy_h_yx,  // g(xy) = z w', h(yx) = w' z
  h_xy_g_yx,  // h(xy) = z w', g(yx) = w' z
};

struct Lemma1Certificate {
  Word w;        // xy
  Split split;   // h(xy) = u v, g(xy) = v u
  WitnessOrientation orientation = WitnessOrientation::g_xy_h_yx;
  Word z;
  Word w_prime;
  bool image_of_y_is_prefix = false;  // which case of the argument applied
};

/// Turns a (2,2)-permutational witness (xy, yx) into a conjugate-PCP
/// solution xy. Throws PreconditionError if (x, y) is not a witness.
Lemma1Certificate lemma1_backward(const Morphism& h, const Morphism& g, const Word& x,
                                  const Word& y);

struct PermLimits {
  std::size_t max_m = 4;
  std::size_t max_n = 4;
  std::size_t max_word = 12;
};

/// u ~m v and g(u) ~n h(v).
std::optional<std::pair<PermWitness, PermWitness>> perm_pcp_check(
    const Morphism& g, const Morphism& h, const Word& u, const Word& v, std::size_t m,
    std::size_t n, const PermLimits& limits = {});

}  // namespace pcpbench
