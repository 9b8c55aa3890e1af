#pragma once

// Letters, finite words, morphisms and the conjugacy / ~m relations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcpbench {

enum class Role : std::uint8_t { content, marker, state, special, rule_ref };

enum class Subscript : std::uint8_t { none, one, two };

/// A decorated symbol. The decorations (overline, subscript, role) are part of
/// the value: `a`, `~a` and `a_1` are three different letters.
class Letter {
 public:
  static Letter content(std::string base);
  static Letter marker(std::string base);
  static Letter state(std::string name);
  static Letter special(std::string base);
  static Letter rule(std::size_t index);

  const std::string& base() const noexcept { return base_; }
  Role role() const noexcept { return role_; }
  bool overlined() const noexcept { return overlined_; }
  Subscript subscript() const noexcept { return subscript_; }
  bool is_rule() const noexcept { return role_ == Role::rule_ref; }
  std::size_t rule_index() const;

  Letter with_overline(bool on = true) const;
  Letter toggled() const { return with_overline(!overlined_); }
  /// Only content and marker letters may carry a subscript.
  Letter with_subscript(Subscript s) const;
  /// Same letter with overline and subscript removed.
  Letter plain() const;

  /// Canonical spelling: "~" prefix for overline, "_1"/"_2" suffix, "t<k>"
  /// for rule references.
  std::string spelling() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  Letter(Role role, std::string base, std::size_t rule)
      : role_(role), rule_(rule), base_(std::move(base)) {}

  Role role_ = Role::content;
  std::size_t rule_ = 0;
  std::string base_;
  bool overlined_ = false;
  Subscript subscript_ = Subscript::none;
};

using Alphabet = std::set<Letter>;

/// Names that are given a fixed role when a spelling is parsed. Anything
/// else is a content letter unless listed in `states`.
struct SpellingContext {
  std::set<std::string, std::less<>> states;
};

Letter parse_letter(std::string_view token, const SpellingContext& ctx = {});

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(const Letter& letter) : letters_{letter} {}

  /// Parses whitespace separated letter spellings.
  static Word parse(std::string_view text, const SpellingContext& ctx = {});

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word slice(std::size_t pos, std::size_t len = std::string::npos) const;
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix_from(std::size_t pos) const { return slice(pos); }

  bool occurs_at(const Word& needle, std::size_t pos) const;
  std::optional<std::size_t> find(const Word& needle, std::size_t from = 0) const;
  bool starts_with(const Word& p) const { return occurs_at(p, 0); }
  bool ends_with(const Word& s) const {
    return s.size() <= size() && occurs_at(s, size() - s.size());
  }

  Word power(std::size_t k) const;
  /// Rotation moving the first `k` letters to the end.
  Word rotated(std::size_t k) const;

  Word overlined(bool on = true) const;
  Word toggled() const;
  Word plain() const;
  Word with_subscript(Subscript s) const;

  Word& operator+=(const Word& other);
  Word& operator+=(const Letter& letter);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, const Letter& rhs) { return lhs += rhs; }

  std::string spelling() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Alphabet letters_of(const Word& w);

/// x = u v and y = v u.
struct Split {
  Word u;
  Word v;

  friend bool operator==(const Split&, const Split&) = default;
};

/// u = factors[0] ... factors[m-1] and
/// v = factors[permutation[0]] ... factors[permutation[m-1]].
struct PermWitness {
  std::vector<Word> factors;
  std::vector<std::size_t> permutation;

  Word source() const;
  Word permuted() const;
};

/// Total map from a finite domain into words. Domain order is the order in
/// which images were supplied; searches use it as the letter order.
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(std::vector<std::pair<Letter, Word>> images);
  /// Checks that every image letter lies in `codomain`.
  Morphism(std::vector<std::pair<Letter, Word>> images, Alphabet codomain);

  const std::vector<Letter>& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  bool defined_on(const Letter& a) const { return images_.contains(a); }
  const Word& image(const Letter& a) const;
  Word apply(const Word& w) const;

 private:
  std::vector<Letter> domain_;
  std::map<Letter, Word> images_;
  Alphabet codomain_;
};

Word apply(const Morphism& h, const Word& w);

/// l_x(a) = x a for every a in `alphabet`.
Morphism left_desync(const Word& x, const Alphabet& alphabet);
/// r_x(a) = a x for every a in `alphabet`.
Morphism right_desync(const Word& x, const Alphabet& alphabet);

/// Minimal-|u| split, if x and y are conjugate.
std::optional<Split> is_conjugate(const Word& x, const Word& y);
/// Every split, ordered by |u|.
std::vector<Split> conjugacy_splits(const Word& x, const Word& y);

/// u ~m v by brute force. Factorizations are tried in lexicographic order of
/// their cut points, permutations in lexicographic order.
std::optional<PermWitness> sim_m(const Word& u, const Word& v, std::size_t m);

Word primitive_root(const Word& w);

/// The index-th word of length len in lexicographic order over `order`.
Word nth_word(const std::vector<Letter>& order, std::size_t len, std::size_t index);

}  // namespace pcpbench

template <>
struct std::hash<pcpbench::Letter> {
  std::size_t operator()(const pcpbench::Letter& a) const noexcept;
};

template <>
struct std::hash<pcpbench::Word> {
  std::size_t operator()(const pcpbench::Word& w) const noexcept;
};
