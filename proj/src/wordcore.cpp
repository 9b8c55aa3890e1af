#include "pcpbench/wordcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pcpbench/errors.hpp"

namespace pcpbench {

Letter Letter::content(std::string base) { return Letter(Role::content, std::move(base), 0); }
Letter Letter::marker(std::string base) { return Letter(Role::marker, std::move(base), 0); }
Letter Letter::state(std::string name) { return Letter(Role::state, std::move(name), 0); }
Letter Letter::special(std::string base) { return Letter(Role::special, std::move(base), 0); }
Letter Letter::rule(std::size_t index) {
  return Letter(Role::rule_ref, "t" + std::to_string(index), index);
}

std::size_t Letter::rule_index() const {
  if (role_ != Role::rule_ref) {
    throw PreconditionError("letter " + spelling() + " is not a rule reference");
  }
  return rule_;
}

Letter Letter::with_overline(bool on) const {
  Letter out = *this;
  out.overlined_ = on;
  return out;
}

Letter Letter::with_subscript(Subscript s) const {
  if (s != Subscript::none && role_ != Role::content && role_ != Role::marker) {
    throw PreconditionError("subscripts apply to content and marker letters only, not " +
                            spelling());
  }
  Letter out = *this;
  out.subscript_ = s;
  return out;
}

Letter Letter::plain() const {
  Letter out = *this;
  out.overlined_ = false;
  out.subscript_ = Subscript::none;
  return out;
}

std::string Letter::spelling() const {
  std::string out;
  if (overlined_) out += '~';
  out += base_;
  if (subscript_ == Subscript::one) out += "_1";
  if (subscript_ == Subscript::two) out += "_2";
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Letter parse_letter(std::string_view token, const SpellingContext& ctx) {
  const std::string original(token);
  bool overlined = false;
  if (token.starts_with('~')) {
    overlined = true;
    token.remove_prefix(1);
  }
  Subscript sub = Subscript::none;
  if (token.size() > 2 && (token.ends_with("_1") || token.ends_with("_2"))) {
    sub = token.back() == '1' ? Subscript::one : Subscript::two;
    token.remove_suffix(2);
  }
  if (token.empty()) throw ParseError("empty letter spelling in '" + original + "'");

  auto make = [&]() -> Letter {
    if (token.size() > 1 && token.front() == 't' && all_digits(token.substr(1))) {
      return Letter::rule(std::stoul(std::string(token.substr(1))));
    }
    if (token == "a" || token == "b") return Letter::content(std::string(token));
    if (token == "L" || token == "R") return Letter::marker(std::string(token));
    if (token == "#" || token == "$" || token == "£" || token == "I" || token == "d" ||
        token == "e" || token == "f" || token == "s") {
      return Letter::special(std::string(token));
    }
    if (ctx.states.contains(token)) return Letter::state(std::string(token));
    return Letter::content(std::string(token));
  };
  Letter out = make().with_overline(overlined);
  if (sub != Subscript::none) {
    if (out.role() != Role::content && out.role() != Role::marker) {
      throw ParseError("subscript on non-content letter '" + original + "'");
    }
    out = out.with_subscript(sub);
  }
  return out;
}

Word Word::parse(std::string_view text, const SpellingContext& ctx) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_letter(token, ctx));
  return Word(std::move(out));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw PreconditionError("slice start past end of word");
  len = std::min(len, size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::occurs_at(const Word& needle, std::size_t pos) const {
  if (pos > size() || needle.size() > size() - pos) return false;
  return std::equal(needle.begin(), needle.end(), begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& needle, std::size_t from) const {
  if (from > size()) return std::nullopt;
  auto it = std::search(begin() + static_cast<std::ptrdiff_t>(from), end(), needle.begin(),
                        needle.end());
  if (it == end() && !needle.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - begin());
}

Word Word::power(std::size_t k) const {
  Word out;
  out.letters_.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i) out += *this;
  return out;
}

Word Word::rotated(std::size_t k) const {
  if (empty()) return *this;
  k %= size();
  return suffix_from(k) + prefix(k);
}

Word Word::overlined(bool on) const {
  Word out = *this;
  for (auto& a : out.letters_) a = a.with_overline(on);
  return out;
}

Word Word::toggled() const {
  Word out = *this;
  for (auto& a : out.letters_) a = a.toggled();
  return out;
}

Word Word::plain() const {
  Word out = *this;
  for (auto& a : out.letters_) a = a.plain();
  return out;
}

Word Word::with_subscript(Subscript s) const {
  Word out = *this;
  for (auto& a : out.letters_) a = a.with_subscript(s);
  return out;
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::operator+=(const Letter& letter) {
  letters_.push_back(letter);
  return *this;
}

std::string Word::spelling() const {
  std::string out;
  for (const auto& a : letters_) {
    if (!out.empty()) out += ' ';
    out += a.spelling();
  }
  return out;
}

Alphabet letters_of(const Word& w) { return Alphabet(w.begin(), w.end()); }

Word PermWitness::source() const {
  Word out;
  for (const auto& f : factors) out += f;
  return out;
}

Word PermWitness::permuted() const {
  Word out;
  for (auto i : permutation) out += factors.at(i);
  return out;
}

Morphism::Morphism(std::vector<std::pair<Letter, Word>> images) {
  for (auto& [a, img] : images) {
    if (images_.contains(a)) throw PreconditionError("letter " + a.spelling() + " mapped twice");
    codomain_.insert(img.begin(), img.end());
    domain_.push_back(a);
    images_.emplace(a, std::move(img));
  }
}

Morphism::Morphism(std::vector<std::pair<Letter, Word>> images, Alphabet codomain)
    : Morphism(std::move(images)) {
  for (const auto& a : codomain_) {
    if (!codomain.contains(a)) {
      throw PreconditionError("image letter " + a.spelling() + " outside the codomain");
    }
  }
  codomain_ = std::move(codomain);
}

const Word& Morphism::image(const Letter& a) const {
  auto it = images_.find(a);
  if (it == images_.end()) {
    throw DomainError("letter " + a.spelling() + " is outside the morphism's domain");
  }
  return it->second;
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (const auto& a : w) out += image(a);
  return out;
}

Word apply(const Morphism& h, const Word& w) { return h.apply(w); }

Morphism left_desync(const Word& x, const Alphabet& alphabet) {
  std::vector<std::pair<Letter, Word>> images;
  for (const auto& a : alphabet) images.emplace_back(a, x + a);
  return Morphism(std::move(images));
}

Morphism right_desync(const Word& x, const Alphabet& alphabet) {
  std::vector<std::pair<Letter, Word>> images;
  for (const auto& a : alphabet) images.emplace_back(a, Word(a) + x);
  return Morphism(std::move(images));
}

namespace {

// y == x[cut..] x[..cut]
bool rotation_matches(const Word& x, const Word& y, std::size_t cut) {
  const auto n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] != x[(cut + i) % n]) return false;
  }
  return true;
}

}  // namespace

std::optional<Split> is_conjugate(const Word& x, const Word& y) {
  if (x.size() != y.size()) return std::nullopt;
  for (std::size_t cut = 0; cut <= x.size(); ++cut) {
    if (rotation_matches(x, y, cut)) return Split{x.prefix(cut), x.suffix_from(cut)};
  }
  return std::nullopt;
}

std::vector<Split> conjugacy_splits(const Word& x, const Word& y) {
  std::vector<Split> out;
  if (x.size() != y.size()) return out;
  for (std::size_t cut = 0; cut <= x.size(); ++cut) {
    if (rotation_matches(x, y, cut)) out.push_back(Split{x.prefix(cut), x.suffix_from(cut)});
  }
  return out;
}

std::optional<PermWitness> sim_m(const Word& u, const Word& v, std::size_t m) {
  if (m == 0) throw PreconditionError("sim_m needs m >= 1");
  if (u.size() != v.size()) return std::nullopt;

  const auto n = u.size();
  std::vector<std::size_t> cuts(m - 1, 0);  // nondecreasing, each in [0, n]
  while (true) {
    PermWitness wit;
    std::size_t prev = 0;
    for (auto c : cuts) {
      wit.factors.push_back(u.slice(prev, c - prev));
      prev = c;
    }
    wit.factors.push_back(u.suffix_from(prev));
    wit.permutation.resize(m);
    std::iota(wit.permutation.begin(), wit.permutation.end(), std::size_t{0});
    do {
      std::size_t pos = 0;
      bool ok = true;
      for (auto i : wit.permutation) {
        if (!v.occurs_at(wit.factors[i], pos)) {
          ok = false;
          break;
        }
        pos += wit.factors[i].size();
      }
      if (ok) return wit;
    } while (std::next_permutation(wit.permutation.begin(), wit.permutation.end()));

    // Next nondecreasing cut vector in lexicographic order.
    std::size_t k = cuts.size();
    while (k > 0 && cuts[k - 1] == n) --k;
    if (k == 0) return std::nullopt;
    ++cuts[k - 1];
    for (std::size_t j = k; j < cuts.size(); ++j) cuts[j] = cuts[k - 1];
  }
}

Word primitive_root(const Word& w) {
  if (w.empty()) throw PreconditionError("primitive root of the empty word");
  const auto n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return w.prefix(d);
  }
  return w;
}

Word nth_word(const std::vector<Letter>& order, std::size_t len, std::size_t index) {
  if (order.empty()) throw PreconditionError("nth_word over an empty alphabet");
  std::vector<Letter> letters(len, order.front());
  for (std::size_t i = len; i-- > 0;) {
    letters[i] = order[index % order.size()];
    index /= order.size();
  }
  return Word(std::move(letters));
}

}  // namespace pcpbench

std::size_t std::hash<pcpbench::Letter>::operator()(const pcpbench::Letter& a) const noexcept {
  std::size_t h = std::hash<std::string>{}(a.base());
  h ^= (static_cast<std::size_t>(a.role()) << 1) ^ (static_cast<std::size_t>(a.subscript()) << 4) ^
       (a.overlined() ? 0x9e3779b97f4a7c15ULL : 0);
  return h;
}

std::size_t std::hash<pcpbench::Word>::operator()(const pcpbench::Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& a : w) h = (h ^ std::hash<pcpbench::Letter>{}(a)) * 0x100000001b3ULL;
  return h;
}
