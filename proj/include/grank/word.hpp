#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grank {

/// A signed generator. Generator i contributes two letters: 2*i (the
/// generator itself) and 2*i+1 (its formal inverse). This layout makes
/// inversion a single bit flip and makes the natural integer order on
/// letters coincide with the shortlex letter order a < A < b < B < ...
using Letter = std::int32_t;

constexpr Letter positive_letter(int gen) { return 2 * gen; }
constexpr Letter negative_letter(int gen) { return 2 * gen + 1; }
constexpr Letter inverse_letter(Letter l) { return l ^ 1; }
constexpr bool is_inverse(Letter l) { return (l & 1) != 0; }
constexpr int generator_of(Letter l) { return l >> 1; }

struct alphabet_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A finite generating alphabet. Names are distinct lowercase letters;
/// the uppercase form of a name denotes the inverse generator.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view names);

  int size() const { return static_cast<int>(names_.size()); }
  char name(int gen) const { return names_.at(gen); }
  bool has(char lower) const;
  int index_of(char lower) const;

  /// Maps a printable character (lower = generator, upper = inverse) to a
  /// letter. Throws alphabet_error on characters outside the alphabet.
  Letter letter_of(char c) const;
  char letter_name(Letter l) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string names_;
};

/// A freely reduced word over a signed alphabet. The empty word is the
/// identity. All constructors and operations maintain free reduction, so
/// equality of Word values is equality in the free group.
class Word {
 public:
  Word() = default;

  /// Reduces a raw letter sequence (cancelling adjacent x x^-1 pairs).
  static Word reduced(std::span<const Letter> raw);
  static Word reduced(std::initializer_list<Letter> raw);

  /// Wraps a sequence that is already known to be freely reduced.
  static Word from_reduced(std::vector<Letter> letters);

  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  Letter operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word subword(int from, int to) const;

  /// True when the first and last letters cancel.
  bool is_cyclically_reduced() const;
  Word cyclically_reduced() const;
  /// Cyclic reduction together with the stripped conjugator c, so that
  /// *this equals c * reduced * c^-1.
  std::pair<Word, Word> cyclic_reduction() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Concatenation in the free group (freely reduced).
Word operator*(const Word& a, const Word& b);
Word power(const Word& w, int n);
/// c * w * c^-1.
Word conjugate(const Word& w, const Word& c);

/// Shortlex order: length first, then letterwise by the letter order
/// a < A < b < B < ... . Returns <0, 0, >0.
int shortlex_compare(const Word& a, const Word& b);
bool shortlex_less(const Word& a, const Word& b);

/// Shortlex comparison of equal-length tuples of words, entrywise.
int tuple_compare(std::span<const Word> a, std::span<const Word> b);

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Word& w, const Alphabet& alphabet);

struct WordHash {
  size_t operator()(const Word& w) const;
};

}  // namespace grank
