#include "grank/word.hpp"

#include <algorithm>
#include <cctype>

namespace grank {

Alphabet::Alphabet(std::string_view names) {
  for (char c : names) {
    if (c < 'a' || c > 'z')
      throw alphabet_error("generator names must be lowercase letters");
    if (names_.find(c) != std::string::npos)
      throw alphabet_error(std::string("duplicate generator name '") + c + "'");
    names_.push_back(c);
  }
}

bool Alphabet::has(char lower) const {
  return names_.find(lower) != std::string::npos;
}

int Alphabet::index_of(char lower) const {
  auto pos = names_.find(lower);
  if (pos == std::string::npos)
    throw alphabet_error(std::string("unknown generator '") + lower + "'");
  return static_cast<int>(pos);
}

Letter Alphabet::letter_of(char c) const {
  if (c >= 'a' && c <= 'z') return positive_letter(index_of(c));
  if (c >= 'A' && c <= 'Z')
    return negative_letter(index_of(static_cast<char>(std::tolower(c))));
  throw alphabet_error(std::string("invalid word character '") + c + "'");
}

char Alphabet::letter_name(Letter l) const {
  char base = names_.at(generator_of(l));
  return is_inverse(l) ? static_cast<char>(std::toupper(base)) : base;
}

Word Word::reduced(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return from_reduced(std::move(out));
}

Word Word::reduced(std::initializer_list<Letter> raw) {
  return reduced(std::span<const Letter>(raw.begin(), raw.size()));
}

Word Word::from_reduced(std::vector<Letter> letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(inverse_letter(*it));
  return from_reduced(std::move(out));
}

Word Word::subword(int from, int to) const {
  return from_reduced(std::vector<Letter>(letters_.begin() + from,
                                          letters_.begin() + to));
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 ||
         letters_.front() != inverse_letter(letters_.back());
}

Word Word::cyclically_reduced() const { return cyclic_reduction().first; }

std::pair<Word, Word> Word::cyclic_reduction() const {
  int lo = 0;
  int hi = size();
  while (hi - lo >= 2 && letters_[static_cast<size_t>(lo)] ==
                             inverse_letter(letters_[static_cast<size_t>(hi - 1)]))
    ++lo, --hi;
  return {subword(lo, hi), subword(0, lo)};
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters();
  for (Letter l : b) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word::from_reduced(std::move(out));
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? w.inverse() : w;
  int reps = n < 0 ? -n : n;
  Word acc;
  for (int i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

Word conjugate(const Word& w, const Word& c) { return c * w * c.inverse(); }

int shortlex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool shortlex_less(const Word& a, const Word& b) {
  return shortlex_compare(a, b) < 0;
}

int tuple_compare(std::span<const Word> a, std::span<const Word> b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (int c = shortlex_compare(a[i], b[i]); c != 0) return c;
  }
  return 0;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) raw.push_back(alphabet.letter_of(c));
  return Word::reduced(raw);
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(static_cast<size_t>(w.size()));
  for (Letter l : w) out.push_back(alphabet.letter_name(l));
  return out;
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= static_cast<size_t>(l) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grank
