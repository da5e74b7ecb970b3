#pragma once

#include <string>
#include <vector>

#include "grank/word.hpp"

namespace grank {

/// A finite group presentation. Relators are kept freely and cyclically
/// reduced; relators that reduce to the empty word are dropped.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  int generator_count() const { return alphabet_.size(); }
  bool is_free() const { return relators_.empty(); }

  /// All signed letters of the alphabet, in shortlex letter order.
  std::vector<Letter> signed_letters() const;

  bool operator==(const Presentation&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

Presentation parse_presentation(std::string_view gens,
                                std::initializer_list<std::string_view> rels);

std::string to_string(const Presentation& p);

}  // namespace grank
