#include "grank/presentation.hpp"

#include <sstream>

namespace grank {

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  for (const Word& r : relators) {
    Word reduced = r.cyclically_reduced();
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

std::vector<Letter> Presentation::signed_letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(2 * alphabet_.size()));
  for (int g = 0; g < alphabet_.size(); ++g) {
    out.push_back(positive_letter(g));
    out.push_back(negative_letter(g));
  }
  return out;
}

Presentation parse_presentation(
    std::string_view gens, std::initializer_list<std::string_view> rels) {
  Alphabet a(gens);
  std::vector<Word> relators;
  for (std::string_view r : rels) relators.push_back(parse_word(r, a));
  return Presentation(std::move(a), std::move(relators));
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "<";
  for (int g = 0; g < p.generator_count(); ++g) {
    if (g) os << ",";
    os << p.alphabet().name(g);
  }
  os << " |";
  for (size_t i = 0; i < p.relators().size(); ++i) {
    os << (i ? "," : " ") << to_string(p.relators()[i], p.alphabet());
  }
  os << ">";
  return os.str();
}

}  // namespace grank
