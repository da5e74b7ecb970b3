#include "grank/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace grank {

std::optional<int> element_order(const GroupOracle& o, const Word& w,
                                 int bound) {
  if (bound < 1) throw std::invalid_argument("order bound must be positive");
  Word acc;
  for (int n = 1; n <= bound; ++n) {
    acc = acc * w;
    if (o.is_trivial(acc)) return n;
  }
  return std::nullopt;
}

std::vector<Word> FreeOracle::enumerate_ball(int radius) const {
  std::vector<Word> out{Word()};
  std::vector<Word> frontier{Word()};
  for (int len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter l = 0; l < 2 * rank_; ++l) {
        if (!w.empty() && w[w.size() - 1] == inverse_letter(l)) continue;
        std::vector<Letter> raw = w.letters();
        raw.push_back(l);
        next.push_back(Word::from_reduced(std::move(raw)));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

RewritingOracle::RewritingOracle(RewritingSystem rws) : rws_(std::move(rws)) {
  if (!rws_.confluent())
    throw capability_error("rewriting oracle needs a confluent system");
}

PermutationOracle::PermutationOracle(int degree,
                                     std::vector<std::vector<int>> images)
    : degree_(degree) {
  for (const auto& img : images) {
    if (static_cast<int>(img.size()) != degree)
      throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> seen(static_cast<size_t>(degree), 0);
    for (int v : img) {
      if (v < 0 || v >= degree || seen[static_cast<size_t>(v)]++)
        throw std::invalid_argument("generator image is not a permutation");
    }
    std::vector<int> inv(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) inv[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
    letter_images_.push_back(img);
    letter_images_.push_back(std::move(inv));
  }

  // BFS closure from the identity; FIFO order with letters ascending gives
  // shortlex-least words on first reach.
  std::vector<int> id(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<size_t>(i)] = i;
  elements_.push_back(id);
  element_words_.push_back(Word());
  element_depth_.push_back(0);
  perm_index_[perm_hash(id)].push_back(0);
  for (size_t head = 0; head < elements_.size(); ++head) {
    std::vector<int> cur = elements_[head];
    Word cur_word = element_words_[head];
    for (Letter l = 0; l < static_cast<Letter>(letter_images_.size()); ++l) {
      std::vector<int> next(static_cast<size_t>(degree));
      const auto& img = letter_images_[static_cast<size_t>(l)];
      for (int i = 0; i < degree; ++i)
        next[static_cast<size_t>(i)] = img[static_cast<size_t>(cur[static_cast<size_t>(i)])];
      if (index_of(next) >= 0) continue;
      std::vector<Letter> raw = cur_word.letters();
      raw.push_back(l);
      int id_new = static_cast<int>(elements_.size());
      perm_index_[perm_hash(next)].push_back(id_new);
      elements_.push_back(std::move(next));
      element_words_.push_back(Word::from_reduced(std::move(raw)));
      element_depth_.push_back(element_depth_[head] + 1);
    }
  }
}

size_t PermutationOracle::perm_hash(const std::vector<int>& p) const {
  size_t h = 1469598103934665603ull;
  for (int v : p) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

int PermutationOracle::index_of(const std::vector<int>& p) const {
  auto it = perm_index_.find(perm_hash(p));
  if (it == perm_index_.end()) return -1;
  for (int idx : it->second)
    if (elements_[static_cast<size_t>(idx)] == p) return idx;
  return -1;
}

std::vector<int> PermutationOracle::permutation_of(const Word& w) const {
  std::vector<int> p(static_cast<size_t>(degree_));
  for (int i = 0; i < degree_; ++i) p[static_cast<size_t>(i)] = i;
  for (Letter l : w) {
    if (l >= static_cast<Letter>(letter_images_.size()))
      throw alphabet_error("letter outside the oracle's alphabet");
    const auto& img = letter_images_[static_cast<size_t>(l)];
    for (int i = 0; i < degree_; ++i)
      p[static_cast<size_t>(i)] = img[static_cast<size_t>(p[static_cast<size_t>(i)])];
  }
  return p;
}

bool PermutationOracle::is_trivial(const Word& w) const {
  auto p = permutation_of(w);
  for (int i = 0; i < degree_; ++i)
    if (p[static_cast<size_t>(i)] != i) return false;
  return true;
}

Word PermutationOracle::normal_form(const Word& w) const {
  int idx = index_of(permutation_of(w));
  if (idx < 0)
    throw std::invalid_argument("word is outside the generated subgroup");
  return element_words_[static_cast<size_t>(idx)];
}

int PermutationOracle::geodesic_length(const Word& w) const {
  int idx = index_of(permutation_of(w));
  if (idx < 0)
    throw std::invalid_argument("word is outside the generated subgroup");
  return element_depth_[static_cast<size_t>(idx)];
}

std::vector<Word> PermutationOracle::enumerate_ball(int radius) const {
  std::vector<Word> out;
  for (size_t i = 0; i < elements_.size(); ++i)
    if (element_depth_[i] <= radius) out.push_back(element_words_[i]);
  return out;
}

int PermutationOracle::apply(int point, const Word& w) const {
  int p = point;
  for (Letter l : w)
    p = letter_images_[static_cast<size_t>(l)][static_cast<size_t>(p)];
  return p;
}

int FiniteGroup::element_of(const Word& w) const {
  int x = identity();
  for (Letter l : w) {
    int g = generator_elements[static_cast<size_t>(generator_of(l))];
    x = multiply(x, is_inverse(l) ? inverse[static_cast<size_t>(g)] : g);
  }
  return x;
}

FiniteGroup tabulate_finite_group(const GroupOracle& o,
                                  const Alphabet& alphabet, int max_elements) {
  if (!o.has_normal_forms() || !o.has_ball_enumeration())
    throw capability_error("tabulation needs normal forms and balls");
  // Grow the ball until it stabilizes.
  std::vector<Word> ball;
  int radius = 1;
  for (;;) {
    std::vector<Word> next = o.enumerate_ball(radius);
    if (static_cast<int>(next.size()) > max_elements)
      throw capability_error("group too large to tabulate");
    if (next.size() == ball.size() && radius > 1) {
      ball = std::move(next);
      break;
    }
    ball = std::move(next);
    ++radius;
  }

  FiniteGroup g;
  g.alphabet = alphabet;
  g.words = ball;
  std::unordered_map<Word, int, WordHash> index;
  for (size_t i = 0; i < ball.size(); ++i) index[ball[i]] = static_cast<int>(i);
  auto id_of = [&](const Word& w) {
    auto it = index.find(o.normal_form(w));
    if (it == index.end())
      throw capability_error("ball did not close under multiplication");
    return it->second;
  };

  int n = static_cast<int>(ball.size());
  g.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          id_of(ball[static_cast<size_t>(x)] * ball[static_cast<size_t>(y)]);
  g.inverse.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    g.inverse[static_cast<size_t>(x)] = id_of(ball[static_cast<size_t>(x)].inverse());
  g.depth.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    g.depth[static_cast<size_t>(x)] = o.geodesic_length(ball[static_cast<size_t>(x)]);
  for (int gen = 0; gen < alphabet.size(); ++gen)
    g.generator_elements.push_back(
        id_of(Word::from_reduced({positive_letter(gen)})));
  return g;
}

std::vector<Word> FiniteGroupOracle::enumerate_ball(int radius) const {
  std::vector<Word> out;
  for (int x = 0; x < g_.size(); ++x)
    if (g_.depth[static_cast<size_t>(x)] <= radius)
      out.push_back(g_.words[static_cast<size_t>(x)]);
  return out;
}

}  // namespace grank
