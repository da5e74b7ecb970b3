#include "grank/cosets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace grank {

CosetTable::CosetTable(Presentation origin, std::vector<Word> subgroup_generators,
                       std::vector<std::vector<int>> rows)
    : origin_(std::move(origin)),
      subgens_(std::move(subgroup_generators)),
      rows_(std::move(rows)) {}

int CosetTable::generator_count() const { return origin_.generator_count(); }

int CosetTable::act_word(int coset, const Word& w) const {
  int c = coset;
  for (Letter l : w) c = act(c, l);
  return c;
}

ToddCoxeterEnumerator::ToddCoxeterEnumerator(Presentation p,
                                             std::vector<Word> subgens,
                                             int max_cosets)
    : p_(std::move(p)), subgens_(std::move(subgens)), max_cosets_(max_cosets) {
  if (max_cosets_ < 1)
    throw std::invalid_argument("max_cosets must be positive");
  create_coset();
}

int ToddCoxeterEnumerator::find(int c) {
  while (parent_[static_cast<size_t>(c)] != c) {
    parent_[static_cast<size_t>(c)] =
        parent_[static_cast<size_t>(parent_[static_cast<size_t>(c)])];
    c = parent_[static_cast<size_t>(c)];
  }
  return c;
}

int ToddCoxeterEnumerator::create_coset() {
  int id = static_cast<int>(tab_.size());
  tab_.emplace_back(static_cast<size_t>(2 * p_.generator_count()), -1);
  parent_.push_back(id);
  return id;
}

int ToddCoxeterEnumerator::live_cosets() const {
  int n = 0;
  for (size_t c = 0; c < parent_.size(); ++c)
    if (parent_[c] == static_cast<int>(c)) ++n;
  return n;
}

void ToddCoxeterEnumerator::set_entry(int c, Letter l, int d) {
  c = find(c);
  d = find(d);
  int& fwd = tab_[static_cast<size_t>(c)][static_cast<size_t>(l)];
  if (fwd != -1 && find(fwd) != d) {
    coincidences_.emplace_back(find(fwd), d);
    return;
  }
  fwd = d;
  int& bwd = tab_[static_cast<size_t>(d)][static_cast<size_t>(inverse_letter(l))];
  if (bwd != -1 && find(bwd) != c) {
    coincidences_.emplace_back(find(bwd), c);
    return;
  }
  bwd = c;
}

void ToddCoxeterEnumerator::trace_and_fill(int start, const Word& w) {
  if (w.empty()) return;
  int c = find(start);
  int target = c;
  for (int i = 0; i < w.size(); ++i) {
    c = find(c);
    Letter l = w[i];
    int next = tab_[static_cast<size_t>(c)][static_cast<size_t>(l)];
    if (next != -1) {
      c = find(next);
      continue;
    }
    if (i == w.size() - 1) {
      set_entry(c, l, target);
      return;
    }
    if (static_cast<int>(tab_.size()) >= 4 * max_cosets_ ||
        live_cosets() >= max_cosets_) {
      status_ = TCStatus::Overflow;
      return;
    }
    int fresh = create_coset();
    set_entry(c, l, fresh);
    c = fresh;
  }
  c = find(c);
  if (c != find(target)) coincidences_.emplace_back(c, find(target));
}

void ToddCoxeterEnumerator::merge(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a > b) std::swap(a, b);  // keep the smaller index live
  parent_[static_cast<size_t>(b)] = a;
  for (Letter l = 0; l < static_cast<Letter>(2 * p_.generator_count()); ++l) {
    int bt = tab_[static_cast<size_t>(b)][static_cast<size_t>(l)];
    if (bt == -1) continue;
    int& at = tab_[static_cast<size_t>(a)][static_cast<size_t>(l)];
    if (at == -1) {
      set_entry(a, l, find(bt));
    } else if (find(at) != find(bt)) {
      coincidences_.emplace_back(find(at), find(bt));
    }
  }
}

void ToddCoxeterEnumerator::process_coincidence() {
  auto [a, b] = coincidences_[coincidence_head_++];
  merge(a, b);
}

int ToddCoxeterEnumerator::next_live(int c) const {
  int n = static_cast<int>(tab_.size());
  for (int d = c; d < n; ++d)
    if (parent_[static_cast<size_t>(d)] == d) return d;
  return n;
}

void ToddCoxeterEnumerator::step() {
  if (status_ != TCStatus::Running) return;

  if (coincidence_head_ < coincidences_.size()) {
    process_coincidence();
    return;
  }
  if (init_subgen_ < subgens_.size()) {
    trace_and_fill(0, subgens_[init_subgen_++]);
    return;
  }

  int live = next_live(scan_coset_);
  if (live != scan_coset_) {
    // The coset under scan was merged away; restart at the next live one.
    // Its representative is a smaller index that has already been scanned.
    scan_coset_ = live;
    scan_relator_ = 0;
    fill_letter_ = 0;
  }
  if (scan_coset_ >= static_cast<int>(tab_.size())) {
    status_ = TCStatus::Complete;
    return;
  }
  if (scan_relator_ < p_.relators().size()) {
    trace_and_fill(scan_coset_, p_.relators()[scan_relator_++]);
    return;
  }
  // Fill phase: every signed letter needs an image before the coset is done.
  int c = find(scan_coset_);
  int letters = 2 * p_.generator_count();
  while (fill_letter_ < letters &&
         tab_[static_cast<size_t>(c)][static_cast<size_t>(fill_letter_)] != -1)
    ++fill_letter_;
  if (fill_letter_ < letters) {
    if (live_cosets() >= max_cosets_ ||
        static_cast<int>(tab_.size()) >= 4 * max_cosets_) {
      status_ = TCStatus::Overflow;
      return;
    }
    int fresh = create_coset();
    set_entry(c, fill_letter_, fresh);
    ++fill_letter_;
    return;
  }
  ++scan_coset_;
  scan_relator_ = 0;
  fill_letter_ = 0;
}

void ToddCoxeterEnumerator::run() {
  while (status_ == TCStatus::Running) step();
}

CosetTable ToddCoxeterEnumerator::table() const {
  if (status_ != TCStatus::Complete)
    throw std::logic_error("enumeration is not complete");
  auto* self = const_cast<ToddCoxeterEnumerator*>(this);
  std::vector<int> live;
  std::vector<int> renumber(tab_.size(), -1);
  for (size_t c = 0; c < tab_.size(); ++c)
    if (parent_[c] == static_cast<int>(c)) {
      renumber[c] = static_cast<int>(live.size());
      live.push_back(static_cast<int>(c));
    }
  int letters = 2 * p_.generator_count();
  std::vector<std::vector<int>> rows(live.size(),
                                     std::vector<int>(static_cast<size_t>(letters)));
  for (size_t i = 0; i < live.size(); ++i)
    for (int l = 0; l < letters; ++l) {
      int target = tab_[static_cast<size_t>(live[i])][static_cast<size_t>(l)];
      assert(target != -1);
      rows[i][static_cast<size_t>(l)] = renumber[static_cast<size_t>(self->find(target))];
    }
  return CosetTable(p_, subgens_, std::move(rows));
}

std::optional<CosetTable> todd_coxeter(const Presentation& p,
                                       std::vector<Word> subgens,
                                       int max_cosets) {
  ToddCoxeterEnumerator e(p, std::move(subgens), max_cosets);
  e.run();
  if (e.status() == TCStatus::Overflow) return std::nullopt;
  return e.table();
}

std::vector<Word> schreier_transversal(const CosetTable& t) {
  std::vector<Word> words(static_cast<size_t>(t.size()));
  std::vector<bool> seen(static_cast<size_t>(t.size()), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    for (Letter l = 0; l < static_cast<Letter>(2 * t.generator_count()); ++l) {
      int d = t.act(c, l);
      if (seen[static_cast<size_t>(d)]) continue;
      seen[static_cast<size_t>(d)] = true;
      std::vector<Letter> raw = words[static_cast<size_t>(c)].letters();
      raw.push_back(l);
      words[static_cast<size_t>(d)] = Word::from_reduced(std::move(raw));
      queue.push_back(d);
    }
  }
  return words;
}

namespace {

// BFS tree edges of the coset graph, as (coset, signed letter) pairs marked
// symmetrically in both directions.
std::vector<std::vector<bool>> tree_edges(const CosetTable& t) {
  std::vector<std::vector<bool>> tree(
      static_cast<size_t>(t.size()),
      std::vector<bool>(static_cast<size_t>(2 * t.generator_count()), false));
  std::vector<bool> seen(static_cast<size_t>(t.size()), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    for (Letter l = 0; l < static_cast<Letter>(2 * t.generator_count()); ++l) {
      int d = t.act(c, l);
      if (seen[static_cast<size_t>(d)]) continue;
      seen[static_cast<size_t>(d)] = true;
      tree[static_cast<size_t>(c)][static_cast<size_t>(l)] = true;
      tree[static_cast<size_t>(d)][static_cast<size_t>(inverse_letter(l))] = true;
      queue.push_back(d);
    }
  }
  return tree;
}

}  // namespace

std::vector<Word> schreier_generator_words(const CosetTable& t) {
  auto transversal = schreier_transversal(t);
  auto tree = tree_edges(t);
  std::vector<Word> out;
  for (int c = 0; c < t.size(); ++c) {
    for (int g = 0; g < t.generator_count(); ++g) {
      Letter l = positive_letter(g);
      if (tree[static_cast<size_t>(c)][static_cast<size_t>(l)]) continue;
      int d = t.act(c, l);
      Word w = transversal[static_cast<size_t>(c)] *
               Word::from_reduced({l}) *
               transversal[static_cast<size_t>(d)].inverse();
      if (!w.empty()) out.push_back(std::move(w));
    }
  }
  return out;
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  auto tree = tree_edges(t);

  // One subgroup generator per non-tree positive edge.
  std::unordered_map<int, int> edge_gen;  // (coset * g + gen) -> generator id
  int next_gen = 0;
  for (int c = 0; c < t.size(); ++c)
    for (int g = 0; g < t.generator_count(); ++g)
      if (!tree[static_cast<size_t>(c)][static_cast<size_t>(positive_letter(g))])
        edge_gen[c * t.generator_count() + g] = next_gen++;

  if (next_gen > 26)
    throw alphabet_error("subgroup needs more than 26 generator names");
  std::string names;
  for (int i = 0; i < next_gen; ++i) names.push_back(static_cast<char>('a' + i));
  Alphabet sub_alphabet(names);

  // Rewrite each relator traced from each coset through the Schreier map:
  // tree edges vanish, non-tree edges emit their generator.
  std::vector<Word> relators;
  for (int c = 0; c < t.size(); ++c) {
    for (const Word& r : p.relators()) {
      std::vector<Letter> image;
      int cur = c;
      for (Letter l : r) {
        int gen = generator_of(l);
        if (!is_inverse(l)) {
          if (!tree[static_cast<size_t>(cur)][static_cast<size_t>(l)])
            image.push_back(positive_letter(
                edge_gen.at(cur * t.generator_count() + gen)));
          cur = t.act(cur, l);
        } else {
          int from = t.act(cur, l);  // edge traversed backwards
          if (!tree[static_cast<size_t>(from)]
                   [static_cast<size_t>(positive_letter(gen))])
            image.push_back(negative_letter(
                edge_gen.at(from * t.generator_count() + gen)));
          cur = from;
        }
      }
      relators.push_back(Word::reduced(image));
    }
  }
  return Presentation(std::move(sub_alphabet), std::move(relators));
}

namespace {

// Backtracking enumerator over partial coset tables. New cosets are
// introduced only at the first undefined slot in row-major scan order, so
// each subgroup appears with exactly one (canonical) numbering.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int n) : p_(p), max_(n) {
    letters_ = 2 * p.generator_count();
  }

  std::vector<CosetTable> run() {
    tab_.assign(1, std::vector<int>(static_cast<size_t>(letters_), -1));
    descend();
    return std::move(results_);
  }

 private:
  const Presentation& p_;
  int max_;
  int letters_;
  std::vector<std::vector<int>> tab_;
  std::vector<CosetTable> results_;

  struct Assignment {
    int coset;
    Letter letter;
  };

  bool assign(int c, Letter l, int d, std::vector<Assignment>& trail) {
    int& fwd = tab_[static_cast<size_t>(c)][static_cast<size_t>(l)];
    int& bwd = tab_[static_cast<size_t>(d)][static_cast<size_t>(inverse_letter(l))];
    if (fwd != -1) return fwd == d;
    if (bwd != -1 && bwd != c) return false;
    fwd = d;
    trail.push_back({c, l});
    if (bwd == -1) {
      bwd = c;
      trail.push_back({d, inverse_letter(l)});
    }
    return true;
  }

  void unwind(std::vector<Assignment>& trail, size_t from) {
    while (trail.size() > from) {
      auto a = trail.back();
      trail.pop_back();
      tab_[static_cast<size_t>(a.coset)][static_cast<size_t>(a.letter)] = -1;
    }
  }

  // Trace relator r from coset c as far as defined from both ends. Returns
  // false on contradiction; fills a single gap as a forced deduction.
  bool trace(int c, const Word& r, std::vector<Assignment>& trail,
             bool& deduced) {
    int front = c;
    int i = 0;
    while (i < r.size()) {
      int next = tab_[static_cast<size_t>(front)][static_cast<size_t>(r[i])];
      if (next == -1) break;
      front = next;
      ++i;
    }
    if (i == r.size()) return front == c;
    int back = c;
    int j = r.size();
    while (j > i + 1) {
      int prev = tab_[static_cast<size_t>(back)]
                     [static_cast<size_t>(inverse_letter(r[j - 1]))];
      if (prev == -1) break;
      back = prev;
      --j;
    }
    if (j == i + 1) {
      // Single undefined step: forced.
      if (!assign(front, r[i], back, trail)) return false;
      deduced = true;
    }
    return true;
  }

  bool propagate(std::vector<Assignment>& trail) {
    bool deduced = true;
    while (deduced) {
      deduced = false;
      for (size_t c = 0; c < tab_.size(); ++c)
        for (const Word& r : p_.relators())
          if (!trace(static_cast<int>(c), r, trail, deduced)) return false;
    }
    return true;
  }

  bool find_undefined(int& c, Letter& l) const {
    for (size_t i = 0; i < tab_.size(); ++i)
      for (int k = 0; k < letters_; ++k)
        if (tab_[i][static_cast<size_t>(k)] == -1) {
          c = static_cast<int>(i);
          l = k;
          return true;
        }
    return false;
  }

  void descend() {
    int c;
    Letter l;
    if (!find_undefined(c, l)) {
      emit();
      return;
    }
    int ncosets = static_cast<int>(tab_.size());
    for (int d = 0; d <= ncosets; ++d) {
      if (d == ncosets) {
        if (ncosets >= max_) break;
        tab_.emplace_back(static_cast<size_t>(letters_), -1);
      }
      std::vector<Assignment> trail;
      if (assign(c, l, d, trail) && propagate(trail)) descend();
      unwind(trail, 0);
      if (d == ncosets) tab_.pop_back();
    }
  }

  void emit() {
    for (size_t c = 0; c < tab_.size(); ++c)
      for (const Word& r : p_.relators()) {
        int cur = static_cast<int>(c);
        for (Letter l : r) cur = tab_[static_cast<size_t>(cur)][static_cast<size_t>(l)];
        if (cur != static_cast<int>(c)) return;
      }
    CosetTable t(p_, {}, tab_);
    results_.emplace_back(p_, schreier_generator_words(t), tab_);
  }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& p, int n) {
  if (n < 1) throw std::invalid_argument("index bound must be positive");
  LowIndexSearch search(p, n);
  return search.run();
}

CosetTable normal_core(const Presentation& p, const CosetTable& t) {
  int degree = t.size();
  int letters = 2 * p.generator_count();

  // Closure of the generator permutations: elements of the image group in
  // BFS discovery order; the core's cosets.
  std::vector<std::vector<int>> elements;
  std::unordered_map<size_t, std::vector<int>> index;
  auto hash = [](const std::vector<int>& v) {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  };
  auto find_elem = [&](const std::vector<int>& v) {
    auto it = index.find(hash(v));
    if (it == index.end()) return -1;
    for (int i : it->second)
      if (elements[static_cast<size_t>(i)] == v) return i;
    return -1;
  };

  std::vector<int> id(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<size_t>(i)] = i;
  elements.push_back(id);
  index[hash(id)].push_back(0);
  std::vector<std::vector<int>> rows;
  for (size_t head = 0; head < elements.size(); ++head) {
    rows.emplace_back(static_cast<size_t>(letters), -1);
    for (Letter l = 0; l < letters; ++l) {
      std::vector<int> next(static_cast<size_t>(degree));
      for (int i = 0; i < degree; ++i)
        next[static_cast<size_t>(i)] =
            t.act(elements[head][static_cast<size_t>(i)], l);
      int idx = find_elem(next);
      if (idx < 0) {
        idx = static_cast<int>(elements.size());
        index[hash(next)].push_back(idx);
        elements.push_back(std::move(next));
      }
      rows[head][static_cast<size_t>(l)] = idx;
    }
  }

  CosetTable core(p, {}, rows);
  return CosetTable(p, schreier_generator_words(core), std::move(rows));
}

bool membership_via_table(const CosetTable& t, const Word& w) {
  return t.act_word(0, w) == 0;
}

CosetTable canonicalized(const CosetTable& t) {
  std::vector<int> renumber(static_cast<size_t>(t.size()), -1);
  std::vector<int> order;
  renumber[0] = 0;
  order.push_back(0);
  for (size_t head = 0; head < order.size(); ++head) {
    int c = order[head];
    for (Letter l = 0; l < static_cast<Letter>(2 * t.generator_count()); ++l) {
      int d = t.act(c, l);
      if (renumber[static_cast<size_t>(d)] == -1) {
        renumber[static_cast<size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  std::vector<std::vector<int>> rows(
      static_cast<size_t>(t.size()),
      std::vector<int>(static_cast<size_t>(2 * t.generator_count())));
  for (int c = 0; c < t.size(); ++c)
    for (Letter l = 0; l < static_cast<Letter>(2 * t.generator_count()); ++l)
      rows[static_cast<size_t>(renumber[static_cast<size_t>(c)])]
          [static_cast<size_t>(l)] =
              renumber[static_cast<size_t>(t.act(c, l))];
  return CosetTable(t.origin(), t.subgroup_generators(), std::move(rows));
}

}  // namespace grank
