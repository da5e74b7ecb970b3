#include "grank/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace grank {

namespace {

// Matches rule lhs at position pos of w.
bool matches_at(const Word& w, int pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  for (int k = 0; k < lhs.size(); ++k)
    if (w[pos + k] != lhs[k]) return false;
  return true;
}

bool contains(const Word& w, const Word& factor) {
  for (int pos = 0; pos + factor.size() <= w.size(); ++pos)
    if (matches_at(w, pos, factor)) return true;
  return false;
}

}  // namespace

RewritingSystem::RewritingSystem(Alphabet alphabet,
                                 std::vector<RewriteRule> rules,
                                 CompletionStatus status)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      status_(status) {
  build_index();
}

void RewritingSystem::build_index() {
  by_first_letter_.assign(static_cast<size_t>(2 * alphabet_.size()), {});
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].lhs.empty()) continue;
    by_first_letter_[static_cast<size_t>(rules_[i].lhs[0])].push_back(
        static_cast<int>(i));
  }
}

Word RewritingSystem::reduce(const Word& w) const {
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pos = 0; pos < cur.size(); ++pos) {
      for (int idx : by_first_letter_[static_cast<size_t>(cur[pos])]) {
        const RewriteRule& r = rules_[static_cast<size_t>(idx)];
        if (matches_at(cur, pos, r.lhs)) {
          // Word concatenation cancels freely at the junctions, which is an
          // eager application of the x x^-1 -> 1 rules.
          cur = cur.subword(0, pos) * r.rhs *
                cur.subword(pos + r.lhs.size(), cur.size());
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return cur;
}

Word RewritingSystem::normal_form(const Word& w) const {
  if (!confluent())
    throw capability_error("normal_form requires a confluent system");
  return reduce(w);
}

bool RewritingSystem::is_irreducible(const Word& w) const {
  for (int pos = 0; pos < w.size(); ++pos)
    for (int idx : by_first_letter_[static_cast<size_t>(w[pos])])
      if (matches_at(w, pos, rules_[static_cast<size_t>(idx)].lhs)) return false;
  return true;
}

std::vector<Word> RewritingSystem::irreducible_words(int max_length) const {
  std::vector<Word> out;
  std::vector<Word> frontier{Word()};
  out.push_back(Word());
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter l = 0; l < 2 * alphabet_.size(); ++l) {
        std::vector<Letter> raw = w.letters();
        if (!raw.empty() && raw.back() == inverse_letter(l)) continue;
        raw.push_back(l);
        Word cand = Word::from_reduced(std::move(raw));
        // Prefixes are irreducible, so only suffixes ending at the new
        // letter can match a lhs.
        bool reducible = false;
        for (int start = 0; start < cand.size() && !reducible; ++start) {
          for (int idx : by_first_letter_[static_cast<size_t>(cand[start])]) {
            const Word& lhs = rules_[static_cast<size_t>(idx)].lhs;
            if (start + lhs.size() == cand.size() &&
                matches_at(cand, start, lhs)) {
              reducible = true;
              break;
            }
          }
        }
        if (!reducible) next.push_back(std::move(cand));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

namespace {

struct PendingEquation {
  Word key;  // overlap word (or the originating relator)
  std::uint64_t seq;
  Word a, b;
};

struct PendingOrder {
  bool operator()(const PendingEquation& x, const PendingEquation& y) const {
    int c = shortlex_compare(x.key, y.key);
    if (c != 0) return c > 0;  // min-heap on shortlex key
    return x.seq > y.seq;
  }
};

}  // namespace

class Completion {
 public:
  Completion(const Presentation& p, const KnuthBendixLimits& limits)
      : limits_(limits) {
    sys_.alphabet_ = p.alphabet();
    for (int g = 0; g < p.generator_count(); ++g) {
      add_rule_raw({Word::from_reduced({positive_letter(g), negative_letter(g)}),
                    Word()});
      add_rule_raw({Word::from_reduced({negative_letter(g), positive_letter(g)}),
                    Word()});
    }
    sys_.build_index();
    for (const Word& r : p.relators()) enqueue(r, r, Word());
  }

  RewritingSystem run() {
    while (!queue_.empty()) {
      if (exhausted_) break;
      PendingEquation eq = queue_.top();
      queue_.pop();
      ++steps_;
      Word a = reduce_counted(eq.a);
      Word b = reduce_counted(eq.b);
      if (a == b) continue;
      if (shortlex_less(a, b)) std::swap(a, b);
      if (a.size() > limits_.max_rule_length) {
        exhausted_ = true;
        break;
      }
      add_rule(std::move(a), std::move(b));
      if (static_cast<int>(active_count()) > limits_.max_rules ||
          steps_ > limits_.max_steps) {
        exhausted_ = true;
        break;
      }
    }
    std::vector<RewriteRule> final_rules;
    for (size_t i = 0; i < sys_.rules_.size(); ++i)
      if (alive_[i]) final_rules.push_back(sys_.rules_[i]);
    CompletionStatus status = (!exhausted_ && queue_.empty())
                                  ? CompletionStatus::Confluent
                                  : CompletionStatus::Incomplete;
    return RewritingSystem(sys_.alphabet_, std::move(final_rules), status);
  }

 private:
  KnuthBendixLimits limits_;
  RewritingSystem sys_;
  std::vector<bool> alive_;
  std::priority_queue<PendingEquation, std::vector<PendingEquation>,
                      PendingOrder>
      queue_;
  std::uint64_t seq_ = 0;
  std::int64_t steps_ = 0;
  bool exhausted_ = false;

  size_t active_count() const {
    size_t n = 0;
    for (bool b : alive_) n += b ? 1 : 0;
    return n;
  }

  void enqueue(Word key, Word a, Word b) {
    queue_.push({std::move(key), seq_++, std::move(a), std::move(b)});
  }

  void add_rule_raw(RewriteRule r) {
    sys_.rules_.push_back(std::move(r));
    alive_.push_back(true);
  }

  Word reduce_counted(const Word& w) {
    // Reduction against live rules only; dead rules stay in the vector so
    // rule ids remain stable.
    Word cur = w;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int pos = 0; pos < cur.size() && !changed; ++pos) {
        for (int idx :
             sys_.by_first_letter_[static_cast<size_t>(cur[pos])]) {
          if (!alive_[static_cast<size_t>(idx)]) continue;
          const RewriteRule& r = sys_.rules_[static_cast<size_t>(idx)];
          if (matches_at(cur, pos, r.lhs)) {
            cur = cur.subword(0, pos) * r.rhs *
                  cur.subword(pos + r.lhs.size(), cur.size());
            ++steps_;
            changed = true;
            break;
          }
        }
      }
    }
    return cur;
  }

  void add_rule(Word lhs, Word rhs) {
    int new_id = static_cast<int>(sys_.rules_.size());
    add_rule_raw({std::move(lhs), std::move(rhs)});
    sys_.build_index();
    const Word& nl = sys_.rules_[static_cast<size_t>(new_id)].lhs;

    // Interreduce: retire rules whose lhs contains the new lhs, requeueing
    // them as equations; renormalize right-hand sides.
    for (int i = 0; i < new_id; ++i) {
      if (!alive_[static_cast<size_t>(i)]) continue;
      RewriteRule& r = sys_.rules_[static_cast<size_t>(i)];
      if (contains(r.lhs, nl)) {
        alive_[static_cast<size_t>(i)] = false;
        enqueue(r.lhs, r.lhs, r.rhs);
      } else if (contains(r.rhs, nl)) {
        r.rhs = reduce_counted(r.rhs);
      }
    }
    sys_.build_index();

    // Critical pairs of the new rule against every live rule (both orders).
    for (size_t i = 0; i < sys_.rules_.size(); ++i) {
      if (!alive_[i]) continue;
      overlap_pairs(sys_.rules_[static_cast<size_t>(new_id)], sys_.rules_[i]);
      if (static_cast<int>(i) != new_id)
        overlap_pairs(sys_.rules_[i], sys_.rules_[static_cast<size_t>(new_id)]);
    }
  }

  // Overlaps where r2's lhs either sticks out past r1's lhs or sits inside
  // it; each yields a critical pair keyed by the overlapped word.
  void overlap_pairs(const RewriteRule& r1, const RewriteRule& r2) {
    const Word& l1 = r1.lhs;
    const Word& l2 = r2.lhs;
    // Proper overlap: nonempty suffix of l1 = proper prefix of l2.
    for (int k = 1; k < std::min(l1.size() + 1, l2.size()); ++k) {
      if (k > l1.size()) break;
      bool match = true;
      for (int t = 0; t < k; ++t)
        if (l1[l1.size() - k + t] != l2[t]) {
          match = false;
          break;
        }
      if (!match) continue;
      ++steps_;
      Word tail = l2.subword(k, l2.size());
      Word overlap = Word::from_reduced([&] {
        std::vector<Letter> v = l1.letters();
        for (int t = k; t < l2.size(); ++t) v.push_back(l2[t]);
        return v;
      }());
      Word via1 = r1.rhs * tail;
      Word via2 = l1.subword(0, l1.size() - k) * r2.rhs;
      enqueue(overlap, via1, via2);
    }
    // Inclusion: l2 a proper factor of l1.
    if (l2.size() < l1.size()) {
      for (int pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (!matches_at(l1, pos, l2)) continue;
        ++steps_;
        Word via2 =
            l1.subword(0, pos) * r2.rhs * l1.subword(pos + l2.size(), l1.size());
        enqueue(l1, r1.rhs, via2);
      }
    }
  }
};

RewritingSystem knuth_bendix(const Presentation& p,
                             const KnuthBendixLimits& limits) {
  if (limits.max_rules < 1 || limits.max_rule_length < 1 ||
      limits.max_steps < 1)
    throw std::invalid_argument("completion limits must be positive");
  Completion c(p, limits);
  return c.run();
}

}  // namespace grank
