#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grank/presentation.hpp"
#include "grank/word.hpp"

namespace grank {

/// Requested operation needs a capability the object does not provide
/// (e.g. normal forms of an incomplete rewriting system).
struct capability_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// A length-reducing-or-equal string rewrite rule: rhs is shortlex-smaller
/// than lhs.
struct RewriteRule {
  Word lhs;
  Word rhs;
  bool operator==(const RewriteRule&) const = default;
};

enum class CompletionStatus { Confluent, Incomplete };

struct KnuthBendixLimits {
  int max_rules = 4000;
  int max_rule_length = 50;
  std::int64_t max_steps = 4'000'000;
};

/// A string rewriting system over a signed generator alphabet. When the
/// status is Confluent every word has a unique irreducible descendant,
/// which is its shortlex-least representative.
class RewritingSystem {
 public:
  RewritingSystem() = default;
  RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                  CompletionStatus status);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  CompletionStatus status() const { return status_; }
  bool confluent() const { return status_ == CompletionStatus::Confluent; }

  /// Rewrites to the unique irreducible form. Throws capability_error on an
  /// incomplete system.
  Word normal_form(const Word& w) const;

  /// Rewrites to some irreducible form without the confluence guarantee.
  Word reduce(const Word& w) const;

  bool is_irreducible(const Word& w) const;

  /// All irreducible words of length <= max_length, in shortlex order. On a
  /// confluent system these are exactly the elements of the ball of that
  /// radius.
  std::vector<Word> irreducible_words(int max_length) const;

 private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  CompletionStatus status_ = CompletionStatus::Incomplete;
  std::vector<std::vector<int>> by_first_letter_;

  void build_index();
  friend class Completion;
};

/// Shortlex Knuth-Bendix completion. Starts from the free-reduction rules
/// x x^-1 -> 1 and one equation per relator, processes critical pairs in
/// shortlex order of their overlap words, and orients every derived
/// identity with the shortlex order. Limit exhaustion yields the partial
/// system flagged Incomplete.
RewritingSystem knuth_bendix(const Presentation& p,
                             const KnuthBendixLimits& limits = {});

}  // namespace grank
