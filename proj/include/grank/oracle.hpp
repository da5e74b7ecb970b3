#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grank/rewrite.hpp"
#include "grank/word.hpp"

namespace grank {

/// A word-problem oracle for a fixed group. The base capability is
/// deciding triviality; normal forms and ball enumeration are optional.
/// Where normal forms exist they are shortlex-least representatives, so
/// their length is the geodesic length.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual bool is_trivial(const Word& w) const = 0;
  bool equal(const Word& u, const Word& v) const {
    return is_trivial(u * v.inverse());
  }

  virtual bool has_normal_forms() const { return false; }
  virtual Word normal_form(const Word&) const {
    throw capability_error("oracle has no normal forms");
  }

  virtual bool has_ball_enumeration() const { return false; }
  /// Normal forms of all elements of geodesic length <= radius, in
  /// shortlex order.
  virtual std::vector<Word> enumerate_ball(int) const {
    throw capability_error("oracle cannot enumerate balls");
  }
  virtual int geodesic_length(const Word&) const {
    throw capability_error("oracle cannot measure geodesic length");
  }

  /// Group order when the oracle knows the group is finite.
  virtual std::optional<std::uint64_t> group_order() const {
    return std::nullopt;
  }
};

/// Minimal order n <= bound with w^n = 1, or nullopt when every power up
/// to the bound is nontrivial.
std::optional<int> element_order(const GroupOracle& o, const Word& w,
                                 int bound);

/// The free group of the given rank.
class FreeOracle : public GroupOracle {
 public:
  explicit FreeOracle(int rank) : rank_(rank) {}
  explicit FreeOracle(const Alphabet& a) : rank_(a.size()) {}

  bool is_trivial(const Word& w) const override { return w.empty(); }
  bool has_normal_forms() const override { return true; }
  Word normal_form(const Word& w) const override { return w; }
  bool has_ball_enumeration() const override { return true; }
  std::vector<Word> enumerate_ball(int radius) const override;
  int geodesic_length(const Word& w) const override { return w.size(); }
  int rank() const { return rank_; }

 private:
  int rank_;
};

/// Backed by a confluent shortlex rewriting system.
class RewritingOracle : public GroupOracle {
 public:
  explicit RewritingOracle(RewritingSystem rws);

  bool is_trivial(const Word& w) const override {
    return rws_.normal_form(w).empty();
  }
  bool has_normal_forms() const override { return true; }
  Word normal_form(const Word& w) const override { return rws_.normal_form(w); }
  bool has_ball_enumeration() const override { return true; }
  std::vector<Word> enumerate_ball(int radius) const override {
    return rws_.irreducible_words(radius);
  }
  int geodesic_length(const Word& w) const override {
    return rws_.normal_form(w).size();
  }
  const RewritingSystem& system() const { return rws_; }

 private:
  RewritingSystem rws_;
};

/// A finite group backed by a permutation action of the generators. The
/// action must be faithful for is_trivial to be exact. Elements are
/// enumerated on construction, with shortlex-least words as normal forms.
class PermutationOracle : public GroupOracle {
 public:
  /// images[g] is the image of generator g as a permutation of 0..degree-1.
  PermutationOracle(int degree, std::vector<std::vector<int>> images);

  bool is_trivial(const Word& w) const override;
  bool has_normal_forms() const override { return true; }
  Word normal_form(const Word& w) const override;
  bool has_ball_enumeration() const override { return true; }
  std::vector<Word> enumerate_ball(int radius) const override;
  int geodesic_length(const Word& w) const override;
  std::optional<std::uint64_t> group_order() const override {
    return elements_.size();
  }

  int apply(int point, const Word& w) const;

 private:
  int degree_;
  std::vector<std::vector<int>> letter_images_;  // per signed letter
  std::vector<std::vector<int>> elements_;       // closure, BFS order
  std::vector<Word> element_words_;              // shortlex-least
  std::vector<int> element_depth_;
  std::unordered_map<size_t, std::vector<int>> perm_index_;

  size_t perm_hash(const std::vector<int>& p) const;
  int index_of(const std::vector<int>& p) const;
  std::vector<int> permutation_of(const Word& w) const;
};

/// A fully tabulated finite group: elements 0..size-1 with a
/// multiplication table, inverses, and a shortlex-least word per element.
struct FiniteGroup {
  Alphabet alphabet;
  std::vector<int> generator_elements;   // element id per generator
  std::vector<std::vector<int>> table;   // table[x][y] = x*y
  std::vector<int> inverse;
  std::vector<Word> words;               // shortlex-least word per element
  std::vector<int> depth;                // geodesic length per element

  int size() const { return static_cast<int>(table.size()); }
  int identity() const { return 0; }
  int multiply(int x, int y) const {
    return table[static_cast<size_t>(x)][static_cast<size_t>(y)];
  }
  int element_of(const Word& w) const;
};

/// Tabulates a finite group from any oracle with normal forms and ball
/// enumeration. Throws capability_error when the ball keeps growing past
/// max_elements.
FiniteGroup tabulate_finite_group(const GroupOracle& o, const Alphabet& alphabet,
                                  int max_elements);

/// Oracle view over a tabulated finite group.
class FiniteGroupOracle : public GroupOracle {
 public:
  explicit FiniteGroupOracle(FiniteGroup g) : g_(std::move(g)) {}

  bool is_trivial(const Word& w) const override {
    return g_.element_of(w) == g_.identity();
  }
  bool has_normal_forms() const override { return true; }
  Word normal_form(const Word& w) const override {
    return g_.words[static_cast<size_t>(g_.element_of(w))];
  }
  bool has_ball_enumeration() const override { return true; }
  std::vector<Word> enumerate_ball(int radius) const override;
  int geodesic_length(const Word& w) const override {
    return g_.depth[static_cast<size_t>(g_.element_of(w))];
  }
  std::optional<std::uint64_t> group_order() const override {
    return static_cast<std::uint64_t>(g_.size());
  }
  const FiniteGroup& group() const { return g_; }

 private:
  FiniteGroup g_;
};

}  // namespace grank
