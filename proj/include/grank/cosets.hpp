#pragma once

#include <optional>
#include <vector>

#include "grank/presentation.hpp"
#include "grank/word.hpp"

namespace grank {

/// A complete coset table: the right action of the signed generators on
/// the cosets of a subgroup, with coset 0 the subgroup itself. Every
/// generator acts as a permutation; every relator and subgroup generator
/// word fixes coset 0.
class CosetTable {
 public:
  CosetTable(Presentation origin, std::vector<Word> subgroup_generators,
             std::vector<std::vector<int>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  int generator_count() const;
  int act(int coset, Letter l) const {
    return rows_[static_cast<size_t>(coset)][static_cast<size_t>(l)];
  }
  int act_word(int coset, const Word& w) const;

  const Presentation& origin() const { return origin_; }
  const std::vector<Word>& subgroup_generators() const { return subgens_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Same permutation action (rows compare equal entrywise).
  bool same_action(const CosetTable& other) const {
    return rows_ == other.rows_;
  }

 private:
  Presentation origin_;
  std::vector<Word> subgens_;
  std::vector<std::vector<int>> rows_;
};

enum class TCStatus { Running, Complete, Overflow };

/// HLT-style Todd-Coxeter coset enumeration, resumable in bounded steps so
/// it can be dovetailed. Cosets are numbered by discovery order;
/// coincidences merge to the smaller index and replay through the pending
/// queue.
class ToddCoxeterEnumerator {
 public:
  ToddCoxeterEnumerator(Presentation p, std::vector<Word> subgens,
                        int max_cosets);

  TCStatus status() const { return status_; }
  /// One bounded unit of work: trace one relator instance, fill one gap,
  /// or process one coincidence.
  void step();
  void run();
  int live_cosets() const;
  /// Compacted table; valid once status() == Complete.
  CosetTable table() const;

 private:
  Presentation p_;
  std::vector<Word> subgens_;
  int max_cosets_;
  TCStatus status_ = TCStatus::Running;

  std::vector<std::vector<int>> tab_;  // -1 = undefined
  std::vector<int> parent_;            // union-find for coincidences
  std::vector<std::pair<int, int>> coincidences_;
  size_t coincidence_head_ = 0;

  // scan position: (coset, relator index); relator index == relator count
  // means the fill phase for that coset.
  int scan_coset_ = 0;
  size_t scan_relator_ = 0;
  int fill_letter_ = 0;
  size_t init_subgen_ = 0;

  int find(int c);
  int create_coset();
  void set_entry(int c, Letter l, int d);
  void trace_and_fill(int start, const Word& w);
  void process_coincidence();
  void merge(int a, int b);
  int next_live(int c) const;
};

/// Runs enumeration to completion or overflow. On success the table size
/// is the index of <subgens> in the presented group.
std::optional<CosetTable> todd_coxeter(const Presentation& p,
                                       std::vector<Word> subgens,
                                       int max_cosets);

/// Prefix-closed coset representatives (BFS tree from coset 0), one word
/// per coset, coset 0 represented by the empty word.
std::vector<Word> schreier_transversal(const CosetTable& t);

/// Schreier generator words w_i x w_{i.x}^-1 for the non-tree edges, in the
/// ambient alphabet. Freely trivial ones are omitted.
std::vector<Word> schreier_generator_words(const CosetTable& t);

/// Presentation of the subgroup on its Schreier generators via
/// Reidemeister rewriting of the conjugated relators.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

/// All subgroups of index <= n (not just up to conjugacy), one complete
/// coset table each, with first-in-orbit canonical coset numbering.
std::vector<CosetTable> low_index_subgroups(const Presentation& p, int n);

/// Coset table of the normal core: the kernel of the action on the cosets
/// of t's subgroup.
CosetTable normal_core(const Presentation& p, const CosetTable& t);

bool membership_via_table(const CosetTable& t, const Word& w);

/// BFS renumbering from coset 0 in signed-letter order, for canonical
/// comparisons between tables from different constructions.
CosetTable canonicalized(const CosetTable& t);

}  // namespace grank
