#pragma once

#include <span>
#include <vector>

#include "grank/word.hpp"

namespace grank {

using Tuple = std::vector<Word>;

/// Elementary Nielsen moves on a tuple:
///   N1(i)    replace g_i by g_i^-1
///   N2(i,j)  replace g_i by g_i * g_j   (i != j)
///   N3(i,j)  interchange g_i and g_j    (i != j)
struct NielsenMove {
  enum class Kind { Invert, RightMultiply, Swap };
  Kind kind;
  int i = 0;
  int j = 0;

  static NielsenMove invert(int i) { return {Kind::Invert, i, 0}; }
  static NielsenMove right_multiply(int i, int j) {
    return {Kind::RightMultiply, i, j};
  }
  static NielsenMove swap(int i, int j) { return {Kind::Swap, i, j}; }

  bool operator==(const NielsenMove&) const = default;
};

Tuple apply_nielsen(const Tuple& t, const NielsenMove& m);
Tuple apply_nielsen_sequence(Tuple t, std::span<const NielsenMove> moves);

/// The move sequence undoing a single Nielsen move (N1 and N3 are
/// involutions; N2 expands to N1(j) N2(i,j) N1(j)).
std::vector<NielsenMove> inverse_moves(const NielsenMove& m);

/// A tuple split into subgroup parts Y_1..Y_s and a tail T. Either s > 0
/// or the tail is nonempty. Nontriviality of the parts is a caller-checked
/// precondition, not a structural invariant.
struct PartitionedTuple {
  std::vector<Tuple> parts;
  Tuple tail;

  PartitionedTuple(std::vector<Tuple> parts_, Tuple tail_);

  int length() const;
  Tuple underlying() const;

  /// Flat index of a part entry / tail entry in the underlying tuple.
  int flat_index_of_part_entry(int part, int index) const;
  int flat_index_of_tail_entry(int index) const;

  bool operator==(const PartitionedTuple&) const = default;
};

/// Complexity (m, n) = (tail length, part count), ordered lexicographically
/// with m dominant. A well-order on N^2.
struct Complexity {
  int tail_length = 0;
  int part_count = 0;
  bool operator==(const Complexity&) const = default;
};

Complexity complexity(const PartitionedTuple& m);
/// Returns <0, 0, >0.
int compare(Complexity a, Complexity b);

/// One factor of a product expression: an entry of the partitioned tuple,
/// possibly inverted. part == -1 addresses the tail.
struct EntryRef {
  int part = -1;
  int index = 0;
  bool inverted = false;
};

using ProductExpr = std::vector<EntryRef>;

/// Elementary moves on partitioned tuples. Each move carries explicit
/// product expressions over permitted entries, so it is checkable and can
/// be expanded into a plain Nielsen-move sequence on the underlying tuple.
///   ConjugatePart(i, g):   Y_i -> g^-1 Y_i g, g a product over the other
///                          parts and the tail.
///   SlideTailEntry(i, u, u'): t_i -> u t_i u', u and u' products over the
///                          parts and the other tail entries.
struct ElementaryMove {
  enum class Kind { ConjugatePart, SlideTailEntry };
  Kind kind;
  int target = 0;
  ProductExpr conjugator;  // ConjugatePart
  ProductExpr left_factor, right_factor;  // SlideTailEntry

  static ElementaryMove conjugate_part(int part, ProductExpr g);
  static ElementaryMove slide_tail_entry(int index, ProductExpr u,
                                         ProductExpr u_prime);
};

struct ElementaryMoveResult {
  PartitionedTuple result;
  std::vector<NielsenMove> nielsen_moves;  // on the underlying tuple
};

Word evaluate_expr(const PartitionedTuple& m, const ProductExpr& e);

/// Applies an elementary move. Throws std::invalid_argument when an
/// expression references a forbidden entry, std::out_of_range on bad
/// indices. The emitted Nielsen sequence transforms underlying(m) into
/// underlying(result) letter for letter.
ElementaryMoveResult apply_elementary(const PartitionedTuple& m,
                                      const ElementaryMove& move);

}  // namespace grank
