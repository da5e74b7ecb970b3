#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grank/presentation.hpp"
#include "grank/word.hpp"

namespace grank {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Smith normal form D = P * A * Q with P, Q unimodular. diag holds the
/// invariant factors (nonnegative, each dividing the next); rank is the
/// number of nonzero factors.
struct SmithResult {
  std::vector<std::int64_t> diag;
  int rank = 0;
  IntMatrix left;
  IntMatrix right;
};

SmithResult smith_normal_form(IntMatrix a, bool want_transforms = false);

std::vector<std::int64_t> exponent_vector(const Word& w, int generator_count);

/// Relation matrix with one column per relator (exponent vectors).
IntMatrix relation_matrix(const Presentation& p);

/// Minimal number of generators of the abelianization: free rank plus the
/// number of invariant factors exceeding 1. A lower bound for the rank of
/// the presented group.
int abelianized_rank(const Presentation& p);

/// Decides whether the tuple's images generate the abelianization, and if
/// not, whether the image lattice has finite or infinite index.
struct AbelianCheck {
  bool generates = false;
  bool infinite_index = false;
  std::int64_t index = 1;  // meaningful when finite
  std::vector<std::int64_t> invariants;
};

AbelianCheck abelian_generation_check(const Presentation& p,
                                      std::span<const Word> tuple);

}  // namespace grank
