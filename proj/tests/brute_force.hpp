// Test-side brute-force oracles. These are kept deliberately independent of
// the library code paths they cross-check: plain arithmetic and closure
// enumeration, no rewriting, no coset tables.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "grank/word.hpp"

namespace brute {

// --- permutation group closure ---------------------------------------------

using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_compose(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (size_t i = 0; i < first.size(); ++i)
    out[i] = then[static_cast<size_t>(first[i])];
  return out;
}

inline Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return out;
}

// Full closure enumeration by repeated multiplication.
inline std::set<Perm> perm_closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  if (gens.empty()) return seen;
  std::vector<Perm> queue;
  Perm id = perm_identity(static_cast<int>(gens[0].size()));
  seen.insert(id);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : gens) {
      for (const Perm& h : {perm_compose(queue[head], g),
                            perm_compose(queue[head], perm_inverse(g))}) {
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
  }
  return seen;
}

// Image of a letter sequence under generator images (left-to-right action).
inline Perm perm_of_word(const grank::Word& w, const std::vector<Perm>& gens) {
  Perm acc = perm_identity(static_cast<int>(gens.at(0).size()));
  for (grank::Letter l : w) {
    const Perm& g = gens.at(static_cast<size_t>(grank::generator_of(l)));
    acc = perm_compose(acc, grank::is_inverse(l) ? perm_inverse(g) : g);
  }
  return acc;
}

// --- free-abelian and cyclic arithmetic -------------------------------------

inline std::vector<long long> exponents(const grank::Word& w, int ngens) {
  std::vector<long long> e(static_cast<size_t>(ngens), 0);
  for (grank::Letter l : w)
    e[static_cast<size_t>(grank::generator_of(l))] += grank::is_inverse(l) ? -1 : 1;
  return e;
}

inline bool trivial_in_free_abelian(const grank::Word& w, int ngens) {
  for (long long v : exponents(w, ngens))
    if (v != 0) return false;
  return true;
}

inline bool trivial_in_cyclic(const grank::Word& w, long long n) {
  long long e = exponents(w, 1)[0] % n;
  return e == 0;
}

// Lattice-ball count #{(i,j) : |i|+|j| <= r}.
inline long long z2_ball_size(int r) {
  long long n = 0;
  for (int i = -r; i <= r; ++i)
    for (int j = -r; j <= r; ++j)
      if (std::abs(i) + std::abs(j) <= r) ++n;
  return n;
}

// Ball size in the free group of the given rank: 1 + 2k sum (2k-1)^(i-1).
inline long long free_ball_size(int rank, int r) {
  long long total = 1, sphere = 2 * rank;
  for (int i = 1; i <= r; ++i) {
    total += sphere;
    sphere *= 2 * rank - 1;
  }
  return total;
}

// --- fixed corpus permutation groups ----------------------------------------

// <a,b | a^2, b^3, (ab)^5> realized in A5.
inline std::vector<Perm> a5_generators() {
  return {{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}};
}

// <a,b | a^2, b^3, (ab)^2> realized in S3 (a a transposition).
inline std::vector<Perm> s3_generators_a2() {
  return {{1, 0, 2}, {1, 2, 0}};
}

// <a,b | a^3, b^2, (ab)^2> realized in S3 (a the 3-cycle).
inline std::vector<Perm> s3_generators_a3() {
  return {{1, 2, 0}, {1, 0, 2}};
}

}  // namespace brute
