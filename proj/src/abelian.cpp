#include "grank/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace grank {

namespace {

using std::int64_t;

struct SnfWorker {
  IntMatrix a;
  IntMatrix p;  // left transform, rows x rows
  IntMatrix q;  // right transform, cols x cols
  bool track;
  int rows, cols;

  SnfWorker(IntMatrix m, bool want) : a(std::move(m)), track(want) {
    rows = static_cast<int>(a.size());
    cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (track) {
      p.assign(rows, std::vector<int64_t>(rows, 0));
      q.assign(cols, std::vector<int64_t>(cols, 0));
      for (int i = 0; i < rows; ++i) p[i][i] = 1;
      for (int j = 0; j < cols; ++j) q[j][j] = 1;
    }
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) std::swap(p[i], p[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (track)
      for (auto& row : q) std::swap(row[i], row[j]);
  }
  // row i += f * row j
  void add_row(int i, int j, int64_t f) {
    for (int c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
    if (track)
      for (int c = 0; c < rows; ++c) p[i][c] += f * p[j][c];
  }
  // col i += f * col j
  void add_col(int i, int j, int64_t f) {
    for (int r = 0; r < rows; ++r) a[r][i] += f * a[r][j];
    if (track)
      for (int r = 0; r < cols; ++r) q[r][i] += f * q[r][j];
  }
  void negate_row(int i) {
    for (auto& v : a[i]) v = -v;
    if (track)
      for (auto& v : p[i]) v = -v;
  }

  bool find_pivot(int k, int& pr, int& pc) const {
    int64_t best = 0;
    pr = pc = -1;
    for (int r = k; r < rows; ++r)
      for (int c = k; c < cols; ++c) {
        int64_t v = std::abs(a[r][c]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    return pr >= 0;
  }

  void run() {
    int n = std::min(rows, cols);
    for (int k = 0; k < n; ++k) {
      int pr, pc;
      if (!find_pivot(k, pr, pc)) break;
      swap_rows(k, pr);
      swap_cols(k, pc);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (int r = k + 1; r < rows; ++r) {
          if (a[r][k] == 0) continue;
          int64_t f = a[r][k] / a[k][k];
          add_row(r, k, -f);
          if (a[r][k] != 0) {  // remainder smaller than pivot
            swap_rows(k, r);
            clean = false;
          }
        }
        for (int c = k + 1; c < cols; ++c) {
          if (a[k][c] == 0) continue;
          int64_t f = a[k][c] / a[k][k];
          add_col(c, k, -f);
          if (a[k][c] != 0) {
            swap_cols(k, c);
            clean = false;
          }
        }
        if (clean) {
          // Divisibility sweep: pivot must divide every remaining entry.
          for (int r = k + 1; r < rows && clean; ++r)
            for (int c = k + 1; c < cols && clean; ++c)
              if (a[r][c] % a[k][k] != 0) {
                add_row(k, r, 1);
                clean = false;
              }
        }
      }
      if (a[k][k] < 0) negate_row(k);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m, bool want_transforms) {
  SnfWorker w(std::move(m), want_transforms);
  w.run();
  SmithResult out;
  int n = std::min(w.rows, w.cols);
  out.diag.resize(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    out.diag[static_cast<size_t>(k)] = w.a[k][k];
    if (w.a[k][k] != 0) out.rank = k + 1;
  }
  if (want_transforms) {
    out.left = std::move(w.p);
    out.right = std::move(w.q);
  }
  return out;
}

std::vector<std::int64_t> exponent_vector(const Word& w, int generator_count) {
  std::vector<std::int64_t> e(static_cast<size_t>(generator_count), 0);
  for (Letter l : w) e[static_cast<size_t>(generator_of(l))] += is_inverse(l) ? -1 : 1;
  return e;
}

IntMatrix relation_matrix(const Presentation& p) {
  int g = p.generator_count();
  IntMatrix m(static_cast<size_t>(g),
              std::vector<std::int64_t>(p.relators().size(), 0));
  for (size_t j = 0; j < p.relators().size(); ++j) {
    auto col = exponent_vector(p.relators()[j], g);
    for (int i = 0; i < g; ++i) m[static_cast<size_t>(i)][j] = col[static_cast<size_t>(i)];
  }
  return m;
}

int abelianized_rank(const Presentation& p) {
  if (p.generator_count() == 0) return 0;
  if (p.relators().empty()) return p.generator_count();
  auto snf = smith_normal_form(relation_matrix(p));
  int free_rank = p.generator_count() - snf.rank;
  int torsion = 0;
  for (int k = 0; k < snf.rank; ++k)
    if (snf.diag[static_cast<size_t>(k)] > 1) ++torsion;
  return free_rank + torsion;
}

AbelianCheck abelian_generation_check(const Presentation& p,
                                      std::span<const Word> tuple) {
  int g = p.generator_count();
  AbelianCheck out;
  if (g == 0) {
    out.generates = true;
    return out;
  }
  IntMatrix m(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i)
    m[static_cast<size_t>(i)].reserve(tuple.size() + p.relators().size());
  for (const Word& w : tuple) {
    auto col = exponent_vector(w, g);
    for (int i = 0; i < g; ++i) m[static_cast<size_t>(i)].push_back(col[static_cast<size_t>(i)]);
  }
  for (const Word& r : p.relators()) {
    auto col = exponent_vector(r, g);
    for (int i = 0; i < g; ++i) m[static_cast<size_t>(i)].push_back(col[static_cast<size_t>(i)]);
  }
  if (m[0].empty()) {
    out.infinite_index = true;
    return out;
  }
  auto snf = smith_normal_form(std::move(m));
  out.invariants = snf.diag;
  if (snf.rank < g) {
    out.infinite_index = true;
    return out;
  }
  std::int64_t index = 1;
  for (int k = 0; k < g; ++k) index *= snf.diag[static_cast<size_t>(k)];
  out.index = index;
  out.generates = index == 1;
  return out;
}

}  // namespace grank
