#include "grank/tuples.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace grank {

Tuple apply_nielsen(const Tuple& t, const NielsenMove& m) {
  auto check = [&](int k) {
    if (k < 0 || k >= static_cast<int>(t.size()))
      throw std::out_of_range("Nielsen move index out of range");
  };
  Tuple out = t;
  switch (m.kind) {
    case NielsenMove::Kind::Invert:
      check(m.i);
      out[static_cast<size_t>(m.i)] = t[static_cast<size_t>(m.i)].inverse();
      break;
    case NielsenMove::Kind::RightMultiply:
      check(m.i);
      check(m.j);
      if (m.i == m.j)
        throw std::out_of_range("N2 requires distinct indices");
      out[static_cast<size_t>(m.i)] =
          t[static_cast<size_t>(m.i)] * t[static_cast<size_t>(m.j)];
      break;
    case NielsenMove::Kind::Swap:
      check(m.i);
      check(m.j);
      if (m.i == m.j)
        throw std::out_of_range("N3 requires distinct indices");
      std::swap(out[static_cast<size_t>(m.i)], out[static_cast<size_t>(m.j)]);
      break;
  }
  return out;
}

Tuple apply_nielsen_sequence(Tuple t, std::span<const NielsenMove> moves) {
  for (const auto& m : moves) t = apply_nielsen(t, m);
  return t;
}

std::vector<NielsenMove> inverse_moves(const NielsenMove& m) {
  switch (m.kind) {
    case NielsenMove::Kind::Invert:
    case NielsenMove::Kind::Swap:
      return {m};
    case NielsenMove::Kind::RightMultiply:
      return {NielsenMove::invert(m.j), NielsenMove::right_multiply(m.i, m.j),
              NielsenMove::invert(m.j)};
  }
  return {};
}

PartitionedTuple::PartitionedTuple(std::vector<Tuple> parts_, Tuple tail_)
    : parts(std::move(parts_)), tail(std::move(tail_)) {
  if (parts.empty() && tail.empty())
    throw std::invalid_argument(
        "partitioned tuple needs a part or a nonempty tail");
}

int PartitionedTuple::length() const {
  size_t n = tail.size();
  for (const auto& y : parts) n += y.size();
  return static_cast<int>(n);
}

Tuple PartitionedTuple::underlying() const {
  Tuple out;
  out.reserve(static_cast<size_t>(length()));
  for (const auto& y : parts) out.insert(out.end(), y.begin(), y.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

int PartitionedTuple::flat_index_of_part_entry(int part, int index) const {
  int off = 0;
  for (int p = 0; p < part; ++p) off += static_cast<int>(parts[static_cast<size_t>(p)].size());
  return off + index;
}

int PartitionedTuple::flat_index_of_tail_entry(int index) const {
  int off = 0;
  for (const auto& y : parts) off += static_cast<int>(y.size());
  return off + index;
}

Complexity complexity(const PartitionedTuple& m) {
  return {static_cast<int>(m.tail.size()), static_cast<int>(m.parts.size())};
}

int compare(Complexity a, Complexity b) {
  if (a.tail_length != b.tail_length)
    return a.tail_length < b.tail_length ? -1 : 1;
  if (a.part_count != b.part_count) return a.part_count < b.part_count ? -1 : 1;
  return 0;
}

ElementaryMove ElementaryMove::conjugate_part(int part, ProductExpr g) {
  ElementaryMove m;
  m.kind = Kind::ConjugatePart;
  m.target = part;
  m.conjugator = std::move(g);
  return m;
}

ElementaryMove ElementaryMove::slide_tail_entry(int index, ProductExpr u,
                                                ProductExpr u_prime) {
  ElementaryMove m;
  m.kind = Kind::SlideTailEntry;
  m.target = index;
  m.left_factor = std::move(u);
  m.right_factor = std::move(u_prime);
  return m;
}

namespace {

const Word& entry_value(const PartitionedTuple& m, const EntryRef& r) {
  if (r.part < 0) return m.tail.at(static_cast<size_t>(r.index));
  return m.parts.at(static_cast<size_t>(r.part)).at(static_cast<size_t>(r.index));
}

// Nielsen expansion helpers. Source entries of the expression are never the
// target entry, so their values stay fixed throughout.

void emit_right_multiply(std::vector<NielsenMove>& out, int target,
                         const PartitionedTuple& m, const ProductExpr& expr,
                         bool invert_expr) {
  auto emit_factor = [&](const EntryRef& r, bool inv) {
    int src = r.part < 0 ? m.flat_index_of_tail_entry(r.index)
                         : m.flat_index_of_part_entry(r.part, r.index);
    if (inv) out.push_back(NielsenMove::invert(src));
    out.push_back(NielsenMove::right_multiply(target, src));
    if (inv) out.push_back(NielsenMove::invert(src));
  };
  if (!invert_expr) {
    for (const auto& r : expr) emit_factor(r, r.inverted);
  } else {
    for (auto it = expr.rbegin(); it != expr.rend(); ++it)
      emit_factor(*it, !it->inverted);
  }
}

// target <- u * target, via N1(target), right-multiply by u^-1, N1(target).
void emit_left_multiply(std::vector<NielsenMove>& out, int target,
                        const PartitionedTuple& m, const ProductExpr& u) {
  if (u.empty()) return;
  out.push_back(NielsenMove::invert(target));
  emit_right_multiply(out, target, m, u, /*invert_expr=*/true);
  out.push_back(NielsenMove::invert(target));
}

void check_refs(const PartitionedTuple& m, const ProductExpr& e,
                ElementaryMove::Kind kind, int target) {
  for (const auto& r : e) {
    if (r.part >= 0) {
      if (r.part >= static_cast<int>(m.parts.size()) || r.index < 0 ||
          r.index >= static_cast<int>(m.parts[static_cast<size_t>(r.part)].size()))
        throw std::out_of_range("expression entry out of range");
      if (kind == ElementaryMove::Kind::ConjugatePart && r.part == target)
        throw std::invalid_argument(
            "conjugator references the conjugated part");
    } else {
      if (r.index < 0 || r.index >= static_cast<int>(m.tail.size()))
        throw std::out_of_range("expression entry out of range");
      if (kind == ElementaryMove::Kind::SlideTailEntry && r.index == target)
        throw std::invalid_argument("multiplier references the slid entry");
    }
  }
}

}  // namespace

Word evaluate_expr(const PartitionedTuple& m, const ProductExpr& e) {
  Word out;
  for (const auto& r : e) {
    const Word& v = entry_value(m, r);
    out = out * (r.inverted ? v.inverse() : v);
  }
  return out;
}

ElementaryMoveResult apply_elementary(const PartitionedTuple& m,
                                      const ElementaryMove& move) {
  PartitionedTuple result = m;
  std::vector<NielsenMove> seq;

  if (move.kind == ElementaryMove::Kind::ConjugatePart) {
    if (move.target < 0 || move.target >= static_cast<int>(m.parts.size()))
      throw std::out_of_range("part index out of range");
    check_refs(m, move.conjugator, move.kind, move.target);
    Word g = evaluate_expr(m, move.conjugator);
    auto& part = result.parts[static_cast<size_t>(move.target)];
    for (size_t k = 0; k < part.size(); ++k) {
      part[k] = g.inverse() * part[k] * g;
      int flat = m.flat_index_of_part_entry(move.target, static_cast<int>(k));
      // y -> y g, then left-multiply by g^-1.
      emit_right_multiply(seq, flat, m, move.conjugator, false);
      if (!move.conjugator.empty()) {
        seq.push_back(NielsenMove::invert(flat));
        emit_right_multiply(seq, flat, m, move.conjugator, false);
        seq.push_back(NielsenMove::invert(flat));
      }
    }
  } else {
    if (move.target < 0 || move.target >= static_cast<int>(m.tail.size()))
      throw std::out_of_range("tail index out of range");
    check_refs(m, move.left_factor, move.kind, move.target);
    check_refs(m, move.right_factor, move.kind, move.target);
    Word u = evaluate_expr(m, move.left_factor);
    Word up = evaluate_expr(m, move.right_factor);
    auto& t = result.tail[static_cast<size_t>(move.target)];
    t = u * t * up;
    int flat = m.flat_index_of_tail_entry(move.target);
    emit_right_multiply(seq, flat, m, move.right_factor, false);
    emit_left_multiply(seq, flat, m, move.left_factor);
  }

  assert(apply_nielsen_sequence(m.underlying(), seq) == result.underlying());
  return {std::move(result), std::move(seq)};
}

}  // namespace grank
