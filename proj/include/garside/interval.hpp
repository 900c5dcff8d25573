#pragma once

#include <optional>
#include <utility>

#include "garside/geodesic.hpp"

namespace garside {

// Interval [1, lambda^k] inside G(inf,inf,n). Immutable; shareable across
// threads. Objects built against a ctx keep a pointer to it, so the ctx must
// outlive them.
struct IntervalCtx {
  int n;
  Exp k;
  MonomialMatrix delta;

  IntervalCtx(int n, Exp k) : n(n), k(k), delta(lambda_power(n, k)) {}
};

// Z-partition of the index set of w: every nonzero entry whose strict
// upper-left rectangle is zero is a bubble, Z is the union of the bubbles'
// closed upper-left rectangles.
struct ZPartition {
  std::vector<std::pair<int, int>> bubbles;  // [row, col], 1-based, row-ascending
  std::vector<std::vector<bool>> mask;       // mask[i-1][c-1]: [i,c] in Z

  bool in_z(int row, int col) const {
    return mask[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col) - 1];
  }
};

ZPartition z_partition(const MonomialMatrix& w);

// Membership w <= lambda^k, decided by the Z-partition criterion: every
// nonzero entry outside Z must be 1 or x^k.
bool in_interval(const MonomialMatrix& w, const IntervalCtx& ctx);

// Same predicate through the definition l(w) + l(w^{-1} delta) = l(delta).
bool in_interval_by_length(const MonomialMatrix& w, const IntervalCtx& ctx);

// For w of maximal length: k when w = lambda^k, nullopt otherwise.
std::optional<Exp> classify_balanced_maxlen(const MonomialMatrix& w);

// a * complement_right(a) = delta; complement_left(a) * a = delta.
MonomialMatrix complement_right(const MonomialMatrix& a, const IntervalCtx& ctx);
MonomialMatrix complement_left(const MonomialMatrix& a, const IntervalCtx& ctx);

// Common left atoms (shared left descents) of two interval elements.
using AtomSet = DescentSet;
AtomSet common_atoms(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx);

// Lattice operations on [1, lambda^k] for left and right divisibility.
MonomialMatrix meet_left(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx);
MonomialMatrix join_left(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx);
MonomialMatrix meet_right(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx);
MonomialMatrix join_right(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx);

}  // namespace garside
