#include "garside/interval.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace garside {

ZPartition z_partition(const MonomialMatrix& w) {
  int n = w.dim();
  ZPartition z;
  z.mask.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  int best = n + 1;
  for (int i = 1; i <= n; ++i) {
    if (w.col(i) < best) {
      best = w.col(i);
      z.bubbles.emplace_back(i, best);
    }
  }
  int reach = 0;
  auto b = z.bubbles.rbegin();
  for (int i = n; i >= 1; --i) {
    if (b != z.bubbles.rend() && b->first == i) {
      reach = std::max(reach, b->second);
      ++b;
    }
    for (int c = 1; c <= reach; ++c) z.mask[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(c) - 1] = true;
  }
  return z;
}

bool in_interval(const MonomialMatrix& w, const IntervalCtx& ctx) {
  if (w.dim() != ctx.n) throw std::invalid_argument("dimension mismatch");
  ZPartition z = z_partition(w);
  for (int i = 1; i <= ctx.n; ++i) {
    if (z.in_z(i, w.col(i))) continue;
    Exp e = w.exp(i);
    if (e != 0 && e != ctx.k) return false;
  }
  return true;
}

bool in_interval_by_length(const MonomialMatrix& w, const IntervalCtx& ctx) {
  if (w.dim() != ctx.n) throw std::invalid_argument("dimension mismatch");
  return length(w) + length(w.inverse() * ctx.delta) == length(ctx.delta);
}

std::optional<Exp> classify_balanced_maxlen(const MonomialMatrix& w) {
  if (!is_max_length(w)) throw std::invalid_argument("element is not of maximal length");
  Exp k = w.exp(2);
  for (int i = 2; i <= w.dim(); ++i)
    if (w.exp(i) != k) return std::nullopt;
  return k;
}

MonomialMatrix complement_right(const MonomialMatrix& a, const IntervalCtx& ctx) {
  if (!in_interval(a, ctx)) throw std::invalid_argument("element outside the interval");
  return a.inverse() * ctx.delta;
}

MonomialMatrix complement_left(const MonomialMatrix& a, const IntervalCtx& ctx) {
  if (!in_interval(a, ctx)) throw std::invalid_argument("element outside the interval");
  return ctx.delta * a.inverse();
}

namespace {

AtomSet intersect(const DescentSet& a, const DescentSet& b) {
  AtomSet out;
  std::set_intersection(a.s_part.begin(), a.s_part.end(), b.s_part.begin(), b.s_part.end(),
                        std::back_inserter(out.s_part));
  using TK = DescentSet::TKind;
  if (a.t_kind == TK::none || b.t_kind == TK::none) {
    out.t_kind = TK::none;
  } else if (a.t_kind == TK::all && b.t_kind == TK::all) {
    out.t_kind = TK::all;
  } else if (a.t_kind == TK::all) {
    out.t_kind = TK::one;
    out.t_index = b.t_index;
  } else if (b.t_kind == TK::all) {
    out.t_kind = TK::one;
    out.t_index = a.t_index;
  } else if (a.t_index == b.t_index) {
    out.t_kind = TK::one;
    out.t_index = a.t_index;
  }
  return out;
}

// Deterministic atom pick; any choice yields the same meet.
std::optional<Gen> pick_atom(const AtomSet& s, const IntervalCtx& ctx) {
  if (!s.s_part.empty()) return Gen::s(s.s_part.front());
  if (s.t_kind == DescentSet::TKind::one) return Gen::t(s.t_index);
  if (s.t_kind == DescentSet::TKind::all) return Gen::t(ctx.k);
  return std::nullopt;
}

}  // namespace

AtomSet common_atoms(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx) {
  if (!in_interval(a, ctx) || !in_interval(b, ctx))
    throw std::invalid_argument("element outside the interval");
  return intersect(left_descents(a), left_descents(b));
}

MonomialMatrix meet_left(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx) {
  if (!in_interval(a, ctx) || !in_interval(b, ctx))
    throw std::invalid_argument("element outside the interval");
  MonomialMatrix d = MonomialMatrix::identity(ctx.n);
  MonomialMatrix aa = a, bb = b;
  while (auto g = pick_atom(intersect(left_descents(aa), left_descents(bb)), ctx)) {
    MonomialMatrix x = generator_matrix(*g, ctx.n);
    d = d * x;
    aa = x * aa;  // x^{-1} = x
    bb = x * bb;
  }
  assert(in_interval(d, ctx));
  return d;
}

MonomialMatrix meet_right(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx) {
  if (!in_interval(a, ctx) || !in_interval(b, ctx))
    throw std::invalid_argument("element outside the interval");
  MonomialMatrix d = MonomialMatrix::identity(ctx.n);
  MonomialMatrix aa = a, bb = b;
  while (auto g = pick_atom(intersect(right_descents(aa), right_descents(bb)), ctx)) {
    MonomialMatrix x = generator_matrix(*g, ctx.n);
    d = x * d;
    aa = aa * x;
    bb = bb * x;
  }
  assert(in_interval(d, ctx));
  return d;
}

MonomialMatrix join_left(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx) {
  MonomialMatrix m = meet_right(complement_right(a, ctx), complement_right(b, ctx), ctx);
  MonomialMatrix j = ctx.delta * m.inverse();
  assert(in_interval(j, ctx));
  return j;
}

MonomialMatrix join_right(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx) {
  MonomialMatrix m = meet_left(complement_left(a, ctx), complement_left(b, ctx), ctx);
  MonomialMatrix j = m.inverse() * ctx.delta;
  assert(in_interval(j, ctx));
  return j;
}

}  // namespace garside
