#include "garside/geodesic.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace garside {

namespace {

struct PeelStep {
  int c;  // column of row i's entry within the i x i block
  Exp k;  // its exponent
};

// Peels w into its blocks: step i records the entry of row i of the i x i
// block obtained by deleting row j and column c_j for j = n..i+1, each time
// multiplying the first remaining column by the removed entry. steps[i-2]
// belongs to block size i.
std::vector<PeelStep> peel(const MonomialMatrix& w) {
  int n = w.dim();
  std::vector<int> perm = w.perm();
  std::vector<Exp> exps = w.exps();
  std::vector<PeelStep> steps(static_cast<std::size_t>(n) - 1, PeelStep{});
  for (int m = n; m >= 2; --m) {
    int c = perm[static_cast<std::size_t>(m) - 1];
    Exp k = exps[static_cast<std::size_t>(m) - 1];
    steps[static_cast<std::size_t>(m) - 2] = PeelStep{c, k};
    perm.resize(static_cast<std::size_t>(m) - 1);
    exps.resize(static_cast<std::size_t>(m) - 1);
    for (std::size_t r = 0; r + 1 < static_cast<std::size_t>(m); ++r) {
      if (perm[r] > c) --perm[r];
      if (perm[r] == 1) exps[r] = detail::checked_add(exps[r], k);
    }
  }
  return steps;
}

}  // namespace

PositiveWord reduced_expression(const MonomialMatrix& w) {
  auto steps = peel(w);
  PositiveWord out;
  for (int i = 2; i <= w.dim(); ++i) {
    auto [c, k] = steps[static_cast<std::size_t>(i) - 2];
    if (k == 0) {
      for (int j = i; j > c; --j) out.push_back(Gen::s(j));
    } else {
      for (int j = i; j >= 3; --j) out.push_back(Gen::s(j));
      out.push_back(Gen::t(k));
      if (c >= 2) out.push_back(Gen::t(0));
      for (int j = 3; j <= c; ++j) out.push_back(Gen::s(j));
    }
  }
  return out;
}

long long length(const MonomialMatrix& w) {
  auto steps = peel(w);
  long long len = 0;
  for (int i = 2; i <= w.dim(); ++i) {
    auto [c, k] = steps[static_cast<std::size_t>(i) - 2];
    len += (k == 0) ? (i - c) : (i + c - 2);
  }
  return len;
}

bool DescentSet::contains(Gen g) const {
  if (g.kind() == Gen::Kind::T)
    return t_kind == TKind::all || (t_kind == TKind::one && t_index == g.index());
  return std::binary_search(s_part.begin(), s_part.end(), static_cast<int>(g.index()));
}

DescentSet left_descents(const MonomialMatrix& w) {
  DescentSet d;
  if (w.col(1) < w.col(2)) {
    if (w.exp(2) != 0) d.t_kind = DescentSet::TKind::all;
  } else {
    d.t_kind = DescentSet::TKind::one;
    d.t_index = -w.exp(1);
  }
  for (int i = 3; i <= w.dim(); ++i) {
    bool desc = (w.col(i - 1) < w.col(i)) ? (w.exp(i) != 0) : (w.exp(i - 1) == 0);
    if (desc) d.s_part.push_back(i);
  }
  return d;
}

DescentSet right_descents(const MonomialMatrix& w) { return left_descents(w.inverse()); }

bool left_divides(const MonomialMatrix& v, const MonomialMatrix& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("dimension mismatch");
  return length(v) + length(v.inverse() * w) == length(w);
}

bool right_divides(const MonomialMatrix& v, const MonomialMatrix& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("dimension mismatch");
  return length(w * v.inverse()) + length(v) == length(w);
}

bool is_max_length(const MonomialMatrix& w) {
  if (!w.is_diagonal()) return false;
  return std::all_of(w.exps().begin(), w.exps().end(), [](Exp e) { return e != 0; });
}

MonomialMatrix lambda_power(int n, Exp k) {
  if (n < 2) throw std::invalid_argument("lambda needs dimension >= 2");
  if (k == 0) throw std::invalid_argument("lambda power must be nonzero");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Exp> exps(static_cast<std::size_t>(n), k);
  Exp head = 0;
  for (int i = 1; i < n; ++i) head = detail::checked_add(head, k);
  exps[0] = -head;
  return MonomialMatrix(n, std::move(perm), std::move(exps));
}

LengthTable bfs_length_oracle(int n, Exp index_bound, int radius) {
  if (index_bound < 0 || radius < 0) throw std::invalid_argument("bounds must be nonnegative");
  std::vector<MonomialMatrix> gens;
  for (Exp i = -index_bound; i <= index_bound; ++i) gens.push_back(generator_matrix(Gen::t(i), n));
  for (int j = 3; j <= n; ++j) gens.push_back(generator_matrix(Gen::s(j), n));

  LengthTable dist;
  std::deque<MonomialMatrix> frontier{MonomialMatrix::identity(n)};
  dist.emplace(frontier.front(), 0);
  while (!frontier.empty()) {
    MonomialMatrix w = std::move(frontier.front());
    frontier.pop_front();
    int d = dist.at(w);
    if (d == radius) continue;
    for (const auto& g : gens) {
      MonomialMatrix next = w * g;
      if (dist.emplace(next, d + 1).second) frontier.push_back(std::move(next));
    }
  }
  return dist;
}

}  // namespace garside
