#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "garside/artin_maps.hpp"

namespace testsupport {

using namespace garside;

using Rng = std::mt19937_64;
using Key = std::pair<std::vector<int>, std::vector<Exp>>;

inline Key key_of(const MonomialMatrix& m) { return {m.perm(), m.exps()}; }

inline MonomialMatrix matrix_of_key(int n, const Key& k) {
  return MonomialMatrix(n, k.first, k.second);
}

// Matrix with entry x^{e} at [row, col] for each (row, col, e) triple.
inline MonomialMatrix matrix_of(int n, const std::vector<std::tuple<int, int, Exp>>& entries) {
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  std::vector<Exp> exps(static_cast<std::size_t>(n), 0);
  for (auto [r, c, e] : entries) {
    perm[static_cast<std::size_t>(r) - 1] = c;
    exps[static_cast<std::size_t>(r) - 1] = e;
  }
  return MonomialMatrix(n, std::move(perm), std::move(exps));
}

inline MonomialMatrix random_element(Rng& rng, int n, Exp emax) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<Exp> dist(-emax, emax);
  for (;;) {
    std::vector<Exp> exps(static_cast<std::size_t>(n), 0);
    Exp sum = 0;
    for (int i = 0; i + 1 < n; ++i) {
      exps[static_cast<std::size_t>(i)] = dist(rng);
      sum += exps[static_cast<std::size_t>(i)];
    }
    if (-sum < -emax || -sum > emax) continue;
    exps[static_cast<std::size_t>(n) - 1] = -sum;
    return MonomialMatrix(n, perm, std::move(exps));
  }
}

inline Gen random_gen(Rng& rng, int n, Exp index_bound) {
  int s_count = n - 2;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(2 * index_bound) + s_count);
  int v = pick(rng);
  if (v <= 2 * index_bound) return Gen::t(v - index_bound);
  return Gen::s(3 + (v - 2 * static_cast<int>(index_bound) - 1));
}

inline Word random_word(Rng& rng, int n, Exp index_bound, int len, bool allow_inverse) {
  Word out;
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < len; ++i)
    out.push_back(Letter{random_gen(rng, n, index_bound), allow_inverse && flip(rng)});
  return out;
}

// Random left divisor of delta: a geodesic prefix with random descent picks.
inline MonomialMatrix random_simple(Rng& rng, const IntervalCtx& ctx, Exp index_window) {
  MonomialMatrix v = MonomialMatrix::identity(ctx.n);
  MonomialMatrix rest = ctx.delta;
  std::uniform_int_distribution<long long> steps(0, length(ctx.delta));
  long long m = steps(rng);
  for (long long step = 0; step < m; ++step) {
    DescentSet ds = left_descents(rest);
    std::vector<Gen> choices;
    for (int j : ds.s_part) choices.push_back(Gen::s(j));
    if (ds.t_kind == DescentSet::TKind::one) {
      choices.push_back(Gen::t(ds.t_index));
    } else if (ds.t_kind == DescentSet::TKind::all) {
      std::uniform_int_distribution<Exp> idx(-index_window, index_window);
      choices.push_back(Gen::t(idx(rng)));
    }
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    MonomialMatrix x = generator_matrix(choices[pick(rng)], ctx.n);
    v = v * x;
    rest = x * rest;
  }
  return v;
}

// All left divisors of w, t-strips restricted to |index| <= window.
inline std::set<Key> left_divisors_windowed(const MonomialMatrix& w, Exp window) {
  std::set<Key> visited;
  std::deque<std::pair<MonomialMatrix, MonomialMatrix>> q{{MonomialMatrix::identity(w.dim()), w}};
  visited.insert(key_of(q.front().first));
  while (!q.empty()) {
    auto [v, rest] = q.front();
    q.pop_front();
    DescentSet ds = left_descents(rest);
    std::vector<Gen> atoms;
    for (int j : ds.s_part) atoms.push_back(Gen::s(j));
    if (ds.t_kind == DescentSet::TKind::one) {
      atoms.push_back(Gen::t(ds.t_index));
    } else if (ds.t_kind == DescentSet::TKind::all) {
      for (Exp i = -window; i <= window; ++i) atoms.push_back(Gen::t(i));
    }
    for (Gen g : atoms) {
      MonomialMatrix x = generator_matrix(g, w.dim());
      MonomialMatrix v2 = v * x;
      if (visited.insert(key_of(v2)).second) q.emplace_back(v2, x * rest);
    }
  }
  return visited;
}

// All right divisors of w under the same window.
inline std::set<Key> right_divisors_windowed(const MonomialMatrix& w, Exp window) {
  std::set<Key> visited;
  std::deque<std::pair<MonomialMatrix, MonomialMatrix>> q{{MonomialMatrix::identity(w.dim()), w}};
  visited.insert(key_of(q.front().first));
  while (!q.empty()) {
    auto [v, rest] = q.front();
    q.pop_front();
    DescentSet ds = right_descents(rest);
    std::vector<Gen> atoms;
    for (int j : ds.s_part) atoms.push_back(Gen::s(j));
    if (ds.t_kind == DescentSet::TKind::one) {
      atoms.push_back(Gen::t(ds.t_index));
    } else if (ds.t_kind == DescentSet::TKind::all) {
      for (Exp i = -window; i <= window; ++i) atoms.push_back(Gen::t(i));
    }
    for (Gen g : atoms) {
      MonomialMatrix x = generator_matrix(g, w.dim());
      MonomialMatrix v2 = x * v;
      if (visited.insert(key_of(v2)).second) q.emplace_back(v2, rest * x);
    }
  }
  return visited;
}

// Closure of a positive word under one-step applications of the defining
// relations, t-relation targets restricted to the window. Throws if the
// closure exceeds the cap.
inline std::set<PositiveWord> rewrite_closure(const PositiveWord& start, Exp k, Exp window,
                                              std::size_t cap) {
  auto s_index = [](Gen g) { return g.kind() == Gen::Kind::S ? static_cast<int>(g.index()) : 2; };
  std::set<PositiveWord> seen{start};
  std::deque<PositiveWord> q{start};
  auto push = [&](PositiveWord w) {
    if (seen.size() > cap) throw std::logic_error("rewrite closure exceeded cap");
    if (seen.insert(w).second) q.push_back(std::move(w));
  };
  while (!q.empty()) {
    PositiveWord w = std::move(q.front());
    q.pop_front();
    for (std::size_t p = 0; p < w.size(); ++p) {
      // length-2 rules
      if (p + 2 <= w.size()) {
        Gen a = w[p], b = w[p + 1];
        bool both_s = a.kind() == Gen::Kind::S && b.kind() == Gen::Kind::S;
        bool commuting_ss = both_s && std::abs(s_index(a) - s_index(b)) >= 2;
        bool st_far = a.kind() != b.kind() && std::max(s_index(a), s_index(b)) >= 4;
        if (commuting_ss || st_far) {
          PositiveWord w2 = w;
          std::swap(w2[p], w2[p + 1]);
          push(std::move(w2));
        }
        if (a.kind() == Gen::Kind::T && b.kind() == Gen::Kind::T && a.index() - b.index() == k) {
          for (Exp j = -window; j <= window; ++j) {
            if (j == a.index()) continue;
            PositiveWord w2 = w;
            w2[p] = Gen::t(j);
            w2[p + 1] = Gen::t(j - k);
            push(std::move(w2));
          }
        }
      }
      // length-3 rules
      if (p + 3 <= w.size()) {
        Gen a = w[p], b = w[p + 1], c = w[p + 2];
        if (a.kind() == Gen::Kind::S && c.kind() == Gen::Kind::S && b.kind() == Gen::Kind::S &&
            s_index(a) == s_index(c) && std::abs(s_index(a) - s_index(b)) == 1) {
          PositiveWord w2 = w;
          w2[p] = b;
          w2[p + 1] = a;
          w2[p + 2] = b;
          push(std::move(w2));
        }
        if (a.kind() == Gen::Kind::S && s_index(a) == 3 && b.kind() == Gen::Kind::T &&
            c == a) {
          PositiveWord w2 = w;  // s3 t_i s3 -> t_i s3 t_i
          w2[p] = b;
          w2[p + 1] = a;
          w2[p + 2] = b;
          push(std::move(w2));
        }
        if (a.kind() == Gen::Kind::T && c == a && b.kind() == Gen::Kind::S && s_index(b) == 3) {
          PositiveWord w2 = w;  // t_i s3 t_i -> s3 t_i s3
          w2[p] = b;
          w2[p + 1] = a;
          w2[p + 2] = b;
          push(std::move(w2));
        }
      }
    }
  }
  return seen;
}

}  // namespace testsupport
