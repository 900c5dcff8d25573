#pragma once

#include <string>
#include <vector>

#include "garside/monomial.hpp"

namespace garside::detail {

struct Relation {
  PositiveWord lhs, rhs;
  std::string name;
};

inline Relation make_relation(PositiveWord lhs, PositiveWord rhs) {
  std::string name = to_string(lhs) + " = " + to_string(rhs);
  return Relation{std::move(lhs), std::move(rhs), std::move(name)};
}

// Defining relations of the monoid presentation with parameter k, t-indices
// restricted to [-index_bound, index_bound]:
//   s(i) s(i+1) s(i) = s(i+1) s(i) s(i+1)            3 <= i <= n-1
//   s(i) s(j) = s(j) s(i)                            |i-j| >= 2
//   s(3) t(i) s(3) = t(i) s(3) t(i)
//   s(j) t(i) = t(i) s(j)                            4 <= j <= n
//   t(i) t(i-k) = t(j) t(j-k)                        i != j
inline std::vector<Relation> monoid_relations(int n, Exp k, Exp index_bound) {
  std::vector<Relation> rels;
  for (int i = 3; i + 1 <= n; ++i)
    rels.push_back(make_relation({Gen::s(i), Gen::s(i + 1), Gen::s(i)},
                                 {Gen::s(i + 1), Gen::s(i), Gen::s(i + 1)}));
  for (int i = 3; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      rels.push_back(make_relation({Gen::s(i), Gen::s(j)}, {Gen::s(j), Gen::s(i)}));
  for (Exp i = -index_bound; i <= index_bound; ++i) {
    if (n >= 3)
      rels.push_back(make_relation({Gen::s(3), Gen::t(i), Gen::s(3)},
                                   {Gen::t(i), Gen::s(3), Gen::t(i)}));
    for (int j = 4; j <= n; ++j)
      rels.push_back(make_relation({Gen::s(j), Gen::t(i)}, {Gen::t(i), Gen::s(j)}));
  }
  for (Exp i = -index_bound; i <= index_bound; ++i)
    for (Exp j = i + 1; j <= index_bound; ++j)
      rels.push_back(make_relation({Gen::t(i), Gen::t(i - k)}, {Gen::t(j), Gen::t(j - k)}));
  return rels;
}

// Defining relations of the Shi presentation (generators t(0), t(1), s(3..n)).
inline std::vector<Relation> shi_relations(int n) {
  std::vector<Relation> rels;
  for (int i = 3; i + 1 <= n; ++i)
    rels.push_back(make_relation({Gen::s(i), Gen::s(i + 1), Gen::s(i)},
                                 {Gen::s(i + 1), Gen::s(i), Gen::s(i + 1)}));
  for (int i = 3; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      rels.push_back(make_relation({Gen::s(i), Gen::s(j)}, {Gen::s(j), Gen::s(i)}));
  for (Exp i = 0; i <= 1; ++i) {
    if (n >= 3)
      rels.push_back(make_relation({Gen::s(3), Gen::t(i), Gen::s(3)},
                                   {Gen::t(i), Gen::s(3), Gen::t(i)}));
    for (int j = 4; j <= n; ++j)
      rels.push_back(make_relation({Gen::s(j), Gen::t(i)}, {Gen::t(i), Gen::s(j)}));
  }
  if (n >= 3)
    rels.push_back(make_relation(
        {Gen::s(3), Gen::t(1), Gen::t(0), Gen::s(3), Gen::t(1), Gen::t(0)},
        {Gen::t(1), Gen::t(0), Gen::s(3), Gen::t(1), Gen::t(0), Gen::s(3)}));
  return rels;
}

}  // namespace garside::detail
