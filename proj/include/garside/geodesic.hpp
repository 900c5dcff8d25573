#pragma once

#include <unordered_map>

#include "garside/monomial.hpp"

namespace garside {

// Geodesic normal form of w as a word in the generators t(i), s(j).
PositiveWord reduced_expression(const MonomialMatrix& w);
long long length(const MonomialMatrix& w);

// Left descents of w: the generators g with l(g*w) < l(w). The t-part is
// either empty, a single t(t_index), or all of {t(i) : i in Z} at once.
struct DescentSet {
  enum class TKind : std::uint8_t { none, one, all };
  TKind t_kind = TKind::none;
  Exp t_index = 0;          // meaningful only when t_kind == one
  std::vector<int> s_part;  // ascending, values in 3..n

  bool empty() const { return t_kind == TKind::none && s_part.empty(); }
  bool contains(Gen g) const;
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

DescentSet left_descents(const MonomialMatrix& w);
DescentSet right_descents(const MonomialMatrix& w);

// v divides w when lengths add up along the quotient.
bool left_divides(const MonomialMatrix& v, const MonomialMatrix& w);
bool right_divides(const MonomialMatrix& v, const MonomialMatrix& w);

// Elements of maximal length n(n-1): diagonal matrices with no exponent 0.
bool is_max_length(const MonomialMatrix& w);

// lambda^k = diag(x^{-k(n-1)}, x^k, ..., x^k); requires k != 0.
MonomialMatrix lambda_power(int n, Exp k);

// Independent length oracle: breadth-first search over the generator set
// {t(i) : |i| <= index_bound} and {s(3)..s(n)} out to the given radius.
using LengthTable = std::unordered_map<MonomialMatrix, int, MatrixHash>;
LengthTable bfs_length_oracle(int n, Exp index_bound, int radius);

}  // namespace garside
