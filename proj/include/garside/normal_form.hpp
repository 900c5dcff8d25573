#pragma once

#include <string>
#include <utility>
#include <vector>

#include "garside/interval.hpp"

namespace garside {

// A simple element: a matrix lying in [1, delta]. Holds a pointer to its ctx.
class Simple {
 public:
  Simple(MonomialMatrix m, const IntervalCtx& ctx);

  const MonomialMatrix& matrix() const { return m_; }
  const IntervalCtx& ctx() const { return *ctx_; }

  bool is_identity() const { return m_.is_identity(); }
  bool is_delta() const { return m_ == ctx_->delta; }

  static Simple identity(const IntervalCtx& ctx);
  static Simple delta(const IntervalCtx& ctx);

 private:
  MonomialMatrix m_;
  const IntervalCtx* ctx_;
};

// tau(w) = delta^{-1} w delta; preserves the interval and lengths.
Simple tau(const Simple& w);
Simple tau_inv(const Simple& w);

// Slide weight left across the pair: (u, v) -> (u*g, g^{-1}*v) with
// g = meet_left(complement_right(u), v). Afterwards the pair is left-weighted.
std::pair<Simple, Simple> left_weighted_pair(const Simple& u, const Simple& v);

// Left-greedy normal form of a positive monoid element: no identity factors,
// every adjacent pair left-weighted. Delta factors, if any, form a prefix.
struct CanonicalPositive {
  std::vector<Simple> factors;
  friend bool operator==(const CanonicalPositive& a, const CanonicalPositive& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
      if (!(a.factors[i].matrix() == b.factors[i].matrix())) return false;
    return true;
  }
};

CanonicalPositive normal_form(std::vector<Simple> factors);

// Group element of B^(k) in the form delta^m * x_1 ... x_r with x_1 != delta.
struct GroupElement {
  Exp delta_exp = 0;
  CanonicalPositive positive;
  const IntervalCtx* ctx = nullptr;

  MonomialMatrix to_matrix() const;
};

GroupElement from_group_word(const Word& w, const IntervalCtx& ctx);
bool equals(const GroupElement& a, const GroupElement& b);
bool word_problem(const Word& w1, const Word& w2, const IntervalCtx& ctx);

struct RelationReport {
  struct Failure {
    std::string relation;
  };
  long long checked = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

// Checks every defining relation of the monoid presentation with t-indices in
// [-index_bound, index_bound] through the word problem.
RelationReport verify_monoid_relations(const IntervalCtx& ctx, Exp index_bound);

}  // namespace garside
