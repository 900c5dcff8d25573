#include "garside/normal_form.hpp"

#include <algorithm>
#include <cassert>

#include "relations.hpp"

namespace garside {

namespace {

bool same_ctx(const IntervalCtx& a, const IntervalCtx& b) { return a.n == b.n && a.k == b.k; }

void require_same_ctx(const IntervalCtx& a, const IntervalCtx& b) {
  if (!same_ctx(a, b)) throw std::invalid_argument("interval context mismatch");
}

}  // namespace

Simple::Simple(MonomialMatrix m, const IntervalCtx& ctx) : m_(std::move(m)), ctx_(&ctx) {
  if (!in_interval(m_, ctx)) throw std::invalid_argument("element outside the interval");
}

Simple Simple::identity(const IntervalCtx& ctx) {
  return Simple(MonomialMatrix::identity(ctx.n), ctx);
}

Simple Simple::delta(const IntervalCtx& ctx) { return Simple(ctx.delta, ctx); }

Simple tau(const Simple& w) {
  const IntervalCtx& ctx = w.ctx();
  return Simple(ctx.delta.inverse() * w.matrix() * ctx.delta, ctx);
}

Simple tau_inv(const Simple& w) {
  const IntervalCtx& ctx = w.ctx();
  return Simple(ctx.delta * w.matrix() * ctx.delta.inverse(), ctx);
}

std::pair<Simple, Simple> left_weighted_pair(const Simple& u, const Simple& v) {
  const IntervalCtx& ctx = u.ctx();
  require_same_ctx(ctx, v.ctx());
  MonomialMatrix g = meet_left(complement_right(u.matrix(), ctx), v.matrix(), ctx);
  if (g.is_identity()) return {u, v};
  return {Simple(u.matrix() * g, ctx), Simple(g.inverse() * v.matrix(), ctx)};
}

CanonicalPositive normal_form(std::vector<Simple> factors) {
  CanonicalPositive out;
  if (factors.empty()) return out;
  const IntervalCtx& ctx = factors.front().ctx();
  long long budget = 0;
  for (const Simple& f : factors) {
    require_same_ctx(ctx, f.ctx());
    budget += length(f.matrix());
  }
  std::erase_if(factors, [](const Simple& f) { return f.is_identity(); });

  // Each changing sweep strictly raises (l(x_1), l(x_2), ...) in lex order.
  long long sweeps = (budget + 2) * (static_cast<long long>(factors.size()) + 2);
  bool changed = true;
  while (changed) {
    if (--sweeps < 0) throw std::logic_error("normal form failed to stabilize");
    changed = false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      auto [u, v] = left_weighted_pair(factors[i], factors[i + 1]);
      if (!(u.matrix() == factors[i].matrix())) {
        factors[i] = u;
        factors[i + 1] = v;
        changed = true;
      }
    }
    std::erase_if(factors, [](const Simple& f) { return f.is_identity(); });
  }
  out.factors = std::move(factors);
  return out;
}

MonomialMatrix GroupElement::to_matrix() const {
  if (ctx == nullptr) throw std::logic_error("group element without context");
  MonomialMatrix acc = MonomialMatrix::identity(ctx->n);
  MonomialMatrix step = delta_exp >= 0 ? ctx->delta : ctx->delta.inverse();
  for (Exp i = 0; i < (delta_exp >= 0 ? delta_exp : -delta_exp); ++i) acc = acc * step;
  for (const Simple& f : positive.factors) acc = acc * f.matrix();
  return acc;
}

GroupElement from_group_word(const Word& w, const IntervalCtx& ctx) {
  Exp m = 0;
  std::vector<Simple> factors;
  for (const Letter& l : w) {
    MonomialMatrix g = generator_matrix(l.gen, ctx.n);
    if (!l.inverse) {
      factors.emplace_back(std::move(g), ctx);
    } else {
      // g^{-1} = complement_right(g) * delta^{-1}; push delta^{-1} to the front.
      factors.emplace_back(complement_right(g, ctx), ctx);
      m -= 1;
      for (Simple& f : factors) f = tau_inv(f);
    }
  }
  GroupElement out;
  out.delta_exp = m;
  out.positive = normal_form(std::move(factors));
  out.ctx = &ctx;
  auto& fs = out.positive.factors;
  while (!fs.empty() && fs.front().is_delta()) {
    ++out.delta_exp;
    fs.erase(fs.begin());
  }
  return out;
}

bool equals(const GroupElement& a, const GroupElement& b) {
  if (a.ctx == nullptr || b.ctx == nullptr) throw std::invalid_argument("group element without context");
  require_same_ctx(*a.ctx, *b.ctx);
  return a.delta_exp == b.delta_exp && a.positive == b.positive;
}

bool word_problem(const Word& w1, const Word& w2, const IntervalCtx& ctx) {
  return equals(from_group_word(w1, ctx), from_group_word(w2, ctx));
}

RelationReport verify_monoid_relations(const IntervalCtx& ctx, Exp index_bound) {
  RelationReport report;
  for (const auto& rel : detail::monoid_relations(ctx.n, ctx.k, index_bound)) {
    ++report.checked;
    if (!word_problem(to_word(rel.lhs), to_word(rel.rhs), ctx))
      report.failures.push_back({rel.name});
  }
  return report;
}

}  // namespace garside
