#include "garside/artin_maps.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <map>

#include "relations.hpp"

namespace garside {

Word cll_t_as_shi_word(Exp i) {
  if (i == 0) return {Letter{Gen::t(0), false}};
  if (i == 1) return {Letter{Gen::t(1), false}};
  if (i > 1) {
    Word out{Letter{Gen::t(1), false}, Letter{Gen::t(0), false}};
    Word rev = inverse_word(cll_t_as_shi_word(i - 1));
    out.insert(out.end(), rev.begin(), rev.end());
    return out;
  }
  Word out = inverse_word(cll_t_as_shi_word(i + 1));
  out.push_back(Letter{Gen::t(1), false});
  out.push_back(Letter{Gen::t(0), false});
  return out;
}

std::vector<PositiveWord> phi_images(const IntervalCtx& ctx) {
  std::vector<PositiveWord> images;
  images.push_back({Gen::t(ctx.k), Gen::t(0)});
  for (int m = 2; m <= ctx.n - 1; ++m) images.push_back({Gen::s(m + 1)});
  return images;
}

namespace {

PositiveWord phi_word(const std::vector<int>& q_word, const std::vector<PositiveWord>& images) {
  PositiveWord out;
  for (int q : q_word) {
    if (q < 1 || static_cast<std::size_t>(q) > images.size())
      throw std::invalid_argument("q-generator index out of range");
    const PositiveWord& im = images[static_cast<std::size_t>(q) - 1];
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

// Signed permutations of {1..r}: the type-B Coxeter group. q_1 negates the
// first coordinate, q_m (m >= 2) swaps coordinates m-1 and m.
struct SignedPerm {
  std::vector<int> img;  // img[i] = signed image of i+1

  static SignedPerm identity(int r) {
    SignedPerm p;
    p.img.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) p.img[static_cast<std::size_t>(i)] = i + 1;
    return p;
  }

  SignedPerm operator*(const SignedPerm& rhs) const {
    SignedPerm out;
    out.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      int a = img[i];
      int b = rhs.img[static_cast<std::size_t>(std::abs(a)) - 1];
      out.img[i] = a < 0 ? -b : b;
    }
    return out;
  }

  SignedPerm inverse() const {
    SignedPerm out;
    out.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      int a = img[i];
      out.img[static_cast<std::size_t>(std::abs(a)) - 1] =
          a < 0 ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
    }
    return out;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

struct BGroup {
  int r;
  std::vector<SignedPerm> gens;
  std::map<SignedPerm, int> len;

  explicit BGroup(int rank) : r(rank) {
    for (int m = 1; m <= r; ++m) {
      SignedPerm g = SignedPerm::identity(r);
      if (m == 1) {
        g.img[0] = -1;
      } else {
        std::swap(g.img[static_cast<std::size_t>(m) - 2], g.img[static_cast<std::size_t>(m) - 1]);
      }
      gens.push_back(std::move(g));
    }
    std::deque<SignedPerm> frontier{SignedPerm::identity(r)};
    len.emplace(frontier.front(), 0);
    while (!frontier.empty()) {
      SignedPerm w = std::move(frontier.front());
      frontier.pop_front();
      int d = len.at(w);
      for (const auto& g : gens) {
        SignedPerm next = w * g;
        if (len.emplace(next, d + 1).second) frontier.push_back(std::move(next));
      }
    }
  }

  bool divides(const SignedPerm& v, const SignedPerm& w) const {
    return len.at(v) + len.at(v.inverse() * w) == len.at(w);
  }

  // Unique minimal common multiple in left divisibility; nullopt when the
  // minimum is not unique or fails to divide every common multiple.
  std::optional<SignedPerm> lcm(const SignedPerm& x, const SignedPerm& y) const {
    std::vector<SignedPerm> common;
    for (const auto& [w, d] : len)
      if (divides(x, w) && divides(y, w)) common.push_back(w);
    auto best = std::min_element(common.begin(), common.end(),
                                 [this](const SignedPerm& a, const SignedPerm& b) {
                                   return len.at(a) < len.at(b);
                                 });
    for (const auto& w : common) {
      if (!(w == *best) && len.at(w) == len.at(*best)) return std::nullopt;
      if (!divides(*best, w)) return std::nullopt;
    }
    return *best;
  }

  std::vector<int> reduced_word(SignedPerm w) const {
    std::vector<int> out;
    while (len.at(w) > 0) {
      for (int m = 1; m <= r; ++m) {
        SignedPerm next = gens[static_cast<std::size_t>(m) - 1] * w;
        if (len.at(next) < len.at(w)) {
          out.push_back(m);
          w = std::move(next);
          break;
        }
      }
    }
    return out;
  }
};

int coxeter_b_order(int i, int j) {
  if (i > j) std::swap(i, j);
  if (j - i >= 2) return 2;
  return i == 1 ? 4 : 3;
}

std::vector<int> alternating(int a, int b, int m) {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) out.push_back(i % 2 == 0 ? a : b);
  return out;
}

}  // namespace

GroupElement phi(const std::vector<int>& q_word, const IntervalCtx& ctx) {
  return from_group_word(to_word(phi_word(q_word, phi_images(ctx))), ctx);
}

std::vector<int> btype_garside_word(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i) {
    for (int m = i; m >= 1; --m) out.push_back(m);
    for (int m = 2; m <= i; ++m) out.push_back(m);
  }
  return out;
}

RelationReport verify_phi(const IntervalCtx& ctx) { return verify_phi(ctx, phi_images(ctx)); }

RelationReport verify_phi(const IntervalCtx& ctx, const std::vector<PositiveWord>& images) {
  RelationReport report;
  int r = ctx.n - 1;
  if (images.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("expected one image per type-B generator");

  for (int m = 1; m <= r; ++m) {
    ++report.checked;
    const PositiveWord& im = images[static_cast<std::size_t>(m) - 1];
    MonomialMatrix mat = eval_word(im, ctx.n);
    if (!in_interval(mat, ctx) || length(mat) != static_cast<long long>(im.size()))
      report.failures.push_back({"image of q_" + std::to_string(m) + " is not a simple"});
  }
  if (!report.ok()) return report;

  auto phi_of = [&](const std::vector<int>& qw) {
    return from_group_word(to_word(phi_word(qw, images)), ctx);
  };

  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      int m = coxeter_b_order(i, j);
      ++report.checked;
      if (!equals(phi_of(alternating(i, j, m)), phi_of(alternating(j, i, m))))
        report.failures.push_back({"braid relation for (q_" + std::to_string(i) + ", q_" +
                                   std::to_string(j) + ") not preserved"});
    }
  }

  if (r >= 2) {
    BGroup bgroup(r);
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        ++report.checked;
        auto w = bgroup.lcm(bgroup.gens[static_cast<std::size_t>(i) - 1],
                            bgroup.gens[static_cast<std::size_t>(j) - 1]);
        if (!w) {
          report.failures.push_back({"coxeter lcm of (q_" + std::to_string(i) + ", q_" +
                                     std::to_string(j) + ") is not well-defined"});
          continue;
        }
        MonomialMatrix a = eval_word(images[static_cast<std::size_t>(i) - 1], ctx.n);
        MonomialMatrix b = eval_word(images[static_cast<std::size_t>(j) - 1], ctx.n);
        MonomialMatrix join = join_left(a, b, ctx);
        GroupElement lhs = from_group_word(to_word(reduced_expression(join)), ctx);
        if (!equals(lhs, phi_of(bgroup.reduced_word(*w))))
          report.failures.push_back({"join of images of (q_" + std::to_string(i) + ", q_" +
                                     std::to_string(j) + ") differs from the image of their lcm"});
      }
    }
  }
  return report;
}

RelationReport verify_k_iso(int n, Exp index_bound) {
  RelationReport report;
  for (Exp source : {Exp{-1}, Exp{1}}) {
    IntervalCtx target(n, -source);
    for (const auto& rel : detail::monoid_relations(n, source, index_bound)) {
      auto negate = [](const PositiveWord& w) {
        PositiveWord out;
        for (Gen g : w) out.push_back(g.kind() == Gen::Kind::T ? Gen::t(-g.index()) : g);
        return out;
      };
      ++report.checked;
      if (!word_problem(to_word(negate(rel.lhs)), to_word(negate(rel.rhs)), target))
        report.failures.push_back({"image of " + rel.name + " fails for k = " +
                                   std::to_string(-source)});
    }
  }
  return report;
}

RelationReport check_t_relations_under(int n, Exp k_source, Exp k_target, Exp index_bound) {
  RelationReport report;
  IntervalCtx target(n, k_target);
  for (Exp i = -index_bound; i <= index_bound; ++i) {
    for (Exp j = i + 1; j <= index_bound; ++j) {
      PositiveWord lhs{Gen::t(i), Gen::t(i - k_source)};
      PositiveWord rhs{Gen::t(j), Gen::t(j - k_source)};
      ++report.checked;
      if (!word_problem(to_word(lhs), to_word(rhs), target))
        report.failures.push_back({to_string(lhs) + " = " + to_string(rhs) + " fails for k = " +
                                   std::to_string(k_target)});
    }
  }
  return report;
}

namespace {

RelationReport project_relations(int n, const std::vector<detail::Relation>& rels,
                                 const std::vector<Gen>& involutions) {
  RelationReport report;
  for (const auto& rel : rels) {
    ++report.checked;
    if (!(eval_word(rel.lhs, n) == eval_word(rel.rhs, n)))
      report.failures.push_back({"projection of " + rel.name + " is not a matrix identity"});
  }
  for (Gen g : involutions) {
    ++report.checked;
    MonomialMatrix m = generator_matrix(g, n);
    if (!(m * m).is_identity())
      report.failures.push_back({"projection of " + to_string(PositiveWord{g, g}) +
                                 " = e is not a matrix identity"});
  }
  return report;
}

}  // namespace

RelationReport verify_cll_projection(int n, Exp k, Exp index_bound) {
  std::vector<Gen> invs;
  for (Exp i = -index_bound; i <= index_bound; ++i) invs.push_back(Gen::t(i));
  for (int j = 3; j <= n; ++j) invs.push_back(Gen::s(j));
  return project_relations(n, detail::monoid_relations(n, k, index_bound), invs);
}

RelationReport verify_shi_projection(int n, Exp index_bound) {
  std::vector<Gen> invs{Gen::t(0), Gen::t(1)};
  for (int j = 3; j <= n; ++j) invs.push_back(Gen::s(j));
  RelationReport report = project_relations(n, detail::shi_relations(n), invs);
  for (Exp i = -index_bound; i <= index_bound; ++i) {
    ++report.checked;
    if (!(eval_word(cll_t_as_shi_word(i), n) == generator_matrix(Gen::t(i), n)))
      report.failures.push_back({"t[" + std::to_string(i) +
                                 "] written over t[0], t[1] projects to the wrong matrix"});
  }
  return report;
}

}  // namespace garside
