#include <algorithm>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "garside/artin_maps.hpp"
#include "json.hpp"

using namespace garside;
using nlohmann::json;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool as_json = false;

  void value(const json& v) const {
    if (as_json)
      std::cout << json{{"ok", true}, {"result", v}}.dump() << "\n";
    else if (v.is_string())
      std::cout << v.get<std::string>() << "\n";
    else
      std::cout << v.dump() << "\n";
  }
  void error(const std::string& message) const {
    if (as_json)
      std::cout << json{{"ok", false}, {"error", message}}.dump() << "\n";
    else
      std::cerr << "error: " << message << "\n";
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operand is either a JSON matrix or a word over the generators; words
// need an explicit dimension.
MonomialMatrix matrix_operand(const std::string& text, int n) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    MonomialMatrix m = matrix_from_json(text);
    if (n != 0 && m.dim() != n) throw UsageError("operand dimension disagrees with --n");
    return m;
  }
  if (n == 0) throw UsageError("--n is required for word operands");
  return eval_word(parse_word(text), n);
}

Word word_operand(const std::string& text, int n) {
  if (n == 0) throw UsageError("--n is required");
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{')
    throw UsageError("this command takes a word, not a matrix");
  Word w = parse_word(text);
  for (const Letter& l : w)
    if (l.gen.kind() == Gen::Kind::S && l.gen.index() > n)
      throw UsageError("generator " + to_string(l.gen) + " needs n >= " +
                       std::to_string(l.gen.index()));
  return w;
}

MonomialMatrix interval_operand(const std::string& text, const IntervalCtx& ctx) {
  MonomialMatrix m = matrix_operand(text, ctx.n);
  if (!in_interval(m, ctx)) throw UsageError("operand is not a divisor of delta: " + text);
  return m;
}

std::string nf_text(const GroupElement& g) {
  std::string out = "delta^" + std::to_string(g.delta_exp);
  for (const Simple& f : g.positive.factors)
    out += " | " + to_string(reduced_expression(f.matrix()));
  return out;
}

json nf_json(const GroupElement& g) {
  json factors = json::array();
  for (const Simple& f : g.positive.factors)
    factors.push_back(to_string(reduced_expression(f.matrix())));
  return json{{"delta", g.delta_exp}, {"factors", factors}};
}

// Runs fn once per operand; "-" switches to one operand per stdin line.
// The exit code is the worst one seen.
int for_each_operand(const std::string& operand, const Output& out,
                     const std::function<int(const std::string&)>& fn) {
  auto guarded = [&](const std::string& item) {
    try {
      return fn(item);
    } catch (const WordParseError& e) {
      out.error(e.what());
      return kExitUsage;
    } catch (const json::exception& e) {
      out.error(std::string("bad matrix JSON: ") + e.what());
      return kExitUsage;
    } catch (const std::exception& e) {
      out.error(e.what());
      return kExitUsage;
    }
  };
  if (operand != "-") return guarded(operand);
  int rc = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rc = std::max(rc, guarded(line));
  }
  return rc;
}

// Divisor diagram of [1, delta] with the infinite t-descent class collapsed
// to a single edge labeled t[*] toward the canonical child v * t(k).
std::string dot_diagram(const IntervalCtx& ctx) {
  struct Edge {
    int from, to;
    std::string label;
  };
  std::map<std::pair<std::vector<int>, std::vector<Exp>>, int> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::deque<MonomialMatrix> queue;

  auto id_of = [&](const MonomialMatrix& m) {
    auto [it, fresh] = ids.try_emplace({m.perm(), m.exps()}, static_cast<int>(labels.size()));
    if (fresh) {
      labels.push_back(to_string(reduced_expression(m)));
      queue.push_back(m);
    }
    return it->second;
  };

  id_of(MonomialMatrix::identity(ctx.n));
  while (!queue.empty()) {
    MonomialMatrix v = queue.front();
    queue.pop_front();
    int from = id_of(v);
    MonomialMatrix rest = v.inverse() * ctx.delta;
    DescentSet ds = left_descents(rest);
    if (ds.t_kind == DescentSet::TKind::one)
      edges.push_back({from, id_of(v * generator_matrix(Gen::t(ds.t_index), ctx.n)),
                       to_string(Gen::t(ds.t_index))});
    else if (ds.t_kind == DescentSet::TKind::all)
      edges.push_back({from, id_of(v * generator_matrix(Gen::t(ctx.k), ctx.n)), "t[*]"});
    for (int j : ds.s_part)
      edges.push_back({from, id_of(v * generator_matrix(Gen::s(j), ctx.n)), to_string(Gen::s(j))});
  }

  std::string out = "digraph interval {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
  for (const Edge& e : edges)
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           e.label + "\"];\n";
  out += "}\n";
  return out;
}

int run_verify(const std::string& suite, int n, Exp k, Exp bound, const Output& out) {
  RelationReport report;
  if (suite == "monoid") {
    report = verify_monoid_relations(IntervalCtx(n, k), bound);
  } else if (suite == "cll") {
    report = verify_cll_projection(n, k, bound);
  } else if (suite == "shi") {
    report = verify_shi_projection(n, bound);
  } else if (suite == "phi") {
    report = verify_phi(IntervalCtx(n, k));
  } else if (suite == "k-iso") {
    report = verify_k_iso(n, bound);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (out.as_json) {
    json failures = json::array();
    for (const auto& f : report.failures) failures.push_back(f.relation);
    out.value(json{{"suite", suite},
                   {"passed", report.ok()},
                   {"checked", report.checked},
                   {"failures", failures}});
  } else {
    if (report.ok()) {
      std::cout << suite << ": ok (checked " << report.checked << ")\n";
    } else {
      std::cout << suite << ": FAILED (" << report.failures.size() << " of " << report.checked
                << ")\n";
      for (const auto& f : report.failures) std::cout << "  " << f.relation << "\n";
    }
  }
  return report.ok() ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the interval Garside structures of type ~A"};
  app.require_subcommand(1);

  int n = 0;
  Exp k = 1;
  Exp bound = 3;
  bool as_json = false;
  std::string operand, operand2, suite;
  std::vector<std::string> wp_args;
  std::string side = "left";

  auto add_common = [&](CLI::App* sub, bool needs_k) {
    sub->add_flag("--json", as_json, "emit a JSON envelope {\"ok\":…, \"result\":…}");
    sub->add_option("--n", n, "matrix dimension (required for word operands)");
    if (needs_k) sub->add_option("--k", k, "interval parameter (default 1)");
    return sub;
  };

  CLI::App* eval = add_common(app.add_subcommand("eval", "evaluate a word to a matrix"), false);
  eval->add_option("operand", operand, "word, JSON matrix, or - for stdin lines")->required();

  CLI::App* len = add_common(app.add_subcommand("length", "geodesic length"), false);
  len->add_option("operand", operand, "word, JSON matrix, or -")->required();

  CLI::App* reduce = add_common(app.add_subcommand("reduce", "geodesic normal form"), false);
  reduce->add_option("operand", operand, "word, JSON matrix, or -")->required();

  CLI::App* member =
      add_common(app.add_subcommand("member", "test membership in [1, delta]"), true);
  member->add_option("operand", operand, "word, JSON matrix, or -")->required();

  CLI::App* meet = add_common(app.add_subcommand("meet", "lattice meet of two simples"), true);
  meet->add_option("--side", side, "left or right (default left)");
  meet->add_option("a", operand, "first simple")->required();
  meet->add_option("b", operand2, "second simple")->required();

  CLI::App* join = add_common(app.add_subcommand("join", "lattice join of two simples"), true);
  join->add_option("--side", side, "left or right (default left)");
  join->add_option("a", operand, "first simple")->required();
  join->add_option("b", operand2, "second simple")->required();

  CLI::App* nf = add_common(app.add_subcommand("nf", "Garside normal form of a group word"), true);
  nf->add_option("operand", operand, "word over the generators, or -")->required();

  CLI::App* wp = add_common(app.add_subcommand("wp", "decide equality of two group words"), true);
  wp->add_option("words", wp_args, "w1 == w2 (the == may be omitted)")
      ->expected(2, 3)
      ->required();

  CLI::App* verify = add_common(app.add_subcommand("verify", "run a verification suite"), true);
  verify->add_option("--suite", suite, "monoid | cll | shi | phi | k-iso")->required();
  verify->add_option("--bound", bound, "t-index bound (default 3)");

  CLI::App* dot =
      add_common(app.add_subcommand("dot", "divisor diagram of [1, delta] in DOT"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Output out{as_json};
  try {
    if (eval->parsed()) {
      return for_each_operand(operand, out, [&](const std::string& item) {
        out.value(json::parse(to_json(matrix_operand(item, n))));
        return 0;
      });
    }
    if (len->parsed()) {
      return for_each_operand(operand, out, [&](const std::string& item) {
        out.value(length(matrix_operand(item, n)));
        return 0;
      });
    }
    if (reduce->parsed()) {
      return for_each_operand(operand, out, [&](const std::string& item) {
        out.value(to_string(reduced_expression(matrix_operand(item, n))));
        return 0;
      });
    }
    if (member->parsed()) {
      return for_each_operand(operand, out, [&](const std::string& item) {
        MonomialMatrix m = matrix_operand(item, n);
        IntervalCtx ctx(m.dim(), k);
        bool in = in_interval(m, ctx);
        out.value(in);
        return in ? 0 : kExitFalse;
      });
    }
    if (meet->parsed() || join->parsed()) {
      if (side != "left" && side != "right") throw UsageError("--side must be left or right");
      if (n == 0) {
        std::size_t first = operand.find_first_not_of(" \t");
        if (first != std::string::npos && operand[first] == '{')
          n = matrix_from_json(operand).dim();
      }
      if (n == 0) throw UsageError("--n is required for word operands");
      IntervalCtx ctx(n, k);
      MonomialMatrix a = interval_operand(operand, ctx);
      MonomialMatrix b = interval_operand(operand2, ctx);
      MonomialMatrix r = meet->parsed()
                             ? (side == "left" ? meet_left(a, b, ctx) : meet_right(a, b, ctx))
                             : (side == "left" ? join_left(a, b, ctx) : join_right(a, b, ctx));
      out.value(to_string(reduced_expression(r)));
      return 0;
    }
    if (nf->parsed()) {
      if (n == 0) throw UsageError("--n is required");
      IntervalCtx ctx(n, k);
      return for_each_operand(operand, out, [&](const std::string& item) {
        GroupElement g = from_group_word(word_operand(item, n), ctx);
        out.value(out.as_json ? nf_json(g) : json(nf_text(g)));
        return 0;
      });
    }
    if (wp->parsed()) {
      if (wp_args.size() == 3 && wp_args[1] != "==")
        throw UsageError("expected: wp <w1> == <w2>");
      const std::string& lhs = wp_args.front();
      const std::string& rhs = wp_args.back();
      if (n == 0) throw UsageError("--n is required");
      IntervalCtx ctx(n, k);
      bool equal = word_problem(word_operand(lhs, n), word_operand(rhs, n), ctx);
      out.value(equal);
      return equal ? 0 : kExitFalse;
    }
    if (verify->parsed()) {
      if (n == 0) throw UsageError("--n is required");
      return run_verify(suite, n, k, bound, out);
    }
    if (dot->parsed()) {
      if (n == 0) throw UsageError("--n is required");
      std::cout << dot_diagram(IntervalCtx(n, k));
      return 0;
    }
  } catch (const WordParseError& e) {
    out.error(e.what());
    return kExitUsage;
  } catch (const json::exception& e) {
    out.error(std::string("bad matrix JSON: ") + e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    out.error(e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
