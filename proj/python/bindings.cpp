#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "garside/artin_maps.hpp"

namespace py = pybind11;
using namespace garside;

namespace {

IntervalCtx make_ctx(int n, Exp k) { return IntervalCtx(n, k); }

MonomialMatrix pick(const MonomialMatrix& a, const MonomialMatrix& b, const IntervalCtx& ctx,
                    const std::string& side, bool is_meet) {
  if (side != "left" && side != "right") throw std::invalid_argument("side must be left or right");
  if (!in_interval(a, ctx) || !in_interval(b, ctx))
    throw std::invalid_argument("operands must divide delta");
  if (is_meet) return side == "left" ? meet_left(a, b, ctx) : meet_right(a, b, ctx);
  return side == "left" ? join_left(a, b, ctx) : join_right(a, b, ctx);
}

py::dict report_dict(const RelationReport& r) {
  py::list failures;
  for (const auto& f : r.failures) failures.append(f.relation);
  py::dict out;
  out["passed"] = r.ok();
  out["checked"] = r.checked;
  out["failures"] = failures;
  return out;
}

}  // namespace

PYBIND11_MODULE(pygarside, m) {
  m.doc() = "exact interval Garside computations over monomial matrices";

  py::class_<MonomialMatrix>(m, "Matrix")
      .def(py::init([](int n, std::vector<int> perm, std::vector<Exp> exps) {
             return MonomialMatrix(n, std::move(perm), std::move(exps));
           }),
           py::arg("n"), py::arg("perm"), py::arg("exps"))
      .def_property_readonly("n", &MonomialMatrix::dim)
      .def_property_readonly("perm", &MonomialMatrix::perm)
      .def_property_readonly("exps", &MonomialMatrix::exps)
      .def("__mul__", [](const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; })
      .def("inverse", &MonomialMatrix::inverse)
      .def("is_identity", &MonomialMatrix::is_identity)
      .def("is_diagonal", &MonomialMatrix::is_diagonal)
      .def("__eq__", [](const MonomialMatrix& a, const MonomialMatrix& b) { return a == b; })
      .def("__repr__", [](const MonomialMatrix& m_) { return to_json(m_); })
      .def("to_json", [](const MonomialMatrix& m_) { return to_json(m_); })
      .def_static("from_json", [](const std::string& s) { return matrix_from_json(s); })
      .def_static("identity", &MonomialMatrix::identity, py::arg("n"));

  m.def("eval_word", [](const std::string& w, int n) { return eval_word(parse_word(w), n); },
        py::arg("word"), py::arg("n"), "evaluate a word to its matrix");
  m.def("reduce", [](const MonomialMatrix& m_) { return to_string(reduced_expression(m_)); },
        py::arg("m"), "geodesic word of a matrix");
  m.def("length", [](const MonomialMatrix& m_) { return length(m_); }, py::arg("m"));
  m.def("lambda_power", &lambda_power, py::arg("n"), py::arg("k"));
  m.def("is_max_length", &is_max_length, py::arg("m"));
  m.def("left_divides", &left_divides, py::arg("v"), py::arg("w"));
  m.def("right_divides", &right_divides, py::arg("v"), py::arg("w"));

  m.def("member",
        [](const MonomialMatrix& m_, Exp k) { return in_interval(m_, make_ctx(m_.dim(), k)); },
        py::arg("m"), py::arg("k") = 1, "does m divide delta = lambda^k");
  m.def("meet",
        [](const MonomialMatrix& a, const MonomialMatrix& b, Exp k, const std::string& side) {
          return pick(a, b, make_ctx(a.dim(), k), side, true);
        },
        py::arg("a"), py::arg("b"), py::arg("k") = 1, py::arg("side") = "left");
  m.def("join",
        [](const MonomialMatrix& a, const MonomialMatrix& b, Exp k, const std::string& side) {
          return pick(a, b, make_ctx(a.dim(), k), side, false);
        },
        py::arg("a"), py::arg("b"), py::arg("k") = 1, py::arg("side") = "left");

  m.def("nf",
        [](const std::string& word, int n, Exp k) {
          IntervalCtx ctx(n, k);
          GroupElement g = from_group_word(parse_word(word), ctx);
          py::list factors;
          for (const Simple& f : g.positive.factors)
            factors.append(to_string(reduced_expression(f.matrix())));
          return py::make_tuple(g.delta_exp, factors);
        },
        py::arg("word"), py::arg("n"), py::arg("k") = 1,
        "Garside normal form (delta exponent, factor words)");
  m.def("word_problem",
        [](const std::string& w1, const std::string& w2, int n, Exp k) {
          IntervalCtx ctx(n, k);
          return word_problem(parse_word(w1), parse_word(w2), ctx);
        },
        py::arg("w1"), py::arg("w2"), py::arg("n"), py::arg("k") = 1);

  m.def("verify",
        [](const std::string& suite, int n, Exp k, Exp bound) {
          if (suite == "monoid") return report_dict(verify_monoid_relations(make_ctx(n, k), bound));
          if (suite == "cll") return report_dict(verify_cll_projection(n, k, bound));
          if (suite == "shi") return report_dict(verify_shi_projection(n, bound));
          if (suite == "phi") return report_dict(verify_phi(make_ctx(n, k)));
          if (suite == "k-iso") return report_dict(verify_k_iso(n, bound));
          throw std::invalid_argument("unknown suite '" + suite + "'");
        },
        py::arg("suite"), py::arg("n"), py::arg("k") = 1, py::arg("bound") = 3,
        "run one of the verification suites: monoid | cll | shi | phi | k-iso");
}
