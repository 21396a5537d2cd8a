#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "matgeg/cli.hpp"
#include "matgeg/errors.hpp"
#include "matgeg/verify.hpp"

namespace py = pybind11;
using namespace matgeg;

namespace {

// nlohmann json -> Python objects through the json module; the payloads are
// small and this keeps key order.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

Bindings bindings_of(const py::object& p, const py::object& n) {
  Bindings b;
  auto rat = [](const py::object& o) { return parse_rat(py::str(o).cast<std::string>()); };
  if (!p.is_none()) b[Var::p] = rat(p);
  if (!n.is_none()) b[Var::n] = rat(n);
  return b;
}

Presentation presentation_of(const std::string& s) {
  if (s == "printed") return Presentation::kPrinted;
  if (s == "cubic") return Presentation::kCubic;
  throw DomainError("presentation must be 'printed' or 'cubic'");
}

py::list records(const std::vector<CheckRecord>& rs) {
  Report r;
  r.add(rs);
  return to_py(r.to_json(false)["checks"]);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact operator algebra of the 2x2 matrix Gegenbauer weight";
  m.attr("__engine_version__") = kEngineVersion;

  auto math_error = py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", math_error);
  py::register_exception<SizeMismatch>(m, "SizeMismatch", math_error);
  py::register_exception<ParseError>(m, "ParseError", math_error);
  py::register_exception<DomainError>(m, "DomainError", math_error);
  py::register_exception<NonMember>(m, "NonMember", math_error);
  py::register_exception<NotCentral>(m, "NotCentral", math_error);
  py::register_exception<DecompositionFailure>(m, "DecompositionFailure", math_error);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", math_error);

  py::class_<RatFunc>(m, "RatFunc")
      .def(py::init([](const std::string& s) { return RatFunc::parse(s); }), py::arg("text") = "0")
      .def(py::init([](long c) { return RatFunc(c); }))
      .def("evaluate", [](const RatFunc& f, py::object p, py::object n) { return f.evaluate(bindings_of(p, n)); },
           py::arg("p") = py::none(), py::arg("n") = py::none())
      .def("is_zero", &RatFunc::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &RatFunc::to_string)
      .def("__repr__", [](const RatFunc& f) { return "RatFunc('" + f.to_string() + "')"; });

  py::class_<DiffOp>(m, "DiffOp")
      .def_static("from_json", [](const py::object& o) { return diffop_from_json(from_py(o)); })
      .def_static("identity", [] { return DiffOp::identity(2); })
      .def("to_json", [](const DiffOp& d) { return to_py(to_json(d)); })
      .def_property_readonly("order", &DiffOp::order)
      .def("is_zero", &DiffOp::is_zero)
      .def("scaled", [](const DiffOp& d, const RatFunc& c) { return d.scaled(c); })
      .def("evaluate", [](const DiffOp& d, py::object p, py::object n) { return d.evaluate(bindings_of(p, n)); },
           py::arg("p") = py::none(), py::arg("n") = py::none())
      .def("eigenvalue", [](const DiffOp& d) { return to_py(to_json(eigenvalue_map(d))); },
           "Lambda_w(D) as a matrix of polynomials in w")
      .def("tilde", [](const DiffOp& d) { return tilde(d); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &DiffOp::to_string)
      .def("__repr__", [](const DiffOp& d) { return "<DiffOp order " + std::to_string(d.order()) + ">"; });

  m.def("commutator", [](const DiffOp& a, const DiffOp& b) { return commutator(a, b); });

  py::class_<DWAlgebra>(m, "Algebra")
      .def(py::init([](py::object p, py::object n) { return DWAlgebra(bindings_of(p, n)); }), py::arg("p") = py::none(),
           py::arg("n") = py::none())
      .def("generator", [](const DWAlgebra& a, int j) {
        if (j < 1 || j > 4) throw DomainError("generator index must be 1..4");
        return a.generator(j);
      })
      .def_property_readonly("A", &DWAlgebra::A)
      .def_property_readonly("B", &DWAlgebra::B)
      .def_property_readonly("C1", &DWAlgebra::C1)
      .def_property_readonly("C2", &DWAlgebra::C2)
      .def_property_readonly("identity", &DWAlgebra::identity)
      .def("decompose", [](const DWAlgebra& a, const DiffOp& d) { return to_py(to_json(a.decompose(d))); })
      .def("is_member", &DWAlgebra::is_member)
      .def("is_central", &DWAlgebra::is_central)
      .def("center_decompose", [](const DWAlgebra& a, const DiffOp& d) { return to_py(to_json(a.center_decompose(d))); });

  m.def("monic_mop", [](unsigned w) { return to_py(to_json(monic_mop_closed(w).poly)); }, py::arg("w"));
  m.def("gram_entry", [](unsigned i, unsigned j, long n, const std::string& p) {
    return to_py(to_json(gram_entry(i, j, n, parse_rat(p))));
  }, py::arg("i"), py::arg("j"), py::arg("n"), py::arg("p"));

  m.def("normal_form", [](const std::string& word, const std::string& pr) {
    return to_py(to_json(normal_form(parse_word(word), presentation_of(pr))));
  }, py::arg("word"), py::arg("presentation") = "printed");
  m.def("word_product_agrees", [](const std::string& u, const std::string& v, const std::string& pr) {
    const Presentation p = presentation_of(pr);
    Word uv = parse_word(u);
    const Word wv = parse_word(v);
    uv.insert(uv.end(), wv.begin(), wv.end());
    return normal_form(uv, p) == alg_mul(normal_form(parse_word(u), p), normal_form(wv, p), p);
  }, py::arg("u"), py::arg("v"), py::arg("presentation") = "printed",
        "normal_form(uv) == alg_mul(nf u, nf v)");

  m.def("centralizer", [](const std::string& targets, unsigned order, py::object deg) {
    const DWAlgebra& a = symbolic_algebra();
    std::vector<DiffOp> tg{a.C1()};
    if (targets == "c1c2")
      tg.push_back(a.C2());
    else if (targets != "c1")
      throw DomainError("targets must be 'c1' or 'c1c2'");
    const unsigned d = deg.is_none() ? order + 4 : deg.cast<unsigned>();
    SolutionSpace sol;
    {
      py::gil_scoped_release nogil;
      sol = centralizer_truncated(tg, order, d);
    }
    py::dict out;
    out["dimension"] = sol.dimension;
    out["numeric_specialized"] = sol.numeric_specialized;
    out["basis"] = py::cast(sol.basis);
    return out;
  }, py::arg("targets") = "c1", py::arg("order") = 2, py::arg("deg") = py::none());

  m.def("acceptance", [](int k) {
    std::vector<CheckRecord> rs;
    {
      py::gil_scoped_release nogil;
      rs = acceptance_criterion(k);
    }
    return records(rs);
  }, py::arg("criterion"), "check records for one numbered criterion");
  m.def("verify_relations", [] {
    std::vector<CheckRecord> rs = remark_products();
    for (auto& r : ab_relations()) rs.push_back(r);
    for (auto& r : ds_rows()) rs.push_back(r);
    return records(rs);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release nogil;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit code, stdout, stderr) of the command-line front end");
}
