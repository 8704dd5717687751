#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "saito/errors.hpp"
#include "saito/euler.hpp"
#include "saito/fixture.hpp"
#include "saito/report.hpp"

namespace py = pybind11;
using namespace saito;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object to_python(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_python(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_string(v));
}

PermGroup make_group(int n, const std::vector<std::string>& gens) { return parse_perm_group(n, gens); }

IndexSet to_index_set(const std::vector<int>& one_based, int n) {
  IndexSet out;
  for (int i : one_based) {
    if (i < 1 || i > n) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    out.push_back(i - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

py::object element_terms(const BurnsideElement& x) { return to_python(to_json(x)); }

}  // namespace

PYBIND11_MODULE(_saito, m) {
  m.doc() = "Equivariant Euler characteristics of invertible polynomials and their Saito duality";

  static py::exception<Error> error(m, "SaitoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<InvertiblePolynomial>(m, "Polynomial")
      .def(py::init(&InvertiblePolynomial::parse), py::arg("text"))
      .def_property_readonly("n", &InvertiblePolynomial::n)
      .def_property_readonly("exponents",
                             [](const InvertiblePolynomial& f) {
                               std::vector<std::vector<std::int64_t>> rows;
                               for (std::size_t i = 0; i < f.exponents().rows(); ++i)
                                 rows.push_back(f.exponents().row(i));
                               return rows;
                             })
      .def_property_readonly("blocks", [](const InvertiblePolynomial& f) { return to_python(to_json(f.blocks())); })
      .def("transposed", &InvertiblePolynomial::transposed)
      .def("weights",
           [](const InvertiblePolynomial& f) {
             py::list out;
             for (const auto& q : f.weights()) out.append(to_python(q));
             return out;
           })
      .def("group_order",
           [](const InvertiblePolynomial& f) { return DiagonalGroup::create(f.exponents())->order(); })
      .def("__str__", &InvertiblePolynomial::to_string)
      .def("__repr__", [](const InvertiblePolynomial& f) { return "Polynomial('" + f.to_string() + "')"; })
      .def("__eq__", &InvertiblePolynomial::operator==);

  m.def(
      "pc_check",
      [](int n, const std::vector<std::string>& gens) {
        const PcResult r = pc_check(make_group(n, gens));
        return to_python(to_json(r));
      },
      py::arg("n"), py::arg("generators"), "Parity condition for the group generated on n points.");

  m.def(
      "group_order", [](int n, const std::vector<std::string>& gens) { return make_group(n, gens).order(); },
      py::arg("n"), py::arg("generators"));

  m.def(
      "check_invariance",
      [](const InvertiblePolynomial& f, const std::vector<std::string>& gens) {
        return to_python(to_json(check_S_invariance(f, make_group(f.n(), gens))));
      },
      py::arg("f"), py::arg("generators"));

  m.def(
      "stratum_chi",
      [](const InvertiblePolynomial& f, const std::vector<int>& set, const std::vector<std::string>& gens) {
        return to_python(stratum_chi_fixed(f.matrix(), to_index_set(set, f.n()), make_group(f.n(), gens)));
      },
      py::arg("f"), py::arg("variables"), py::arg("generators") = std::vector<std::string>{},
      "Euler characteristic of the T-fixed part of the Milnor fibre in the torus of the given variables "
      "(1-based).");

  m.def(
      "equivariant_euler",
      [](const InvertiblePolynomial& f, const std::vector<std::string>& gens, bool reduced) {
        const PermGroup s = make_group(f.n(), gens);
        return element_terms(reduced ? reduced_equivariant_euler(f, s) : equivariant_euler(f, s));
      },
      py::arg("f"), py::arg("generators") = std::vector<std::string>{}, py::arg("reduced") = false,
      "Terms of the equivariant Euler characteristic as dictionaries.");

  m.def(
      "verify_duality",
      [](const InvertiblePolynomial& f, const std::vector<std::string>& gens) {
        return to_python(to_json(verify_duality(f, make_group(f.n(), gens))));
      },
      py::arg("f"), py::arg("generators") = std::vector<std::string>{});

  m.def(
      "annihilator_order",
      [](const InvertiblePolynomial& f, const std::vector<std::string>& gens) {
        const auto g = DiagonalGroup::create(f.exponents());
        std::vector<DiagonalElement> els;
        for (const auto& x : gens) els.push_back(g->parse_element(x));
        const auto dual = DiagonalGroup::create(f.transposed().exponents());
        return annihilator(subgroup_generated(g, els), dual).order();
      },
      py::arg("f"), py::arg("generators"), "Order of the dual subgroup of the group generated by the elements.");

  m.def(
      "load_fixture",
      [](const std::string& path) {
        const LoadedFixture fx = resolve_fixture(load_fixture(path));
        py::dict out;
        out["name"] = fx.spec.name;
        out["polynomial"] = fx.f;
        out["S"] = fx.s.to_string();
        out["generators"] = fx.spec.s;
        out["G_order"] = fx.g.order();
        if (fx.spec.expect_pc) out["expect_pc"] = *fx.spec.expect_pc;
        if (fx.spec.expect_duality) out["expect_duality"] = *fx.spec.expect_duality;
        return out;
      },
      py::arg("path"));
}
