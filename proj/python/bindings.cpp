#include "nilcoh/automorphisms.hpp"
#include "nilcoh/extensions.hpp"
#include "nilcoh/json_io.hpp"
#include "nilcoh/simplicity.hpp"
#include "nilcoh/sweeps.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace nilcoh;

namespace {

// arbitrary-precision integers travel as decimal strings between C++ and
// Python; the wrapper package converts them to Python ints
std::vector<Int> ints_from_strings(const std::vector<std::string>& in) {
  std::vector<Int> out;
  out.reserve(in.size());
  for (const auto& s : in)
    out.push_back(parse_int(s));
  return out;
}

std::vector<std::string> strings_from_ints(const std::vector<Int>& in) {
  std::vector<std::string> out;
  out.reserve(in.size());
  for (const auto& v : in)
    out.push_back(v.str());
  return out;
}

GroupElement element_from_strings(int n, const std::vector<std::string>& coords) {
  return GroupElement(n, ints_from_strings(coords));
}

IntegerMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw InputError("matrix rows must have equal length");
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = parse_int(rows[i][j]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_nilcoh, m) {
  m.doc() = "exact multiplier computations for free nilpotent groups of class 2";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init(&element_from_strings), py::arg("n"), py::arg("coords"))
      .def_property_readonly("n", &GroupElement::rank)
      .def_property_readonly(
          "coords", [](const GroupElement& r) { return strings_from_ints(r.coords()); })
      .def("is_central", &GroupElement::is_central)
      .def("is_identity", &GroupElement::is_identity)
      .def("__mul__", &multiply)
      .def("inverse", [](const GroupElement& r) { return inverse(r); })
      .def("commutator", &commutator)
      .def("conjugate_by",
           [](const GroupElement& r, const GroupElement& s) { return conjugate(s, r); })
      .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; })
      .def("__repr__", [](const GroupElement& r) { return "GroupElement" + r.str(); });

  m.def("identity", &GroupElement::identity, py::arg("n"));
  m.def("u", &u_gen, py::arg("n"), py::arg("i"));
  m.def("v", &v_gen, py::arg("n"), py::arg("j"), py::arg("k"));

  py::class_<CircleExponent>(m, "CircleExponent")
      .def("__str__", &CircleExponent::str)
      .def("__repr__", [](const CircleExponent& x) { return "CircleExponent(" + x.str() + ")"; })
      .def("is_integral", &CircleExponent::is_integral)
      .def("__eq__",
           [](const CircleExponent& a, const CircleExponent& b) { return a == b; })
      .def("to_json", [](const CircleExponent& x) { return exponent_to_json(x).dump(); });

  py::class_<CocycleParams>(m, "CocycleParams")
      .def_property_readonly("n", &CocycleParams::rank)
      .def("to_json", [](const CocycleParams& p) { return params_to_json(p).dump(); })
      .def("__eq__",
           [](const CocycleParams& a, const CocycleParams& b) { return a == b; });

  m.def("cohomology_dim", &free_param_count, py::arg("n"));
  m.def("params_from_json", [](const std::string& text) {
    return params_from_json(parse_json_text(text, "parameters"));
  });
  m.def("sigma", &sigma_eval, py::arg("params"), py::arg("r"), py::arg("s"));
  m.def("pairing", &pairing, py::arg("params"), py::arg("r"), py::arg("s"));
  m.def("cocycle_identity_holds", &cocycle_identity_holds);
  m.def("omega", [](int n, const GroupElement& r, const GroupElement& s) {
    return strings_from_ints(omega(n, r, s));
  });

  m.def("simplicity_json", [](const CocycleParams& p) {
    return certificate_to_json(is_simple(p)).dump();
  });
  m.def("regular_central_subgroup", [](const CocycleParams& p) {
    RegularCentralSubgroup sub = regular_central_subgroup(p);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : sub.lattice.rows())
      rows.push_back(strings_from_ints(row));
    return rows;
  });
  m.def("verify_witness", [](const CocycleParams& p, const GroupElement& s) {
    return verify_witness(p, s);
  });

  m.def("act_on_params",
        [](const std::vector<std::vector<std::string>>& a, const CocycleParams& p) {
          return act_on_params(matrix_from_strings(a), p);
        });
  m.def("pullback", [](const std::vector<std::vector<std::string>>& a,
                       const std::vector<std::vector<std::string>>& s,
                       const CocycleParams& p) {
    return pullback(Automorphism(matrix_from_strings(a), matrix_from_strings(s)), p);
  });

  m.def("verify_k2_json", [] { return report_to_json(verify_k2_is_g32()).dump(); });
  m.def("run_suite_json", [](const CocycleParams& p, const std::string& suite,
                             std::uint64_t seed, long long trials, long long bound) {
    SweepConfig config{seed, trials, bound};
    Report report;
    if (suite == "cocycle")
      report = cocycle_suite(p, config);
    else if (suite == "relations")
      report = relations_suite(p, config);
    else if (suite == "kgroup")
      report = kgroup_suite(p, config);
    else
      throw InputError("unknown suite '" + suite + "'");
    return report_to_json(report).dump();
  },
        py::arg("params"), py::arg("suite"), py::arg("seed") = 0,
        py::arg("trials") = 200, py::arg("bound") = 5);
}
