#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starics/distributions.hpp"
#include "starics/export.hpp"
#include "starics/lambda_tree.hpp"
#include "starics/oracle.hpp"
#include "starics/perm_core.hpp"
#include "starics/threading.hpp"

namespace py = pybind11;
using namespace starics;

namespace {

// Big counts cross into Python as int through their decimal form.
py::int_ to_py(const BigInt& v) {
  const auto text = to_decimal(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::object json_to_py(const ordered_json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "1-ics trees and weight distributions of the star graph";

  py::register_exception<oracle::ResourceGuardError>(m, "ResourceGuardError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("identity", &Permutation::identity)
      .def_static("parse", [](const std::string& s) { return parse_permutation(s); })
      .def("__len__", &Permutation::size)
      .def("entries", [](const Permutation& p) { return std::vector<int>(p.entries().begin(), p.entries().end()); })
      .def("star", &apply_star_generator, py::arg("i"))
      .def("weight", &weight)
      .def("ics", [](const Permutation& p) {
        const auto k = ics_key(p);
        return py::make_tuple(k.c1, k.others);
      })
      .def("cycles", [](const Permutation& p) { return format_cycles(cycle_structure(p)); })
      .def("index_string", [](const Permutation& p) { return string_of_perm(p).str(); })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return oracle::rank(p); })
      .def("__str__", [](const Permutation& p) { return format_permutation(p); })
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + format_permutation(p) + "')"; });

  m.def("diameter", &diameter);
  m.def("vertex_distribution", [](int n, const std::string& method) {
    return to_py(vertex_weight_distribution(n, method == "cycle-counts" ? Method::cycle_counts : Method::enumerate).counts());
  }, py::arg("n"), py::arg("method") = "enumerate");
  m.def("class_distribution", [](int n) { return to_py(class_weight_distribution(n).counts()); });
  m.def("eset_distribution", [](int n, int i) { return to_py(eset_distribution(n, i).counts); });
  m.def("antipode_count", [](int n) { return to_py(antipode_count(n)); });
  m.def("class_size", [](const std::string& s, int n) { return to_py(class_size(parse_index_string(s), n)); });
  m.def("is_admissible", [](const std::string& s, int n) { return is_admissible(parse_index_string(s), n); });

  m.def("tree", [](int n, bool pruned) { return json_to_py(tree_to_json(pruned ? generate_pruned(n) : generate_unpruned(n))); },
        py::arg("n"), py::arg("pruned") = true);
  m.def("tree_dot", [](int n) { return tree_to_dot(generate_pruned(n)); });
  m.def("gamma", [](int n) { return json_to_py(gamma_to_json(build_gamma(n))); });
  m.def("gamma_dot", [](int n) { return gamma_to_dot(build_gamma(n)); });
  m.def("ledger", [](int n) { return format_ledger(prune(generate_unpruned(n)).ledger); });
  m.def("table", [](int n) { return format_table(table_T(n)); });
  m.def("table_column", [](int n, int omega) {
    std::vector<std::string> out;
    for (const auto& id : table_T(n).column(omega)) out.push_back(id.str());
    return out;
  });

  m.def("bfs_histogram", [](int n) { return oracle::bfs(n).histogram; });
  m.def("verify_quotient", [](int n) {
    const auto report = oracle::verify_quotient(n, build_gamma(n));
    return py::module_::import("json").attr("loads")(report.to_json().dump());
  });
}
