#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

#include "cdg/export.hpp"
#include "cdg/group_file.hpp"
#include "cdg/verify.hpp"

namespace py = pybind11;
using namespace cdg;

namespace {

FiniteGroup resolve(const std::string& spec) {
  if (auto entry = entry_from_name(spec)) return build(*entry);
  if (!std::filesystem::exists(spec)) throw Error("no catalog group or file named '" + spec + "'");
  return load_group_file(spec);
}

GroupAnalysis analyze_spec(const std::string& spec) {
  if (auto entry = entry_from_name(spec)) return analyze_group(entry->name, build(*entry));
  if (!std::filesystem::exists(spec)) throw Error("no catalog group or file named '" + spec + "'");
  return analyze_group(std::filesystem::path(spec).stem().string(), load_group_file(spec));
}

GroupAnalysis analyze_generators(std::uint32_t degree, const std::vector<std::string>& cycles) {
  std::string text = "perm " + std::to_string(degree) + "\n";
  for (const auto& c : cycles) text += c + "\n";
  return analyze_group("custom", parse_group_file(text));
}

py::dict verify_dict(const std::vector<std::string>& suites, std::uint32_t max_order,
                     std::uint32_t cyclic_limit) {
  VerifyOptions options;
  options.max_order = max_order;
  options.cyclic_limit = cyclic_limit;
  VerifyReport report = run_verify(suites, options);

  py::list results;
  for (const auto& r : report.results) {
    py::dict d;
    d["check"] = r.check;
    d["group"] = r.group;
    d["verdict"] = r.verdict == CheckResult::Verdict::pass      ? "pass"
                   : r.verdict == CheckResult::Verdict::fail    ? "fail"
                                                                : "skipped";
    d["witness"] = r.witness.is_null() ? std::string("{}") : r.witness.dump();
    results.append(std::move(d));
  }
  py::dict out;
  out["all_passed"] = report.all_passed();
  out["corpus_size"] = report.corpus_size;
  out["results"] = std::move(results);
  out["jsonl"] = report_to_jsonl(report);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character codegrees and codegree graphs of small finite groups";

  py::register_exception<Error>(m, "CdgError");

  py::class_<GroupAnalysis>(m, "Analysis")
      .def_readonly("name", &GroupAnalysis::name)
      .def_property_readonly("order", [](const GroupAnalysis& a) { return a.group.order(); })
      .def_property_readonly("exponent", [](const GroupAnalysis& a) { return a.group.exponent(); })
      .def_property_readonly("class_sizes", [](const GroupAnalysis& a) { return a.cc.sizes; })
      .def_property_readonly("degrees", [](const GroupAnalysis& a) { return a.table.degrees; })
      .def_property_readonly("codegrees",
                             [](const GroupAnalysis& a) {
                               return nonprincipal_codegree_multiset(a.records);
                             })
      .def_property_readonly("gamma_edges", [](const GroupAnalysis& a) { return a.gamma.edges; })
      .def_property_readonly("gamma_vertex_codegrees",
                             [](const GroupAnalysis& a) { return a.gamma.vertex_codegrees; })
      .def_property_readonly("delta_primes", [](const GroupAnalysis& a) { return a.delta.primes; })
      .def_property_readonly("delta_edges", [](const GroupAnalysis& a) { return a.delta.edges; })
      .def_property_readonly("gamma_components",
                             [](const GroupAnalysis& a) { return a.gamma_stats.component_count; })
      .def_property_readonly("delta_components",
                             [](const GroupAnalysis& a) { return a.delta_stats.component_count; })
      .def_property_readonly("has_triangle",
                             [](const GroupAnalysis& a) { return a.gamma_stats.has_triangle; })
      .def_property_readonly("is_complete",
                             [](const GroupAnalysis& a) { return a.gamma_stats.is_complete; })
      .def_property_readonly("is_abelian",
                             [](const GroupAnalysis& a) { return a.predicates.is_abelian; })
      .def_property_readonly("is_simple",
                             [](const GroupAnalysis& a) { return a.predicates.is_simple; })
      .def_property_readonly("is_nilpotent",
                             [](const GroupAnalysis& a) { return a.predicates.is_nilpotent; })
      .def_property_readonly("is_solvable",
                             [](const GroupAnalysis& a) { return a.predicates.is_solvable; })
      .def_property_readonly("frobenius",
                             [](const GroupAnalysis& a) -> py::object {
                               if (!a.frobenius) return py::none();
                               return py::make_tuple(a.frobenius->kernel.order(),
                                                     a.frobenius->complement.order());
                             })
      .def_property_readonly("two_frobenius",
                             [](const GroupAnalysis& a) -> py::object {
                               if (!a.two_frobenius) return py::none();
                               return py::make_tuple(a.two_frobenius->k.order(),
                                                     a.two_frobenius->l.order());
                             })
      .def("gamma_dot", [](const GroupAnalysis& a) { return gamma_to_dot(a.gamma, a.name); })
      .def("delta_dot", [](const GroupAnalysis& a) { return delta_to_dot(a.delta, a.name); })
      .def("table_json",
           [](const GroupAnalysis& a) { return table_to_json(a.table, a.name).dump(2); })
      .def("is_isomorphic_to", [](const GroupAnalysis& a, const GroupAnalysis& b) {
        return is_isomorphic(a.group, b.group);
      });

  m.def("analyze", &analyze_spec, py::arg("group"),
        "Analyze a catalog group name or a group file path");
  m.def("analyze_generators", &analyze_generators, py::arg("degree"), py::arg("cycles"),
        "Analyze the closure of cycle-notation generators, e.g. ['(1 2 3)', '(1 2)']");
  m.def(
      "catalog",
      [](std::uint32_t max_order) {
        py::list out;
        for (const auto& e : verify_corpus(max_order))
          out.append(py::make_tuple(e.name, e.order));
        return out;
      },
      py::arg("max_order") = 60);
  m.def("verify", &verify_dict, py::arg("suites") = std::vector<std::string>{"all"},
        py::arg("max_order") = 60, py::arg("cyclic_limit") = 500);
  m.def("dixon_prime", &dixon_prime, py::arg("order"), py::arg("exponent"));
  m.def("diophantine_solutions", &check_step7_diophantine, py::arg("max_n") = 20);
  m.def("group_order", [](const std::string& spec) { return resolve(spec).order(); });
}
