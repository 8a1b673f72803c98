#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mobius/io.hpp"
#include "mobius/named_automorphisms.hpp"
#include "mobius/realizability.hpp"
#include "mobius/verify.hpp"

namespace py = pybind11;
using namespace mobius;

namespace {

Graph graph_from_spec(const std::string& spec) {
  if (auto builtin = builtin_graph(spec)) return builtin->graph;
  return parse_graph_text(spec);
}

py::dict realizable_dict(const RealizableGroup& g) {
  py::dict d;
  d["name"] = g.name.to_string();
  d["display"] = g.name.display();
  d["order"] = g.order;
  d["witness"] = g.witness ? py::cast(g.witness->name) : py::none();
  d["provenance"] = g.provenance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation groups, graph automorphisms and decoration "
            "stabilizers for Moebius ladders";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ClosureError>(m, "ClosureError", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::size_t>(), py::arg("degree"))
      .def_static("from_images", &Permutation::from_images, py::arg("images"))
      .def_static("from_cycles", &perm_from_cycles, py::arg("cycles"),
                  py::arg("degree"))
      .def_static("parse", &parse_cycles, py::arg("text"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &Permutation::images)
      .def("__call__", &Permutation::operator(), py::arg("point"))
      .def("order", &Permutation::order)
      .def("cycle_type", &Permutation::cycle_type)
      .def("cycles", &Permutation::cycles)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("__mul__", &compose)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", [](const Permutation& p) { return PermutationHash{}(p); })
      .def("__str__", &to_cycle_string)
      .def("__repr__", [](const Permutation& p) {
        return "Permutation('" + to_cycle_string(p) + "', degree=" +
               std::to_string(p.degree()) + ")";
      });

  m.def("compose", &compose, py::arg("a"), py::arg("b"),
        "Applies b first, then a.");

  py::module_ named_mod = m.def_submodule("named", "f, g, psi and phi on K3,3");
  named_mod.def("f", &named::f);
  named_mod.def("g", &named::g);
  named_mod.def("psi", &named::psi);
  named_mod.def("phi", &named::phi);

  py::class_<PermGroup>(m, "PermGroup")
      .def_static("generate", &PermGroup::generate, py::arg("generators"))
      .def_static("trivial", &PermGroup::trivial, py::arg("degree"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def("order", &PermGroup::order)
      .def("__len__", &PermGroup::order)
      .def_property_readonly("generators", &PermGroup::generators)
      .def_property_readonly("elements", &PermGroup::elements)
      .def("__contains__", &PermGroup::contains)
      .def("is_subgroup_of", &PermGroup::is_subgroup_of)
      .def("__eq__", [](const PermGroup& a, const PermGroup& b) { return a == b; })
      .def("__repr__", [](const PermGroup& g) {
        return "<PermGroup order " + std::to_string(g.order()) + " on " +
               std::to_string(g.degree()) + " points>";
      });

  m.def("all_subgroups", &all_subgroups, py::arg("group"),
        py::arg("bound") = kDefaultOrderBound);
  m.def("are_conjugate_in", &are_conjugate_in, py::arg("group"), py::arg("a"),
        py::arg("b"));
  m.def("intersection", &intersection);
  m.def(
      "are_isomorphic",
      [](const PermGroup& a, const PermGroup& b) {
        return are_isomorphic(a, b).has_value();
      },
      py::arg("a"), py::arg("b"));

  py::class_<GroupName>(m, "GroupName")
      .def("order", &GroupName::order)
      .def("display", &GroupName::display)
      .def("__str__", &GroupName::to_string)
      .def("__eq__", [](const GroupName& a, const GroupName& b) { return a == b; })
      .def("__repr__", [](const GroupName& n) {
        return "GroupName('" + n.to_string() + "')";
      });
  m.def("recognize", [](const PermGroup& g) { return recognize(g); },
        py::arg("group"));

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("vertex_count"))
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      });
  m.def("mobius_ladder", [](std::size_t n) { return mobius_ladder(n).graph; },
        py::arg("n"));
  m.def("k33", [] { return k33().graph; });
  m.def("graph", &graph_from_spec, py::arg("spec"),
        "'k33', 'mobius:<n>' or graph text ('vertices N' / 'edge u v').");
  m.def(
      "automorphisms",
      [](const Graph& g) { return automorphisms(g); }, py::arg("graph"));

  py::class_<Decoration>(m, "Decoration")
      .def_static("from_json", &parse_decoration_json, py::arg("text"))
      .def("to_json", [](const Decoration& d) { return decoration_to_json(d); })
      .def("validate", [](const Decoration& d) { return validate(d); });
  m.def("stabilizer", &stabilizer, py::arg("decoration"));
  m.def("refined_upper_bound", &refined_upper_bound, py::arg("decoration"));
  m.def("ladder_decoration", &ladder_decoration, py::arg("n"), py::arg("k"),
        py::arg("invertible"));

  m.def("catalog", [] {
    py::list out;
    for (const auto& entry : catalog()) {
      py::dict d;
      d["name"] = entry.name;
      d["expected"] = entry.expected.to_string();
      d["order"] = entry.expected.order();
      d["anchor"] = entry.anchor;
      d["refined"] = entry.evaluation == Evaluation::RefinedBound;
      out.append(d);
    }
    return out;
  });
  m.def(
      "evaluate_catalog_entry",
      [](const std::string& name) {
        const CatalogEntry* entry = find_catalog_entry(name);
        if (!entry) throw py::key_error(name);
        return evaluate(*entry);
      },
      py::arg("name"));

  m.def("admissible_subgroup", &admissible_subgroup);
  m.def(
      "classify",
      [](std::size_t n) {
        py::list out;
        for (const auto& g : classify(n).groups) out.append(realizable_dict(g));
        return out;
      },
      py::arg("n"));
  m.def("classify_json", [](std::size_t n) { return report_to_json(classify(n)); },
        py::arg("n"));

  m.def("lemma_z2cubed", [] {
    const LemmaReport r = lemma_z2cubed();
    py::dict d;
    d["subgroups_found"] = r.subgroups_found;
    d["all_contain_transposition"] = r.all_contain_transposition;
    d["vacuous"] = r.vacuous;
    return d;
  });
  m.def(
      "corollary_scan_s6",
      [] {
        CorollaryReport r;
        {
          py::gil_scoped_release release;
          r = corollary_scan_s6({});
        }
        py::dict d;
        d["total_subgroups"] = r.total_subgroups;
        d["survivors"] = r.survivors;
        d["exceptions"] = r.exceptions.size();
        py::list classes;
        for (const auto& c : r.classes) {
          classes.append(py::make_tuple(c.name.to_string(), c.count, c.realizable));
        }
        d["classes"] = classes;
        return d;
      },
      "Slow: enumerates all 1455 subgroups of S6.");

  m.def(
      "run_checks",
      [](bool deep) {
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_checks(deep);
        }
        py::list out;
        for (const auto& r : results) {
          out.append(py::make_tuple(r.name, r.passed, r.detail));
        }
        return out;
      },
      py::arg("deep") = false);
}
