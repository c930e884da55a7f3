#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commprob/bounds.hpp"
#include "commprob/catalog.hpp"
#include "commprob/commprob.hpp"
#include "commprob/errors.hpp"
#include "commprob/group_spec.hpp"
#include "commprob/partitions.hpp"
#include "commprob/structure.hpp"

namespace py = pybind11;
using namespace commprob;

namespace {

py::object to_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
  // Leaked on purpose so no Python object is destroyed after interpreter shutdown.
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_int(r.num()), to_int(r.den()));
}

Limits limits_for(std::optional<std::size_t> order_cap) {
  Limits l;
  if (order_cap) l.order_cap = *order_cap;
  return l;
}

py::dict report_dict(const CpReport& r) {
  py::dict d;
  d["group"] = r.group;
  d["order"] = r.order;
  d["pairs"] = r.pairs;
  d["classes"] = r.classes;
  d["cp"] = to_fraction(r.cp);
  d["methods_agree"] = r.methods_agree;
  return d;
}

py::dict bound_dict(const BoundReport& r) {
  py::dict d;
  d["check"] = std::string(bound_name(r.id));
  d["subject"] = r.subject;
  d["applicable"] = r.applicable;
  d["lhs"] = to_fraction(r.lhs);
  d["rhs"] = to_fraction(r.rhs);
  d["holds"] = r.holds;
  d["slack"] = to_fraction(r.slack);
  d["equality"] = r.equality;
  d["equality_condition"] = r.equality_condition ? py::object(py::bool_(*r.equality_condition)) : py::none();
  d["external_claim"] = r.external_claim;
  return d;
}

}  // namespace

PYBIND11_MODULE(_commprob, m) {
  m.doc() = "Exact commuting probability of finite groups";

  static py::exception<Error> error(m, "CommprobError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "SpecParseError", error.ptr());
  static py::exception<OrderCapExceeded> cap_error(m, "OrderCapExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const OrderCapExceeded& e) {
      PyErr_SetString(cap_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteGroup::inv, py::arg("a"))
      .def("label", &FiniteGroup::label, py::arg("a"))
      .def("element_order", &FiniteGroup::element_order, py::arg("a"))
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def(
      "build_group", [](const std::string& spec, std::optional<std::size_t> order_cap) {
        return build_group(spec, limits_for(order_cap));
      },
      py::arg("spec"), py::arg("order_cap") = py::none(), "Builds a group from a spec such as 'prod(q8,cyclic(3))'.");

  m.def(
      "cp", [](const FiniteGroup& g, bool verify) { return report_dict(cp(g, verify)); }, py::arg("group"),
      py::arg("verify") = false, "Exact commuting probability report; verify runs all three methods.");
  m.def("cp_pairs", [](const FiniteGroup& g) { return report_dict(cp_pairs(g)); }, py::arg("group"));
  m.def("cp_centralizer_sum", [](const FiniteGroup& g) { return report_dict(cp_centralizer_sum(g)); }, py::arg("group"));
  m.def("cp_class_count", [](const FiniteGroup& g) { return report_dict(cp_class_count(g)); }, py::arg("group"));

  m.def("class_sizes", [](const FiniteGroup& g) { return conjugacy_classes(g).class_sizes(); }, py::arg("group"));
  m.def("center_order", [](const FiniteGroup& g) { return center(g).size(); }, py::arg("group"));
  m.def("derived_order", [](const FiniteGroup& g) { return derived_subgroup(g).order(); }, py::arg("group"));
  m.def("normal_subgroups", [](const FiniteGroup& g) { return normal_subgroups(g); }, py::arg("group"));
  m.def("is_simple", [](const FiniteGroup& g) { return is_simple(g); }, py::arg("group"));
  m.def("is_solvable", &is_solvable, py::arg("group"));
  m.def("an_class_splits", &an_class_splits, py::arg("n"), py::arg("cycle_type"));

  m.def(
      "run_suite",
      [](const FiniteGroup& g) {
        py::list out;
        for (const auto& r : run_suite(g)) out.append(bound_dict(r));
        return out;
      },
      py::arg("group"), "Every bound check on the group, as a list of dicts.");

  m.def(
      "partition_table",
      [](std::size_t max_n) {
        PartitionTable t = build_partition_table(max_n);
        py::list rows;
        for (std::size_t n = 0; n <= max_n; ++n) {
          rows.append(py::make_tuple(n, to_int(t.p[n]), to_int(t.q[n]), to_int(t.r[n]), to_int(t.s[n])));
        }
        return rows;
      },
      py::arg("max_n"), "Rows (n, p, q, r, s) for 0 <= n <= max_n.");
  m.def("cp_symmetric_closed", [](unsigned n) { return to_fraction(cp_symmetric_closed(n)); }, py::arg("n"));
  m.def("cp_alternating_closed", [](unsigned n) { return to_fraction(cp_alternating_closed(n)); }, py::arg("n"));
  m.def("cp_dihedral_closed", [](std::size_t n) { return to_fraction(cp_dihedral_closed(n)); }, py::arg("n"));

  m.def(
      "mc_estimate",
      [](const FiniteGroup& g, std::uint64_t samples, std::uint64_t seed) {
        McEstimate e = mc_estimate(g, samples, seed);
        py::dict d;
        d["samples"] = e.samples;
        d["hits"] = e.hits;
        d["seed"] = e.seed;
        d["estimate"] = to_fraction(e.estimate);
        d["ci_low"] = to_fraction(e.ci_low);
        d["ci_high"] = to_fraction(e.ci_high);
        return d;
      },
      py::arg("group"), py::arg("samples") = 100000, py::arg("seed") = 0);

  m.def(
      "catalog",
      [](std::size_t max_order) {
        py::list out;
        for (const auto& e : builtin_catalog(max_order)) {
          py::dict d;
          d["name"] = e.name;
          d["spec"] = e.spec;
          d["order"] = e.order;
          d["cp"] = to_fraction(e.cp);
          d["classes"] = e.classes;
          d["abelian"] = e.abelian;
          d["simple"] = e.simple;
          d["solvable"] = e.solvable;
          out.append(d);
        }
        return out;
      },
      py::arg("max_order") = 128);

  m.def(
      "spectrum",
      [](std::size_t max_order) {
        py::list out;
        for (const auto& v : spectrum(max_order).values) out.append(py::make_tuple(to_fraction(v.cp), v.witnesses));
        return out;
      },
      py::arg("max_order") = 128, "Distinct cp values in descending order with witness names.");
}
