#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eireg/cli.hpp"
#include "eireg/io.hpp"

namespace py = pybind11;
using namespace eireg;

namespace {

py::tuple node_tuple(Node x) { return py::make_tuple(x.row, x.col); }

int ordering_to_int(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalised (e,i)-regularisation of integer partitions";

  py::register_exception<Error>(m, "EiregError", PyExc_ValueError);

  py::class_<Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init([](std::vector<int> parts) { return Partition(std::move(parts)); }))
      .def(py::init([](const std::string& text) { return parse_partition(text); }))
      .def_property_readonly("parts", [](const Partition& p) {
        return std::vector<int>(p.parts().begin(), p.parts().end());
      })
      .def_property_readonly("size", &Partition::size)
      .def("__len__", &Partition::length)
      .def("__str__", &format_partition)
      .def("__repr__", [](const Partition& p) { return "Partition('" + format_partition(p) + "')"; })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) { return py::hash(py::str(format_partition(p))); });
  py::implicitly_convertible<py::list, Partition>();
  py::implicitly_convertible<py::tuple, Partition>();
  py::implicitly_convertible<py::str, Partition>();

  py::class_<AbacusDisplay>(m, "AbacusDisplay")
      .def(py::init([](int runners, std::vector<int> beads) { return AbacusDisplay(runners, beads); }),
           py::arg("runners"), py::arg("beads"))
      .def_property_readonly("runners", &AbacusDisplay::runners)
      .def_property_readonly("beads", [](const AbacusDisplay& a) {
        return std::vector<int>(a.beads().begin(), a.beads().end());
      })
      .def("render", &render_abacus)
      .def("partition", &partition_from_abacus)
      .def("__eq__", [](const AbacusDisplay& a, const AbacusDisplay& b) { return a == b; });

  py::class_<PhiTrace>(m, "PhiTrace")
      .def_readonly("s1", &PhiTrace::s1)
      .def_readonly("s_list", &PhiTrace::s_list)
      .def_readonly("x_list", &PhiTrace::x_list)
      .def_readonly("b_list", &PhiTrace::b_list)
      .def_property_readonly("t_prefix", [](const PhiTrace& t) {
        return std::vector<int>(t.t_prefix().begin(), t.t_prefix().end());
      })
      .def_readonly("c", &PhiTrace::c)
      .def_readonly("before", &PhiTrace::before)
      .def_readonly("after", &PhiTrace::after)
      .def("to_json", [](const PhiTrace& t) { return to_json(t).dump(); });

  py::class_<RegResult>(m, "RegResult")
      .def_readonly("input", &RegResult::input)
      .def_readonly("output", &RegResult::output)
      .def_readonly("steps", &RegResult::steps)
      .def_property_readonly("e", [](const RegResult& r) { return r.params.e(); })
      .def_property_readonly("i", [](const RegResult& r) { return r.params.i(); })
      .def("to_json", [](const RegResult& r) { return to_json(r).dump(); });

  py::class_<RegClass>(m, "RegClass")
      .def_readonly("members", &RegClass::members)
      .def_readonly("representative", &RegClass::representative);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("e", &VerificationReport::e)
      .def_readonly("i", &VerificationReport::i)
      .def_readonly("class_count", &VerificationReport::class_count)
      .def_property_readonly("passed", &VerificationReport::all_passed)
      .def_property_readonly("checks", [](const VerificationReport& r) {
        py::dict out;
        for (const auto& c : r.checks) out[py::str(c.name)] = c.passed;
        return out;
      })
      .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); })
      .def("__str__", &render_report);

  m.def("conjugate", &conjugate);
  m.def("dominates", &dominates);
  m.def("lex_compare", [](const Partition& a, const Partition& b) {
    return ordering_to_int(lex_compare(a, b));
  });
  m.def("hook_length", [](const Partition& p, int row, int col) {
    return hook_info(p, {row, col}).hook_len;
  });
  m.def("rim", [](const Partition& p) {
    py::list out;
    for (Node x : rim(p)) out.append(node_tuple(x));
    return out;
  });
  m.def("remove_skew_hook", [](const Partition& p, int row, int col) {
    return remove_skew_hook(p, {row, col});
  });
  m.def("find_ei_hooks", [](const Partition& p, int e, int i) {
    py::list out;
    for (const auto& h : find_ei_hooks(p, EiParams(e, i))) out.append(py::make_tuple(node_tuple(h.node), h.k));
    return out;
  });
  m.def("ladder_key", [](int row, int col, int e, int i) {
    const LadderKey k = ladder_key({row, col}, EiParams(e, i));
    return py::make_tuple(k.l, k.r);
  });
  m.def("fingerprint", [](const Partition& p, int e, int i) {
    const LadderFingerprint fp = fingerprint(p, EiParams(e, i));
    py::dict out;
    for (const auto& [k, n] : fp.counts()) out[py::make_tuple(k.l, k.r)] = n;
    return out;
  });
  m.def("same_class", [](const Partition& a, const Partition& b, int e, int i) {
    return same_class(a, b, EiParams(e, i));
  });
  m.def("ladder_labels", [](const Partition& p, int e, int i) { return ladder_labels(p, EiParams(e, i)); });
  m.def("beta_set", [](const Partition& p, int s) { return beta_set(p, s).values; });
  m.def("abacus", [](const Partition& p, int e, std::optional<int> s) {
    return abacus_from_partition(p, e, s.value_or(default_bead_count(p)));
  }, py::arg("partition"), py::arg("e"), py::arg("s") = py::none());
  m.def("phi_step", &phi_step, py::arg("abacus"), py::arg("i"));
  m.def("regularise", [](const Partition& p, int e, int i) { return regularise(p, EiParams(e, i)); });
  m.def("is_ei_regular", [](const Partition& p, int e, int i) { return is_ei_regular(p, EiParams(e, i)); });
  m.def("regularise_then_james", [](const Partition& p, int e, int i) {
    return regularise_then_james(p, EiParams(e, i));
  });
  m.def("abc_violation", [](const Partition& p, int e, int i) -> py::object {
    auto abc = abc_violation(p, EiParams(e, i));
    if (!abc) return py::none();
    return py::make_tuple(node_tuple(abc->a), node_tuple(abc->b), node_tuple(abc->c));
  });
  m.def("enumerate_partitions", &enumerate_partitions);
  m.def("classes", [](int n, int e, int i) { return classes(n, EiParams(e, i)); });
  m.def("verify", [](int n, int e, int i) {
    py::gil_scoped_release release;
    return verify(n, EiParams(e, i));
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
