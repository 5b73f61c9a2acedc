#include "csdiv/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace csd;

namespace {

// Python ints of any size go through their decimal text
IntVec to_ints(const py::sequence& s) {
    IntVec v;
    v.reserve(py::len(s));
    for (py::handle h : s) {
        if (!py::isinstance<py::int_>(h)) throw Error(ErrorKind::Parse, "entries must be integers", 0);
        v.emplace_back(py::str(h).cast<std::string>(), 10);
    }
    return v;
}

Divisor to_divisor(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_divisor(o.cast<std::string>());
    IntVec v = to_ints(o.cast<py::sequence>());
    if (v.size() < 2) throw Error(ErrorKind::TooShort, "a divisor needs at least two entries");
    return Divisor(std::move(v));
}

BudgetOverrides overrides(std::optional<std::size_t> max_nodes, std::optional<std::size_t> max_length,
                          std::optional<long> min_entry) {
    BudgetOverrides o;
    o.max_nodes = max_nodes;
    o.max_length = max_length;
    if (min_entry) o.min_entry = Int(*min_entry);
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants and classification of circular spherical divisors";

    // message starts with the error kind, e.g. "ParseError: ..."
    py::register_exception<Error>(m, "CsdivError", PyExc_ValueError);

    m.def("canonical_form", [](const py::object& d) { return to_string(canonical_form(to_divisor(d))); },
          py::arg("divisor"));
    m.def("invariants_json", [](const py::object& d) { return invariants_report(to_divisor(d)).dump(); },
          py::arg("divisor"));
    m.def(
        "classify_json",
        [](const py::object& d, std::optional<std::size_t> max_nodes, std::optional<std::size_t> max_length,
           std::optional<long> min_entry) {
            ClassifyOptions opt;
            opt.budget = overrides(max_nodes, max_length, min_entry);
            const ClassifyResult r = classify_report(to_divisor(d), opt);
            return py::make_tuple(r.report.dump(), r.inconclusive);
        },
        py::arg("divisor"), py::arg("max_bfs_nodes") = py::none(), py::arg("max_length") = py::none(),
        py::arg("min_entry") = py::none());
    m.def(
        "equiv_json",
        [](const py::object& a, const py::object& b, std::optional<std::size_t> max_nodes,
           std::optional<std::size_t> max_length, std::optional<long> min_entry) {
            const Divisor x = to_divisor(a), y = to_divisor(b);
            EquivVerdict v;
            {
                py::gil_scoped_release nogil;
                v = decide_equivalence(x, y, resolve_budget(overrides(max_nodes, max_length, min_entry), x, y));
            }
            json j = to_json(v);
            j["first"] = to_json(x);
            j["second"] = to_json(y);
            return j.dump();
        },
        py::arg("first"), py::arg("second"), py::arg("max_bfs_nodes") = py::none(), py::arg("max_length") = py::none(),
        py::arg("min_entry") = py::none());
    m.def("dual_json", [](const py::sequence& c) { return to_json(dual_cusp(to_ints(c))).dump(); }, py::arg("cycle"));
    m.def("geography_json", [](const py::object& d) { return to_json(stein_geography(to_divisor(d))).dump(); },
          py::arg("divisor"));
    m.def("charge", [](const py::object& d) { return charge(to_divisor(d)).get_str(); }, py::arg("divisor"));
    m.def(
        "signature",
        [](const py::object& d) {
            const Signature s = signature(to_divisor(d));
            return py::make_tuple(s.b_plus, s.b_minus, s.b_zero);
        },
        py::arg("divisor"));
    m.def(
        "monodromy",
        [](const py::object& d) {
            const SL2 a = monodromy(to_divisor(d));
            return py::make_tuple(a.a.get_str(), a.b.get_str(), a.c.get_str(), a.d.get_str());
        },
        py::arg("divisor"));
}
