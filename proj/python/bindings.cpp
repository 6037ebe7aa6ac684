// Rationals cross the boundary as "a/b" strings; the Python package turns
// them into fractions.Fraction.
#include "bettikit/bounds.hpp"
#include "bettikit/decompose.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/io.hpp"
#include "bettikit/koszul.hpp"
#include "bettikit/pure.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bettikit;

namespace {

using PyTable = std::map<std::pair<int, int>, std::string>;

PyTable to_py(const BettiTable& t)
{
    PyTable out;
    for (const auto& [cell, value] : t.entries())
        out[{cell.p, cell.q}] = to_string(value);
    return out;
}

BettiTable from_py(const PyTable& t)
{
    BettiTable out;
    for (const auto& [cell, value] : t)
        out.set(cell.first, cell.second, parse_rational(value));
    return out;
}

using PyTerm = std::pair<std::string, std::vector<int>>;

std::vector<PyTerm> to_py(const Decomposition& dec)
{
    std::vector<PyTerm> out;
    for (const auto& t : dec.terms)
        out.emplace_back(to_string(t.coefficient), std::vector<int>(t.degrees.degrees().begin(), t.degrees.degrees().end()));
    return out;
}

Decomposition from_py(const std::vector<PyTerm>& terms)
{
    Decomposition dec;
    for (const auto& [c, d] : terms)
        dec.terms.push_back({parse_rational(c), DegreeSequence(d)});
    return dec;
}

py::dict report_to_py(const StrandReport& r) { return py::module_::import("json").attr("loads")(report_to_json(r).dump()); }

}  // namespace

PYBIND11_MODULE(_bettikit, m)
{
    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<NotInCone>(m, "NotInCone", error);
    py::register_exception<NegativeEntry>(m, "NegativeEntry", error);
    py::register_exception<IterationLimitExceeded>(m, "IterationLimitExceeded", error);

    m.def("pure", [](const std::vector<int>& d) {
        auto pd = hk_diagram(DegreeSequence(d));
        return std::make_pair(to_py(pd.table), to_string(pd.multiplicity));
    });
    m.def("kappa_max", [](int p, int q, int e) { return kappa_max(p, q, e).get_str(); });
    m.def("kappa_next_max", [](int p, int e) { return kappa_next_max(p, e).get_str(); });

    m.def("decompose", [](const PyTable& t) { return to_py(bs_decompose(from_py(t))); });
    m.def("reconstruct", [](const std::vector<PyTerm>& terms) { return to_py(from_py(terms).reconstruct()); });
    m.def("multiplicity", [](const std::vector<PyTerm>& terms, int codim) {
        return to_string(multiplicity_from_decomposition(from_py(terms), codim));
    });

    m.def(
        "betti",
        [](const std::string& ideal_text, int q_max, const std::string& field) {
            Ideal ideal = parse_ideal(ideal_text);
            if (!field.empty())
                ideal.field = FieldSpec::parse(field);
            BettiComputation bc;
            {
                py::gil_scoped_release release;
                bc = betti_table(ideal, q_max);
            }
            return std::make_pair(to_py(bc.table), bc.complete);
        },
        py::arg("ideal"), py::arg("q_max"), py::arg("field") = "");

    m.def(
        "check_first_strand",
        [](const PyTable& t, int e, int q, bool nd) {
            BettiTable table = from_py(t);
            if (q <= 0) {
                auto first = first_nontrivial_strand(table);
                if (!first)
                    throw Error("table has no nontrivial strand");
                q = *first;
            }
            return report_to_py(check_first_strand(table, {nd, false, e}, q));
        },
        py::arg("table"), py::arg("codim"), py::arg("q") = 0, py::arg("nd") = false);
    m.def(
        "check_next_to_max",
        [](const PyTable& t, int e, bool lgp) { return report_to_py(check_next_to_max(from_py(t), {false, lgp, e})); },
        py::arg("table"), py::arg("codim"), py::arg("lgp") = false);
    m.def("check_ndm", [](const PyTable& t, int d, int mm) { return check_Ndm(from_py(t), d, mm); });

    m.def("parse_table", [](const std::string& text) { return to_py(parse_table(text)); });
    m.def("emit_table", [](const PyTable& t) { return emit_table_text(from_py(t)); });
}
