#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jhplab/errors.hpp"
#include "jhplab/grothendieck.hpp"
#include "jhplab/regression.hpp"
#include "jhplab/type_a.hpp"

namespace py = pybind11;
using namespace jhplab;

namespace {

std::vector<std::pair<int, int>> as_pairs(const std::vector<Transposition>& ts)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& t : ts)
        out.emplace_back(t.i, t.j);
    return out;
}

std::vector<std::string> as_names(const std::vector<IntervalModule>& ms)
{
    std::vector<std::string> out;
    for (const auto& m : ms)
        out.push_back(m.str());
    return out;
}

std::string report_json(CategorySource src, int bound)
{
    src.grade_bound = bound;
    py::gil_scoped_release release;
    return report(src).to_json();
}

} // namespace

PYBIND11_MODULE(_jhplab, m)
{
    m.doc() = "Torsion-free classes, Grothendieck monoids and the Jordan-Hoelder property";

    static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ValueError);
    static py::exception<ResourceError> resource(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const PreconditionError& e) {
            py::set_error(precondition, e.what());
        } catch (const ResourceError& e) {
            py::set_error(resource, e.what());
        }
    });

    m.def("coxeter_element", [](const std::string& quiver) {
        return coxeter_element(Orientation::parse(quiver)).product().str();
    }, py::arg("quiver"));
    m.def("c_sortable", [](const std::string& quiver) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_c_sortable(coxeter_element(Orientation::parse(quiver))))
            out.push_back(w.str());
        return out;
    }, py::arg("quiver"));
    m.def("inversions", [](const std::string& w) { return as_pairs(inversions(Permutation::parse(w))); },
          py::arg("w"));
    m.def("bruhat_inversions", [](const std::string& w) {
        return as_pairs(bruhat_inversions(Permutation::parse(w)));
    }, py::arg("w"));
    m.def("support", [](const std::string& w) { return support(Permutation::parse(w)); }, py::arg("w"));

    m.def("torsion_free_class", [](const std::string& w, const std::string& quiver) {
        return as_names(class_of(Permutation::parse(w), Orientation::parse(quiver)).modules);
    }, py::arg("w"), py::arg("quiver"));
    m.def("simples", [](const std::string& w, const std::string& quiver) {
        return as_names(simples_of(Permutation::parse(w), Orientation::parse(quiver)));
    }, py::arg("w"), py::arg("quiver"));
    m.def("jhp", [](const std::string& w, const std::string& quiver) {
        return jhp_verdict(Permutation::parse(w), Orientation::parse(quiver));
    }, py::arg("w"), py::arg("quiver"));
    m.def("census", [](const std::string& quiver) {
        auto c = census(Orientation::parse(quiver));
        return std::tuple{c.total, c.jhp, c.faithful_jhp};
    }, py::arg("quiver"));
    m.def("table_csv", [](const std::string& quiver, bool faithful_only) {
        return table_csv(table_rows(Orientation::parse(quiver), faithful_only));
    }, py::arg("quiver"), py::arg("faithful_only") = false);

    m.def("report_type_a", [](const std::string& w, const std::string& quiver, int bound) {
        return report_json({TypeASource{Permutation::parse(w), Orientation::parse(quiver)}}, bound);
    }, py::arg("w"), py::arg("quiver"), py::arg("bound") = 0);
    m.def("report_presentation", [](const std::string& text, int bound) {
        return report_json({AbstractSource{parse_presentation(text), "presentation"}}, bound);
    }, py::arg("text"), py::arg("bound") = 0);
    m.def("report_nakayama", [](const std::string& kupisch, const std::string& members, int bound) {
        return report_json({NakayamaSource{make_class(parse_kupisch(kupisch), parse_uniserials(members))}}, bound);
    }, py::arg("kupisch"), py::arg("members"), py::arg("bound") = 0);
    m.def("report_a2", [](int m_, int n, int bound) { return report_json({A2Designated{m_, n}}, bound); },
          py::arg("m"), py::arg("n"), py::arg("bound") = 0);
    m.def("cayley_dot", [](const std::string& text, int bound) {
        return cayley_quiver(parse_presentation(text), bound).to_dot();
    }, py::arg("text"), py::arg("bound"));

    m.def("regress", [](std::optional<std::vector<std::string>> only) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        py::gil_scoped_release release;
        for (const auto& item : regression_items()) {
            if (only && std::find(only->begin(), only->end(), item.name) == only->end())
                continue;
            auto r = item.run();
            out.emplace_back(item.name, r.pass, r.detail);
        }
        return out;
    }, py::arg("only") = py::none());
}
