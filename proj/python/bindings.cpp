#include <indcat/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace indcat;

namespace {

CategoryId category(const std::string& name, const std::vector<int>& labels, bool metric, int prime, int maxdim,
                    bool symmetric) {
    const Cat tag = parse_cat(name);
    if (tag == Cat::KDist) return make_kdist(labels.empty() ? std::vector<int>{0, 1} : labels, metric);
    if (tag == Cat::Bil) return make_bil(prime, maxdim, symmetric);
    return make_category(tag);
}

// Reports cross the boundary as JSON text; the Python package decodes them.
#define CATEGORY_ARGS                                                                                           \
    py::arg("labels") = std::vector<int>{}, py::arg("metric") = false, py::arg("prime") = 2, py::arg("maxdim") = 3, \
    py::arg("symmetric") = false

}  // namespace

PYBIND11_MODULE(_indcat, m) {
    m.doc() = "independence relations in finite categories";
    py::register_exception<Error>(m, "IndcatError", PyExc_ValueError);

    m.def(
        "check",
        [](const std::string& cat, const std::string& axiom, int max_size, std::size_t sample, std::uint64_t seed, int bound,
           int lambda, int jobs, const std::vector<int>& labels, bool metric, int prime, int maxdim, bool symmetric) {
            SweepOptions o;
            o.cat = category(cat, labels, metric, prime, maxdim, symmetric);
            o.max_size = max_size;
            o.sample = sample;
            o.seed = seed;
            o.bound = bound;
            o.lambda = lambda;
            o.jobs = jobs;
            return check_report(axiom, o).dump();
        },
        py::arg("category"), py::arg("axiom"), py::arg("max_size") = 3, py::arg("sample") = 0, py::arg("seed") = 0,
        py::arg("bound") = 3, py::arg("lam") = 2, py::arg("jobs") = 1, CATEGORY_ARGS, py::call_guard<py::gil_scoped_release>());

    m.def(
        "classify",
        [](const std::string& cat, int max_size, int jobs, const std::vector<int>& labels, bool metric, int prime, int maxdim,
           bool symmetric) {
            SweepOptions o;
            o.cat = category(cat, labels, metric, prime, maxdim, symmetric);
            o.max_size = max_size;
            o.jobs = jobs;
            return classify_report(o).dump();
        },
        py::arg("category"), py::arg("max_size") = 3, py::arg("jobs") = 1, CATEGORY_ARGS,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "enumerate",
        [](const std::string& cat, int max_size, bool objects, const std::vector<int>& labels, bool metric, int prime, int maxdim,
           bool symmetric) {
            return enumerate_report(category(cat, labels, metric, prime, maxdim, symmetric), max_size, objects).dump();
        },
        py::arg("category"), py::arg("max_size") = 3, py::arg("objects") = false, CATEGORY_ARGS,
        py::call_guard<py::gil_scoped_release>());

    m.def("fixture_names", &fixture_names);
    m.def(
        "fixtures", [](const std::vector<std::string>& names) { return fixture_report(names).dump(); }, py::arg("names"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "fixture_source", [](const std::string& name) { return fixture_source(name).dump(); }, py::arg("name"));
    m.def(
        "recheck",
        [](const std::string& check, const std::string& diagram) {
            return to_json(recheck(check, diagram_from_json(json::parse(diagram)))).dump();
        },
        py::arg("check"), py::arg("diagram"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "render", [](const std::string& report, const std::string& format) { return render(json::parse(report), format); },
        py::arg("report"), py::arg("format") = "table");
    m.def("axiom_names", &axiom_names);
}
