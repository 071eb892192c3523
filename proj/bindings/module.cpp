#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "thick/counting.hpp"
#include "thick/decomposition.hpp"
#include "thick/generators.hpp"
#include "thick/io.hpp"
#include "thick/parameterized.hpp"
#include "thick/recognition.hpp"

namespace py = pybind11;
using namespace thick;

namespace {

// Big numbers cross as decimal strings; the Python side wraps them in int / Fraction.
std::vector<mpq_class> to_weights(const std::vector<std::string>& w) {
    std::vector<mpq_class> out;
    for (const auto& s : w) out.push_back(parse_rational(s));
    return out;
}

std::string outcome(const RecognitionOutcome& r) { return outcome_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_thick, m) {
    m.doc() = "Thick graph recognition and exact counting";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<ClassError>(m, "ClassError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("read_graph", [](const std::string& path) {
        auto lg = read_graph_file(path);
        return py::make_tuple(lg.graph, lg.labels);
    });

    m.def("_recognize", [](const Graph& g, const std::string& cls) {
        if (cls == "thick-forest") return outcome(recognize_thick_forest(g));
        if (cls == "quasi-thick-forest") return outcome(recognize_quasi_outcome(g));
        if (cls == "cobipartite") return outcome(recognize_cobipartite_outcome(g));
        if (cls == "chordal") return outcome(recognize_chordal_outcome(g));
        if (cls == "unipolar") return outcome(recognize_unipolar_outcome(g));
        throw InputError("unknown class '" + cls + "'");
    });
    m.def("_recognize_fpt", [](const Graph& g, int nu) { return outcome(recognize_fpt_trianglefree(g, nu)); });
    m.def("_decompose", [](const Graph& g) { return decomposition_to_json(clique_cutset_decompose(g)).dump(); });

    m.def("_count_colourings", [](const Graph& g, long q, int threads) {
        py::gil_scoped_release release;
        return count_colourings(g, q, threads).get_str();
    });
    m.def("_weighted_independent_sum", [](const Graph& g, const std::vector<std::string>& w) {
        return rational_string(weighted_independent_sum(g, to_weights(w)));
    });
    m.def("_independence_polynomial", [](const Graph& g, const std::vector<std::string>& w) {
        std::vector<std::string> out;
        for (const auto& c : independence_polynomial(g, to_weights(w)).coeffs) out.push_back(rational_string(c));
        return out;
    });
    m.def("_count_ind_treewidth", [](const Graph& g, const std::string& model_json, const std::string& td_text) {
        auto model = model_from_json(nlohmann::json::parse(model_json));
        std::istringstream in(td_text);
        auto pace = read_pace_td(in);
        return count_ind_treewidth(g, model, make_nice(model.thin_graph(), pace.td)).get_str();
    });

    m.def("_random_thick_forest", [](std::uint64_t seed, int nh, int max_clique, double density) {
        auto gen = gen_random_thick_forest(seed, nh, max_clique, density);
        return py::make_tuple(gen.graph, model_to_json(gen.model).dump());
    });
}
