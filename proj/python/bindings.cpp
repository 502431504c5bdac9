#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twistcode/report.hpp"
#include "twistcode/twistcode.hpp"

namespace py = pybind11;
using namespace twistcode;

namespace {

// Matrices cross the boundary as lists of '0'/'1' strings, with an explicit
// column count so that empty matrices keep their shape.
BitMatrix matrix_from(const std::vector<std::string>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValidationError("row " + std::to_string(r) + " has the wrong length");
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

std::vector<std::string> rows_of(const BitMatrix& m) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r).to_string());
    return out;
}

std::vector<std::string> strings(const std::vector<BitVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
}

std::string text(const Rational& q) { return to_string(q); }

Graph graph_from(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Edge> es;
    for (const auto& [u, v] : edges) es.push_back({u, v});
    return {n, std::move(es)};
}

}  // namespace

PYBIND11_MODULE(_twistcode, m) {
    m.doc() = "Graph codes, twisted homology and the objects behind them.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    // gf2-linalg
    m.def("rank", [](const std::vector<std::string>& rows, std::size_t cols) { return rank(matrix_from(rows, cols)); },
          py::arg("rows"), py::arg("cols"));
    m.def(
        "kernel_basis",
        [](const std::vector<std::string>& rows, std::size_t cols) { return strings(kernel_basis(matrix_from(rows, cols))); },
        py::arg("rows"), py::arg("cols"));
    m.def(
        "row_reduce",
        [](const std::vector<std::string>& rows, std::size_t cols) {
            const auto e = row_reduce(matrix_from(rows, cols));
            return py::make_tuple(rows_of(e.reduced), e.pivots);
        },
        py::arg("rows"), py::arg("cols"));

    // codes
    py::class_<LinearCode>(m, "LinearCode")
        .def_static(
            "from_parity_check",
            [](const std::vector<std::string>& rows, std::size_t cols) {
                return LinearCode::from_parity_check(matrix_from(rows, cols));
            },
            py::arg("rows"), py::arg("cols"))
        .def_static(
            "from_generator",
            [](const std::vector<std::string>& rows, std::size_t cols) {
                return LinearCode::from_generator(matrix_from(rows, cols));
            },
            py::arg("rows"), py::arg("cols"))
        .def_property_readonly("length", &LinearCode::length)
        .def_property_readonly("dimension", &LinearCode::dimension)
        .def_property_readonly("parity_check", [](const LinearCode& c) { return rows_of(c.parity_check()); })
        .def_property_readonly("generator", [](const LinearCode& c) { return rows_of(c.generator()); })
        .def("contains", [](const LinearCode& c, const std::string& w) { return c.contains(BitVector::from_string(w)); })
        .def("rate", [](const LinearCode& c) { return text(rate(c)); })
        .def(
            "min_distance",
            [](const LinearCode& c, std::size_t cap, unsigned workers) {
                py::gil_scoped_release release;
                return min_distance(c, {cap, workers});
            },
            py::arg("max_bruteforce_dim") = 26, py::arg("workers") = 1)
        .def("relative_distance", [](const LinearCode& c) { return text(relative_distance(c)); });

    auto codes_mod = m.def_submodule("codes");
    codes_mod.def("repetition", &codes::repetition);
    codes_mod.def("parity", &codes::parity);
    codes_mod.def("hamming_7_4", &codes::hamming_7_4);
    codes_mod.def("full", &codes::full);
    codes_mod.def("zero", &codes::zero);
    codes_mod.def("random_code", &codes::random_code, py::arg("n"), py::arg("k"), py::arg("seed") = 0);

    // graphs
    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from), py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<Vertex, Vertex>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("neighbors",
             [](const Graph& g, Vertex u) {
                 const auto ns = g.neighbors(u);
                 return std::vector<Vertex>(ns.begin(), ns.end());
             })
        .def("degree", &Graph::degree)
        .def("to_text", [](const Graph& g) {
            std::ostringstream out;
            write_graph(out, g);
            return out.str();
        })
        .def_static("from_text", [](const std::string& s) {
            std::istringstream in(s);
            return read_graph(in);
        });

    auto graphs_mod = m.def_submodule("graphs");
    graphs_mod.def("complete", &graphs::complete);
    graphs_mod.def("cycle", &graphs::cycle);
    graphs_mod.def("path", &graphs::path);
    graphs_mod.def("star", &graphs::star);
    graphs_mod.def("petersen", &graphs::petersen);
    graphs_mod.def("hypercube", &graphs::hypercube);
    graphs_mod.def("random_regular", &graphs::random_regular, py::arg("n"), py::arg("d"), py::arg("seed") = 0);
    graphs_mod.def("random_graph", &graphs::random_graph, py::arg("n"), py::arg("m"), py::arg("seed") = 0);

    m.def("regular_degree", &regular_degree);
    m.def("adjacency_spectrum", &adjacency_spectrum);
    m.def("second_eigenvalue", &second_eigenvalue);
    m.def("girth", &girth);
    m.def("component_count", &component_count);
    m.def("cycle_space_dimension", &cycle_space_dimension);

    // twisted homology, constant and gauge coefficients
    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static("from_simplices", [](std::size_t n, const std::vector<Simplex>& s) {
            return SimplicialComplex::from_simplices(n, s);
        })
        .def_static("from_graph", &SimplicialComplex::from_graph)
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def("face_count", &SimplicialComplex::face_count)
        .def("simplices", [](const SimplicialComplex& x, std::size_t k) {
            const auto s = x.simplices(k);
            return std::vector<Simplex>(s.begin(), s.end());
        });
    m.def("skeleton_complex", &skeleton_complex);
    m.def("random_complex", &random_complex, py::arg("vertex_count"), py::arg("edge_p"), py::arg("triangle_p"),
          py::arg("seed") = 0);
    m.def(
        "homology_dimension",
        [](const SimplicialComplex& x, std::size_t k, std::size_t m, std::optional<std::uint64_t> gauge_seed) {
            const auto f = gauge_seed ? gauge_local_system(x, m, *gauge_seed) : constant_local_system(x, m);
            return homology(x, f, k).dimension;
        },
        py::arg("complex"), py::arg("k"), py::arg("m") = 1, py::arg("gauge_seed") = py::none());
    m.def("homology_code", &homology_code);

    // graph codes
    py::class_<GraphCodeInstance>(m, "GraphCodeInstance")
        .def_property_readonly("graph", &GraphCodeInstance::graph)
        .def_property_readonly("code", &GraphCodeInstance::code)
        .def("satisfies_local_codes",
             [](const GraphCodeInstance& i, const std::string& x) {
                 return i.satisfies_local_codes(BitVector::from_string(x));
             })
        .def("boundary_evaluate", [](const GraphCodeInstance& i, const std::string& x) {
            return strings(boundary_evaluate(i, build_local_system(i), BitVector::from_string(x)));
        });

    m.def(
        "build_graph_code",
        [](const Graph& g, const std::vector<std::pair<std::vector<std::string>, std::size_t>>& checks) {
            std::vector<BitMatrix> ms;
            for (const auto& [rows, cols] : checks) ms.push_back(matrix_from(rows, cols));
            return build_graph_code(g, LocalCodeAssignment(g, std::move(ms)));
        },
        py::arg("graph"), py::arg("parity_checks"));
    m.def(
        "synthesize",
        [](const Graph& g, const std::string& spec, std::uint64_t seed) {
            return build_graph_code(g, synthesize_assignment(g, spec, seed));
        },
        py::arg("graph"), py::arg("local_code"), py::arg("seed") = 0);

    m.def("verify_proposition", [](const GraphCodeInstance& i) {
        const auto v = verify_proposition(i);
        py::dict out;
        out["holds"] = v.holds;
        out["code_dimension"] = v.code_dimension;
        out["homology_dimension"] = v.homology_dimension;
        out["witness"] = v.witness ? py::object(py::str(v.witness->to_string())) : py::object(py::none());
        out["detail"] = v.detail;
        return out;
    });
    m.def(
        "report_json",
        [](const GraphCodeInstance& i, std::size_t cap, unsigned workers) {
            std::string s;
            {
                py::gil_scoped_release release;
                s = make_report(i, {cap, workers}).dump(2);
            }
            return s;
        },
        py::arg("instance"), py::arg("max_bruteforce_dim") = 26, py::arg("workers") = 1);

    m.def("rate_bound", [](std::int64_t p, std::int64_t q) { return text(rate_bound(Rational(p, q))); });
    m.def("distance_bound", [](std::int64_t dp, std::int64_t dq, std::int64_t lambda, std::int64_t d) {
        return text(distance_bound(Rational(dp, dq), Rational(lambda), d));
    });
    m.def("distance_bound_float",
          [](double delta, double lambda, std::size_t d) { return distance_bound(delta, lambda, d); });
}
