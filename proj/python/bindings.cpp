#include "signed_inertia/cli.hpp"
#include "signed_inertia/crossing.hpp"
#include "signed_inertia/explorer.hpp"
#include "signed_inertia/io.hpp"
#include "signed_inertia/laplacian.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace signed_inertia;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::tuple inertia_tuple(const Inertia& i) { return py::make_tuple(i.n_plus, i.n_minus, i.n_zero); }

py::list fractions(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& r : v) out.append(fraction(r));
    return out;
}

WeightedSignedGraph make_graph(int n, const std::vector<std::tuple<int, int, py::object>>& edges) {
    std::vector<WeightedSignedGraph::WeightedEdge> list;
    for (const auto& [u, v, w] : edges) list.push_back({u, v, rational(w)});
    return WeightedSignedGraph::from_edges(n, list);
}

py::list edge_list(const WeightedSignedGraph& g) {
    py::list out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.graph().edges()[i];
        out.append(py::make_tuple(e.u, e.v, fraction(g.weight(i))));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Laplacian inertia of weighted signed graphs";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<WeightedSignedGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_static("parse", &parse_graph, py::arg("text"))
        .def_static("read", &read_graph_file, py::arg("path"))
        .def("to_text", &format_graph)
        .def_property_readonly("n", &WeightedSignedGraph::order)
        .def_property_readonly("edges", &edge_list)
        .def("profile",
             [](const WeightedSignedGraph& g) {
                 const auto p = component_profile(g.graph());
                 py::dict d;
                 d["c"] = p.c;
                 d["c_plus"] = p.c_plus;
                 d["c_minus"] = p.c_minus;
                 d["tau"] = p.tau;
                 return d;
             })
        .def(
            "inertia", [](const WeightedSignedGraph& g, const py::object& t) { return inertia_tuple(inertia(gamma_t(g, rational(t)))); },
            py::arg("t") = 1)
        .def("crossing_polynomial",
             [](const WeightedSignedGraph& g, const std::string& method) {
                 if (method == "forest") return fractions(crossing_poly_forest(g).polynomial().coefficients());
                 if (method == "charpoly") return fractions(crossing_poly_charpoly(g).coefficients());
                 throw PreconditionError("method must be forest or charpoly");
             },
             py::arg("method") = "forest", "Coefficients, constant term first.")
        .def("crossings",
             [](const WeightedSignedGraph& g) {
                 py::list out;
                 for (const auto& c : crossing_profile(g).crossings) {
                     py::dict d;
                     d["interval"] = py::make_tuple(fraction(c.interval.lo), fraction(c.interval.hi));
                     d["multiplicity"] = c.multiplicity;
                     d["exact"] = c.exact ? fraction(*c.exact) : py::none();
                     out.append(d);
                 }
                 return out;
             })
        .def("sweep",
             [](const WeightedSignedGraph& g) {
                 py::list out;
                 for (const auto& p : inertia_sweep(g)) {
                     out.append(py::make_tuple(fraction(p.t), inertia_tuple(p.inertia), p.on_crossing));
                 }
                 return out;
             })
        .def("unique_inertia",
             [](const WeightedSignedGraph& g) -> py::object {
                 const auto u = unique_inertia(g.graph());
                 return u ? py::object(inertia_tuple(*u)) : py::none();
             })
        .def("blocks",
             [](const WeightedSignedGraph& g) {
                 py::list out;
                 for (const auto& b : blocks(g.graph())) out.append(b.vertices);
                 return out;
             })
        .def("is_simple_spectrum", &is_simple_spectrum)
        .def("eigenvalues", [](const WeightedSignedGraph& g) { return eigenvalues_float(g); })
        .def(
            "perturb_simple",
            [](const WeightedSignedGraph& g, const py::object& eps, std::uint64_t seed) {
                PerturbOptions o;
                o.seed = seed;
                return perturb_simple(g, rational(eps), o);
            },
            py::arg("eps"), py::arg("seed") = 0)
        .def(
            "explore",
            [](const WeightedSignedGraph& g, long budget, std::uint64_t seed) {
                const auto set = explore(g.graph(), {budget, seed});
                py::dict out;
                for (const auto& [i, w] : set.achieved) {
                    out[inertia_tuple(i)] = py::make_tuple(w.weighting, fraction(w.t), w.strategy);
                }
                return out;
            },
            py::arg("budget") = 5000, py::arg("seed") = 0, "Maps inertia -> (witness graph, t, strategy).")
        .def("bounds",
             [](const WeightedSignedGraph& g) {
                 const auto b = inertia_bounds(g.graph());
                 return py::make_tuple(py::make_tuple(b.n_plus.lo, b.n_plus.hi), py::make_tuple(b.n_minus.lo, b.n_minus.hi),
                                       py::make_tuple(b.n_zero.lo, b.n_zero.hi));
             })
        .def("excluded_by_rank",
             [](const WeightedSignedGraph& g) {
                 py::set out;
                 for (const auto& i : impossibility_by_rank(g.graph())) out.add(inertia_tuple(i));
                 return out;
             })
        .def("lattice_capacity", [](const WeightedSignedGraph& g) { return lattice_capacity(g.graph()); })
        .def("__eq__", [](const WeightedSignedGraph& a, const WeightedSignedGraph& b) { return a == b; })
        .def("__repr__", [](const WeightedSignedGraph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("dot", py::overload_cast<const WeightedSignedGraph&, Vertex, const WeightedSignedGraph&, Vertex>(&dot),
          py::arg("a"), py::arg("va"), py::arg("b"), py::arg("vb"));
    m.def("scale_negative", [](const WeightedSignedGraph& g, const py::object& r) { return scale_negative(g, rational(r)); });
    m.def("gamma_t", [](const WeightedSignedGraph& g, const py::object& t) { return gamma_t(g, rational(t)); });
    m.def("mixed_triangle", &mixed_triangle);
    m.def("build_lattice_witness", &build_lattice_witness, py::arg("k"), py::arg("a"), py::arg("b"));
    m.def("negative_join", [](int p, int q) {
        // Unit-weighted K_p v- K_q with positive cliques.
        auto clique = [](int k) {
            std::vector<SignedEdge> e;
            for (int u = 1; u <= k; ++u) {
                for (int v = u + 1; v <= k; ++v) e.push_back({u, v, Sign::positive});
            }
            return SignedGraph(k, e);
        };
        return WeightedSignedGraph::unit(negative_join(clique(p), clique(q)));
    });
    m.def("vertex_count_capacity", &vertex_count_capacity);
    m.def("max_flexibility", &max_flexibility);
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
