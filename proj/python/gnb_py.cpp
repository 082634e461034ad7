#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gnb/bounds.hpp"
#include "gnb/cli.hpp"
#include "gnb/clique_cover.hpp"
#include "gnb/design.hpp"
#include "gnb/errors.hpp"
#include "gnb/gf.hpp"
#include "gnb/guessing.hpp"
#include "gnb/io.hpp"
#include "gnb/named_graphs.hpp"

namespace py = pybind11;
using namespace gnb;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side turns them into Fractions.
py::dict evaluation_dict(const Rational& p, const BigInt& wins, const GuessingNumber& gn) {
    py::dict d;
    d["probability"] = to_string(p);
    d["wins"] = py::int_(py::str(wins.str()));
    d["gn"] = gn.exact ? py::object(py::str(to_string(*gn.exact))) : py::object(py::float_(gn.decimal));
    return d;
}

py::list cover_list(const FractionalCover& c) {
    py::list out;
    for (std::size_t i = 0; i < c.cliques.size(); ++i) out.append(py::make_tuple(c.cliques[i], to_string(c.weights[i])));
    return out;
}

std::vector<std::vector<std::size_t>> design_blocks(const Design& d) {
    std::vector<std::vector<std::size_t>> out;
    for (auto b : d.blocks) out.push_back(points_of(b));
    return out;
}

Design named_design(const std::string& name) {
    if (name == "s-3-6-22") return build_s_3_6_22();
    if (name == "s-4-7-23") return derive(build_s_5_8_24(), 23);
    if (name == "s-5-8-24") return build_s_5_8_24();
    throw InvalidInput("unknown design '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_gnb, m) {
    m.doc() = "Certified bounds on guessing numbers of graphs";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<ConstructionFault>(m, "ConstructionFault", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def("__len__", &Graph::size)
        .def_property_readonly("n", &Graph::size)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbor_list)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("builtin_graph", &builtin_graph, py::arg("name"));
    m.def("builtin_graph_names", &builtin_graph_names);
    m.def("load_graph", &resolve_graph, py::arg("spec"), "Builtin name or DIMACS/JSON file");
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("uniform_blowup", &uniform_blowup, py::arg("g"), py::arg("t"));
    m.def("is_triangle_free", &is_triangle_free);
    m.def("srg_parameters", [](const Graph& g) -> std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> {
        auto s = check_srg(g);
        if (!s.params) return std::nullopt;
        return std::make_tuple(s.params->n, s.params->k, s.params->lambda, s.params->mu);
    });
    m.def(
        "independent_set",
        [](const Graph& g, std::optional<std::size_t> target, std::uint64_t budget) {
            auto w = independent_set_witness(g, target.value_or(g.size()), SearchBudget{budget});
            return py::make_tuple(w.vertices, to_string(w.method), w.reached_target);
        },
        py::arg("g"), py::arg("target") = py::none(), py::arg("budget") = 10'000'000);

    m.def(
        "rank",
        [](const Graph& g, std::uint32_t q, std::int64_t shift) { return rank(adjacency_shifted(g, q, shift)); },
        py::arg("g"), py::arg("q"), py::arg("shift") = 1, "Rank of A + shift*I over Z_q");
    m.def(
        "row_space_basis",
        [](const Graph& g, std::uint32_t q, std::int64_t shift) { return row_space_basis(adjacency_shifted(g, q, shift)); },
        py::arg("g"), py::arg("q"), py::arg("shift") = 1);
    m.def(
        "verify_spanning_set",
        [](const Graph& g, std::uint32_t q, std::int64_t shift, const std::vector<RowVector>& rows) {
            return verify_spanning_set(adjacency_shifted(g, q, shift), rows);
        },
        py::arg("g"), py::arg("q"), py::arg("shift"), py::arg("rows"));

    m.def(
        "kappa_f",
        [](const Graph& g, const std::string& method) {
            KappaMethod km = method == "lp" ? KappaMethod::Lp : method == "matching" ? KappaMethod::Matching
                                                                                     : KappaMethod::Auto;
            if (method != "lp" && method != "matching" && method != "auto")
                throw InvalidInput("method must be auto, lp or matching");
            auto k = kappa_f(g, km);
            return py::make_tuple(to_string(k.value), cover_list(k.cover));
        },
        py::arg("g"), py::arg("method") = "auto");

    m.def("design_blocks", [](const std::string& name) { return design_blocks(named_design(name)); }, py::arg("name"));
    m.def("verify_steiner", [](std::size_t v, std::size_t t, std::size_t k, const std::vector<std::vector<std::size_t>>& blocks) {
        Design d{v, t, k, {}};
        for (const auto& b : blocks) d.blocks.push_back(point_set(b));
        return verify_steiner(d).ok;
    });

    m.def(
        "eval_strategy",
        [](const Graph& g, std::uint32_t s, std::vector<std::vector<Symbol>> tables, unsigned threads) {
            GuessingGame game(g, s);
            EvalOptions opts;
            opts.threads = threads;
            auto e = eval_strategy(game, Strategy(game, std::move(tables)), opts);
            return evaluation_dict(e.probability, e.wins, e.gn);
        },
        py::arg("g"), py::arg("s"), py::arg("tables"), py::arg("threads") = 1);
    m.def(
        "exhaustive_optimal",
        [](const Graph& g, std::uint32_t s, bool symmetry, unsigned threads) {
            SearchOptions opts;
            opts.symmetry = symmetry;
            opts.threads = threads;
            SearchResult r;
            {
                py::gil_scoped_release release;
                r = exhaustive_optimal(GuessingGame(g, s), opts);
            }
            auto d = evaluation_dict(r.probability, r.wins, r.gn);
            d["tables"] = r.strategy.tables();
            return d;
        },
        py::arg("g"), py::arg("s"), py::arg("symmetry") = true, py::arg("threads") = 1);
    m.def(
        "clique_cover_strategy",
        [](const Graph& g, std::uint32_t base) {
            auto cover = regularize_cover(g, kappa_f(g).cover);
            auto cs = clique_cover_strategy(g, cover, base);
            return py::make_tuple(cs.game.s(), cs.strategy.tables());
        },
        py::arg("g"), py::arg("base") = 2, "Strategy from an optimal regular fractional clique cover");

    m.def(
        "bounds_report",
        [](const Graph& g, const std::string& graph_id) { return report_to_json(bounds_report(g, graph_id)).dump(); },
        py::arg("g"), py::arg("graph_id") = "graph");
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
