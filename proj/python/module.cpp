#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unavoidable/dk.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/fk.hpp"
#include "unavoidable/io.hpp"
#include "unavoidable/ramsey.hpp"
#include "unavoidable/tournament_analysis.hpp"
#include "unavoidable/transitivize.hpp"

namespace py = pybind11;
using namespace unav;

PYBIND11_MODULE(_unavoidable, m) {
    m.doc() = "Unavoidable patterns in dense 2-colorings and far-from-transitive tournaments";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<BudgetError>(m, "BudgetError");

    py::enum_<Color>(m, "Color")
        .value("RED", Color::Red)
        .value("BLUE", Color::Blue);

    py::class_<ColoredCompleteGraph>(m, "ColoredCompleteGraph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &ColoredCompleteGraph::n)
        .def("is_red", &ColoredCompleteGraph::is_red)
        .def("set_color", &ColoredCompleteGraph::set_color)
        .def("degree", &ColoredCompleteGraph::degree)
        .def("__eq__", [](const ColoredCompleteGraph& a, const ColoredCompleteGraph& b) { return a == b; });

    py::class_<Tournament>(m, "Tournament")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Tournament::n)
        .def("arc", &Tournament::arc)
        .def("orient", &Tournament::orient)
        .def("outdeg", &Tournament::outdeg)
        .def("indeg", &Tournament::indeg)
        .def("__eq__", [](const Tournament& a, const Tournament& b) { return a == b; });

    py::class_<FkWitness> fkw(m, "FkWitness");
    py::enum_<FkWitness::Variant>(fkw, "Variant")
        .value("ONE_CLIQUE", FkWitness::Variant::OneClique)
        .value("TWO_CLIQUES", FkWitness::Variant::TwoCliques);
    fkw.def(py::init<>())
        .def_readwrite("a_set", &FkWitness::a_set)
        .def_readwrite("b_set", &FkWitness::b_set)
        .def_readwrite("color", &FkWitness::color)
        .def_readwrite("variant", &FkWitness::variant);

    py::class_<DkWitness>(m, "DkWitness")
        .def(py::init<>())
        .def_readwrite("u0", &DkWitness::u0)
        .def_readwrite("u1", &DkWitness::u1)
        .def_readwrite("u2", &DkWitness::u2);

    py::class_<Density>(m, "Density")
        .def_readonly("count", &Density::count)
        .def_readonly("total", &Density::total)
        .def("to_double", &Density::to_double);

    py::class_<Ratio>(m, "Ratio")
        .def(py::init<long long, long long>())
        .def_static("parse", &Ratio::parse)
        .def_readonly("num", &Ratio::num)
        .def_readonly("den", &Ratio::den)
        .def("to_double", &Ratio::to_double);

    // core structures
    m.def("random_coloring", &random_coloring, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
    m.def("make_dk", &make_dk, py::arg("k"));
    m.def("make_layered", &make_layered, py::arg("d"), py::arg("k"));
    m.def("color_density", &color_density);
    m.def("verify_fk_witness", &verify_fk_witness);
    m.def("verify_dk_witness", &verify_dk_witness);
    m.def("serialize_coloring", [](const ColoredCompleteGraph& g) { return serialize(g); });
    m.def("serialize_tournament", [](const Tournament& t) { return serialize(t); });
    m.def("parse_coloring", &parse_coloring);
    m.def("parse_tournament", &parse_tournament);

    // searches
    m.def("find_mono_clique", [](const ColoredCompleteGraph& g, int k) -> py::object {
        auto w = find_mono_clique(g, k);
        if (!w) return py::none();
        return py::make_tuple(w->vertices, w->color);
    });
    m.def("find_transitive_subtournament", [](const Tournament& t, int k) -> py::object {
        auto w = find_transitive_subtournament(t, k);
        if (!w) return py::none();
        return py::cast(w->vertices);
    });

    // fk pipeline
    m.def("bidegree_core", &bidegree_core);
    m.def(
        "find_fk",
        [](const ColoredCompleteGraph& g, int k, const Ratio& eps, uint64_t seed) -> py::object {
            FkConfig cfg;
            cfg.seed = seed;
            auto rep = find_fk(g, k, eps, cfg);
            if (!rep.witness) return py::none();
            return py::cast(*rep.witness);
        },
        py::arg("g"), py::arg("k"), py::arg("eps"), py::arg("seed") = 0);
    m.def("fk_oracle", [](const ColoredCompleteGraph& g, int k) -> py::object {
        auto w = fk_oracle(g, k);
        if (!w) return py::none();
        return py::cast(*w);
    });

    // tournament analysis
    m.def("count_directed_triangles", &count_directed_triangles);
    m.def("triangles_through_vertex", &triangles_through_vertex);
    m.def("transitivity_distance_exact",
          [](const Tournament& t) { return transitivity_distance_exact(t).distance; });
    m.def("packing_lower_bound", &packing_lower_bound, py::arg("t"), py::arg("seed") = 0);
    m.def("upper_bound_distance",
          [](const Tournament& t) { return upper_bound_distance(t).distance; });

    // transitivize
    m.def("transitivize", [](const Tournament& t) {
        auto r = transitivize(t);
        py::dict d;
        d["order"] = r.order;
        d["reversed_edges"] = r.reversed_edges;
        d["certified_bound"] = r.certified_bound;
        d["triangles"] = r.triangles;
        return d;
    });
    m.def("verify_transitive", &verify_transitive);

    // dk pipeline
    m.def(
        "find_dk",
        [](const Tournament& t, int k, uint64_t seed) -> py::object {
            DkConfig cfg;
            cfg.seed = seed;
            auto rep = find_dk(t, k, cfg);
            if (!rep.witness) return py::none();
            return py::cast(*rep.witness);
        },
        py::arg("t"), py::arg("k"), py::arg("seed") = 0);
    m.def("dk_oracle", [](const Tournament& t, int k) -> py::object {
        auto w = dk_oracle(t, k);
        if (!w) return py::none();
        return py::cast(*w);
    });
}
