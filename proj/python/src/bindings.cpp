#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "pantsgraph/errors.hpp"
#include "pantsgraph/io.hpp"
#include "pantsgraph/normalization.hpp"
#include "pantsgraph/rigid_sets.hpp"
#include "pantsgraph/verify.hpp"

namespace py = pybind11;
using namespace pantsgraph;

namespace {

// JSON crosses the boundary as text; the json module does the rest.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& o) {
    return parse_json(py::module_::import("json").attr("dumps")(o).cast<std::string>(), "argument");
}

ChordId chord(int n, const std::pair<int, int>& c) { return ChordId(n, c.first, c.second); }

py::list chord_list(const std::vector<ChordId>& cs) {
    py::list out;
    for (const auto& c : cs) out.append(py::make_tuple(c.i(), c.j()));
    return out;
}

PantsDecomposition pants(const py::handle& o, int n = 0) { return pants_from_json(from_py(o), n); }

}  // namespace

PYBIND11_MODULE(_pantsgraph, m) {
    m.doc() = "Pants graphs of punctured spheres: Z_n, X_5, X_n and their exhaustion";

    static py::exception<Error> base(m, "PantsGraphError");
    static py::exception<Error> budget(m, "BudgetExceeded", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            auto& target = e.kind() == ErrorKind::BudgetExceeded ? budget : base;
            py::object exc = py::reinterpret_borrow<py::object>(target.ptr())(e.what());
            exc.attr("kind") = to_string(e.kind());
            PyErr_SetObject(target.ptr(), exc.ptr());
        }
    });

    m.def("gamma_family", [](int n) { return chord_list(gamma_family(n)); }, py::arg("n"));
    m.def("chain_curves", [](int n) { return chord_list(chain_curves(n)); }, py::arg("n"));

    py::class_<Curve>(m, "Curve")
        .def_static("from_chord", [](int n, std::pair<int, int> c) { return Curve::from_chord(sphere_model(n), chord(n, c)); },
                    py::arg("n"), py::arg("chord"))
        .def_static("from_coords", [](int n, const std::vector<int>& x) { return Curve::from_coords(sphere_model(n), x); },
                    py::arg("n"), py::arg("coords"))
        .def_static("from_word", [](int n, const std::vector<int>& w) { return curve_from_json(n, Json{{"word", w}}); },
                    py::arg("n"), py::arg("word"))
        .def_property_readonly("n", &Curve::n)
        .def_property_readonly("coords", [](const Curve& c) { return c.coords(); })
        .def_property_readonly("word", [](const Curve& c) { return c.word(); })
        .def("__eq__", [](const Curve& a, const Curve& b) { return a == b; })
        .def("__hash__", [](const Curve& c) { return py::hash(py::tuple(py::cast(c.coords()))); })
        .def("__repr__", [](const Curve& c) { return "Curve(n=" + std::to_string(c.n()) + ", coords=" + to_json(c)["coords"].dump() + ")"; });

    m.def("intersection_number", &intersection_number, py::arg("a"), py::arg("b"));

    py::class_<MappingClassWord>(m, "Word")
        .def(py::init([](int n, const py::handle& gens) { return word_from_json(n, from_py(gens)); }), py::arg("n"),
             py::arg("gens"))
        .def_static("half_twist", [](int n, std::pair<int, int> c, int sign) { return MappingClassWord(n, {half_twist(chord(n, c), sign)}); },
                    py::arg("n"), py::arg("chain"), py::arg("sign") = 1)
        .def_static("dehn_twist", [](int n, std::pair<int, int> c, int sign) { return dehn_twist_word(n, chord(n, c), sign); },
                    py::arg("n"), py::arg("chord"), py::arg("sign") = 1)
        .def_static("rotation", &rotation_word, py::arg("n"), py::arg("sign") = 1)
        .def_static("involution_e", []() { return involution_e_word(5); })
        .def_property_readonly("n", &MappingClassWord::n)
        .def("__len__", [](const MappingClassWord& w) { return w.gens().size(); })
        .def("__mul__", [](const MappingClassWord& a, const MappingClassWord& b) { return compose(b, a); },
             "a * b applies b first")
        .def("inverse", &invert)
        .def("__call__", [](const MappingClassWord& w, const Curve& c) { return apply(w, c); })
        .def("apply_pants", [](const MappingClassWord& w, const py::handle& p) { return to_py(to_json(apply(w, pants(p, w.n())))); })
        .def("to_json", [](const MappingClassWord& w) { return to_py(to_json(w)); })
        .def("__repr__", [](const MappingClassWord& w) { return "Word(n=" + std::to_string(w.n()) + ", " + to_json(w).dump() + ")"; });

    py::class_<PantsGraphFragment>(m, "Fragment")
        .def_property_readonly("n", &PantsGraphFragment::n)
        .def_property_readonly("num_vertices", &PantsGraphFragment::num_vertices)
        .def_property_readonly("num_edges", &PantsGraphFragment::num_edges)
        .def("edges", &PantsGraphFragment::edges)
        .def("vertex", [](const PantsGraphFragment& g, int v) {
            if (v < 0 || v >= static_cast<int>(g.num_vertices())) throw py::index_error("vertex id out of range");
            return to_py(to_json(g.vertex(v)));
        })
        .def("find", [](const PantsGraphFragment& g, const py::handle& p) { return g.find(pants(p, g.n())); })
        .def("__contains__", [](const PantsGraphFragment& g, const py::handle& p) { return g.contains(pants(p, g.n())); })
        .def("to_json", [](const PantsGraphFragment& g) { return to_py(to_json(g)); })
        .def("to_dot", [](const PantsGraphFragment& g, const std::string& name) { return to_dot(g, name); }, py::arg("name") = "G")
        .def("__repr__", [](const PantsGraphFragment& g) {
            std::ostringstream os;
            os << "Fragment(n=" << g.n() << ", vertices=" << g.num_vertices() << ", edges=" << g.num_edges() << ")";
            return os.str();
        });

    m.def("build_zn", [](int n) { return build_Zn(n); }, py::arg("n"));
    m.def("build_x5", &build_X5);
    m.def("build_xn", &build_X, py::arg("n"), "X_5 for n = 5, X_n for n >= 6");
    m.def("exhaustion", [](int n, int steps, std::optional<std::uint64_t> budget) {
        std::vector<PantsGraphFragment> out;
        for (auto& s : exhaustion_sequence(n, steps, budget ? *budget : budget_from_env())) out.push_back(std::move(s.fragment));
        return out;
    }, py::arg("n"), py::arg("steps"), py::arg("budget") = py::none(), py::call_guard<py::gil_scoped_release>());
    m.def("adjacent", [](const py::handle& a, const py::handle& b) { return adjacent(pants(a), pants(b)); });

    m.def("normalize_vertex", [](const py::handle& p, int n) { return to_py(normalization_json(pants(p, n))); },
          py::arg("pants"), py::arg("n") = 0);
    m.def("normalize_edge", [](const py::handle& p1, const py::handle& p2, int n) {
        const auto a = pants(p1, n), b = pants(p2, n);
        if (!adjacent(a, b)) throw Error(ErrorKind::NotAdjacent, "p1 and p2 do not differ by an elementary move");
        return to_py(to_json(normalize_edge(a, b)));
    }, py::arg("p1"), py::arg("p2"), py::arg("n") = 0);

    m.def("farey_exhaustion", [](int steps) {
        py::list out;
        for (const auto& g : farey_exhaustion(standard_triangle(), steps)) out.append(to_py(to_json(g)));
        return out;
    }, py::arg("steps"));

    auto report = [](const VerificationReport& r) { return to_py(r.to_json()); };
    m.def("verify_all", [](int n, std::uint64_t seed, int trials, int max_word) { return to_py(to_json(verify_all(n, seed, trials, max_word))); },
          py::arg("n"), py::arg("seed") = 7, py::arg("trials") = 500, py::arg("max_word") = 6);
    m.def("verify_z5_pentagon", [report]() { return report(verify_z5_pentagon()); });
    m.def("verify_x5_shape", [report]() { return report(verify_x5_shape()); });
    m.def("verify_overlap_n5", [report](std::pair<int, int> a, int sign) { return report(verify_overlap_n5(chord(5, a), sign)); },
          py::arg("alpha"), py::arg("sign") = 1);
    m.def("verify_restriction_iso", [report](int n, std::pair<int, int> a) { return report(verify_restriction_iso(n, chord(n, a))); },
          py::arg("n"), py::arg("alpha"));
    m.def("verify_overlap_contains", [report](int n, std::pair<int, int> a, int sign) {
        return report(verify_overlap_contains(n, chord(n, a), sign));
    }, py::arg("n"), py::arg("alpha"), py::arg("sign") = 1);
    m.def("verify_orbit_cover", [report](int n, int trials, int max_word, std::uint64_t seed) {
        return report(verify_orbit_cover(n, trials, max_word, seed));
    }, py::arg("n"), py::arg("trials") = 500, py::arg("max_word") = 6, py::arg("seed") = 7);
    m.def("verify_farey", [report]() { return report(verify_farey()); });
}
