#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arq/cli.hpp"
#include "arq/components.hpp"
#include "arq/derived.hpp"
#include "arq/errors.hpp"
#include "arq/io.hpp"
#include "arq/strings.hpp"

namespace py = pybind11;
using namespace arq;

namespace {

/// Converts a JSON document to native Python objects through the json module.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

/// Python-side handle on a built quiver.
struct PyQuiver {
    QuiverPtr q;

    Vertex vertex(const std::string& name) const { return q->vertex(name); }
};

/// Python-side handle on a representation.
struct PyRep {
    Rep m;
};

PyQuiver quiver_from_json(const std::string& text, const std::string& field) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ArqError("InvalidSpec", e.what());
    }
    return {build_quiver(spec_from_json(j), Field::parse(field))};
}

py::object translate(const PyRep& r, Direction d) {
    auto t = ar_translate(r.m, d);
    if (!t.value) return py::none();
    return py::cast(PyRep{named(*t.value)});
}

Side parse_side(const std::string& s) {
    if (s == "ending") return Side::EndingAt;
    if (s == "starting") return Side::StartingAt;
    throw ArqError("InvalidArgument", "side must be 'ending' or 'starting', got '" + s + "'");
}

Seed parse_seed(const PyQuiver& q, const std::string& seed, const std::optional<PyRep>& rep) {
    if (seed == "preprojective") return PreprojectiveSeed{};
    if (seed.rfind("preinjective", 0) == 0) {
        std::size_t k = 0;
        if (auto colon = seed.find(':'); colon != std::string::npos) k = std::stoul(seed.substr(colon + 1));
        return PreinjectiveSeed{k};
    }
    if (seed == "regular") {
        if (!rep) throw ArqError("BadSeed", "a regular seed needs a representation");
        return RegularSeed{rep->m};
    }
    throw ArqError("BadSeed", "unknown seed '" + seed + "'");
}

}  // namespace

PYBIND11_MODULE(_arq, m) {
    m.doc() = "Auslander-Reiten theory for representations of strongly locally finite quivers";

    static py::exception<ArqError> arq_error(m, "ArqError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ArqError& e) {
            py::object err = arq_error;
            py::object exc = err(e.what());
            exc.attr("name") = e.name();
            exc.attr("detail") = e.detail();
            PyErr_SetObject(arq_error.ptr(), exc.ptr());
        }
    });

    py::class_<PyQuiver>(m, "Quiver")
        .def_static(
            "from_file", [](const std::string& path, const std::string& field) {
                return PyQuiver{build_quiver(load_spec(path), Field::parse(field))};
            },
            py::arg("path"), py::arg("field") = "Q")
        .def_static("from_json", &quiver_from_json, py::arg("text"), py::arg("field") = "Q")
        .def("classify", [](const PyQuiver& q) { return classify_quiver(*q.q).to_string(); })
        .def("q_plus",
             [](const PyQuiver& q) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& c : q_plus(*q.q).components) {
                     std::vector<std::string> names;
                     for (const auto& v : c.members) names.push_back(q.q->vertex_name(v));
                     out.push_back(names);
                 }
                 return out;
             })
        .def("rep", [](const PyQuiver& q, const std::string& text) { return PyRep{named(parse_rep(q.q, text))}; },
             py::arg("text"))
        .def("census", [](const PyQuiver& q) { return to_py(to_json(regular_census(q.q))); })
        .def("sigma_chain",
             [](const PyQuiver& q, const std::string& side) {
                 auto [lo, hi] = default_range(q.q);
                 StringSide s = side == "L" ? StringSide::L : StringSide::R;
                 return render_sigma_chain(q.q, qr_ql_set(q.q, s, lo, hi));
             },
             py::arg("side") = "R")
        .def("component",
             [](const PyQuiver& q, const std::string& seed, std::size_t depth, std::optional<PyRep> rep) {
                 return to_py(to_json(knit_component(q.q, parse_seed(q, seed, rep), depth)));
             },
             py::arg("seed") = "preprojective", py::arg("depth") = 4, py::arg("rep") = py::none())
        .def("component_dot",
             [](const PyQuiver& q, const std::string& seed, std::size_t depth, std::optional<PyRep> rep) {
                 return export_dot(knit_component(q.q, parse_seed(q, seed, rep), depth));
             },
             py::arg("seed") = "preprojective", py::arg("depth") = 4, py::arg("rep") = py::none())
        .def("__repr__", [](const PyQuiver& q) { return "<arq.Quiver " + classify_quiver(*q.q).to_string() + ">"; });

    py::class_<PyRep>(m, "Rep")
        .def_property_readonly("name", [](const PyRep& r) { return r.m.name(); })
        .def_property_readonly("finite_dimensional", [](const PyRep& r) { return r.m.finite_dimensional(); })
        .def_property_readonly("total_dim", [](const PyRep& r) { return r.m.total_dim(); })
        .def("dim_at", [](const PyRep& r, const std::string& v) { return r.m.dim_at(r.m.quiver()->vertex(v)); })
        .def("is_indecomposable", [](const PyRep& r) { return is_indecomposable(r.m); })
        .def("is_isomorphic", [](const PyRep& a, const PyRep& b) { return is_isomorphic(a.m, b.m); })
        .def("tau", [](const PyRep& r) { return translate(r, Direction::DTr); })
        .def("tau_inverse", [](const PyRep& r) { return translate(r, Direction::TrD); })
        .def("almost_split",
             [](const PyRep& r, const std::string& side) -> py::object {
                 auto a = almost_split(r.m, parse_side(side));
                 if (!a.sequence) return py::none();
                 return to_py(to_json(*a.sequence));
             },
             py::arg("side") = "ending")
        .def("hom_ext",
             [](const PyRep& a, const PyRep& b) {
                 auto he = hom_ext_dims(a.m, b.m);
                 return std::make_pair(he.hom, he.ext);
             })
        .def("to_dict", [](const PyRep& r) { return to_py(to_json(r.m)); })
        .def("__repr__", [](const PyRep& r) { return "<arq.Rep " + r.m.name() + ">"; });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end and returns (exit code, stdout, stderr).");
}
