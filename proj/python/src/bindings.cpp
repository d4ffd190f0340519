#include <memory>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohoc/criteria.hpp"
#include "cohoc/documents.hpp"
#include "cohoc/errors.hpp"
#include "cohoc/fixtures.hpp"
#include "cohoc/parser.hpp"

namespace py = pybind11;
using namespace cohoc;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<int64_t> ints_to_int64(const std::vector<Int>& v) {
    std::vector<int64_t> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(x.convert_to<int64_t>());
    return out;
}

// Python-side ring handle: owns its presentation so morphisms can point at it.
struct PyRing {
    std::shared_ptr<Presentation> p;

    const Presentation& ring() const { return *p; }
};

PyRing make_ring(uint32_t p, const std::vector<std::pair<std::string, int64_t>>& gens,
                 const std::vector<std::string>& relations) {
    std::vector<GeneratorInfo> gis;
    gis.reserve(gens.size());
    for (const auto& [name, degree] : gens) gis.push_back({name, degree});
    return {std::make_shared<Presentation>(make_presentation(p, gis, relations))};
}

PyRing ring_fixture(const std::string& name) {
    const Presentation* p = fixtures::find_ring(name);
    if (p == nullptr) throw IoError("unknown fixture ring \"" + name + "\"");
    return {std::make_shared<Presentation>(*p)};
}

PyRing ring_load(const std::string& path) {
    return {std::make_shared<Presentation>(from_document(load_presentation_document(path)))};
}

struct PyMorphism {
    std::shared_ptr<Presentation> source, target;
    RingMorphism m;
};

PyMorphism make_py_morphism(const PyRing& source, const PyRing& target,
                            const std::vector<std::string>& images) {
    PyMorphism out{source.p, target.p, {}};
    out.m = make_morphism(*out.source, *out.target, images);
    return out;
}

PyMorphism morphism_fixture(const std::string& name) {
    const RingMorphism* m = fixtures::find_morphism(name);
    if (m == nullptr) throw IoError("unknown fixture morphism \"" + name + "\"");
    PyMorphism out{std::make_shared<Presentation>(*m->source),
                   std::make_shared<Presentation>(*m->target),
                   {}};
    out.m = *m;
    out.m.source = out.source.get();
    out.m.target = out.target.get();
    return out;
}

ParameterSet params_of(const PyRing& r, const std::vector<std::string>& exprs) {
    return make_parameter_set(r.ring(), exprs);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "completeness criteria for graded ring approximations";

    py::register_exception<Error>(mod, "CohocError");

    py::class_<PyRing>(mod, "Ring")
        .def(py::init(&make_ring), py::arg("p"), py::arg("generators"),
             py::arg("relations"))
        .def_static("fixture", &ring_fixture, py::arg("name"))
        .def_static("load", &ring_load, py::arg("path"))
        .def_property_readonly("characteristic",
                               [](const PyRing& r) { return r.ring().field.p; })
        .def("generators",
             [](const PyRing& r) {
                 std::vector<std::pair<std::string, int64_t>> out;
                 for (const GeneratorInfo& g : r.ring().gens)
                     out.emplace_back(g.name, g.degree);
                 return out;
             })
        .def("relations",
             [](const PyRing& r) {
                 std::vector<std::string> out;
                 for (const Poly& rel : r.ring().relations)
                     out.push_back(print_element(rel, r.ring()));
                 return out;
             })
        .def("poincare_series",
             [](const PyRing& r) { return hs_print(poincare_series(r.ring())); })
        .def("hilbert",
             [](const PyRing& r, int64_t bound) {
                 return ints_to_int64(expand(poincare_series(r.ring()), bound));
             },
             py::arg("bound"))
        .def("dim", [](const PyRing& r) { return krull_dimension(r.ring()); })
        .def("normal_form",
             [](const PyRing& r, const std::string& expr) {
                 GroebnerBasis gb = groebner_basis(r.ring());
                 return print_element(normal_form(parse_element(expr, r.ring()), gb),
                                      r.ring());
             },
             py::arg("expr"))
        .def("leading_monomials",
             [](const PyRing& r) {
                 GroebnerBasis gb = groebner_basis(r.ring());
                 std::vector<std::string> out;
                 for (const Monomial& m : leading_ideal(gb).gens)
                     out.push_back(print_monomial(m, r.ring()));
                 return out;
             })
        .def("is_hsop",
             [](const PyRing& r, const std::vector<std::string>& exprs) {
                 HsopResult h = is_hsop(r.ring(), params_of(r, exprs));
                 return py::make_tuple(h.is_hsop, h.reason);
             },
             py::arg("params"))
        .def("is_regular_sequence",
             [](const PyRing& r, const std::vector<std::string>& exprs) {
                 RegularResult res = is_regular_sequence(r.ring(), params_of(r, exprs));
                 return py::make_tuple(res.regular, res.first_failing);
             },
             py::arg("params"))
        .def("filter_regular_report",
             [](const PyRing& r, const std::vector<std::string>& exprs) {
                 FilterRegularityReport fr =
                     filter_regular_report(r.ring(), params_of(r, exprs));
                 py::list steps;
                 for (const FilterStep& s : fr.steps)
                     steps.append(py::make_tuple(s.filter_regular, s.top_ann_degree));
                 return py::make_tuple(steps, fr.hsop, fr.sequence_filter_regular);
             },
             py::arg("params"))
        .def("pars_exist",
             [](const PyRing& r, const std::vector<std::string>& fixed, int64_t degree) {
                 ExistenceCertificate c =
                     pars_existence(r.ring(), params_of(r, fixed), degree);
                 return py::make_tuple(c.exists, c.new_parameter_count);
             },
             py::arg("fixed"), py::arg("degree"))
        .def("replacement_search",
             [](const PyRing& r, const std::vector<std::string>& exprs, size_t slot,
                int64_t max_degree) {
                 std::vector<std::string> out;
                 for (const Poly& f :
                      replacement_search(r.ring(), params_of(r, exprs), slot, max_degree))
                     out.push_back(print_element(f, r.ring()));
                 return out;
             },
             py::arg("params"), py::arg("slot"), py::arg("max_degree"));

    py::class_<PyMorphism>(mod, "Morphism")
        .def(py::init(&make_py_morphism), py::arg("source"), py::arg("target"),
             py::arg("images"))
        .def_static("fixture", &morphism_fixture, py::arg("name"))
        .def_property_readonly("validated",
                               [](const PyMorphism& m) { return m.m.validated; })
        .def_property_readonly(
            "first_failing_relation",
            [](const PyMorphism& m) { return m.m.first_failing_relation; })
        .def("validate",
             [](PyMorphism& m) {
                 validate_morphism(m.m);
                 return py::make_tuple(m.m.validated, m.m.first_failing_relation);
             })
        .def("apply",
             [](const PyMorphism& m, const std::string& expr) {
                 return print_element(apply(m.m, parse_element(expr, *m.source)),
                                      *m.target);
             },
             py::arg("expr"))
        .def("gendeg",
             [](const PyMorphism& m, bool force) {
                 GendegReport g = gendeg(m.m, force);
                 py::dict out;
                 out["finite"] = g.finite;
                 out["gendeg"] = g.gendeg;
                 out["hilbert"] = ints_to_int64(g.hilbert);
                 out["module_generator_degrees"] = g.module_generator_degrees;
                 return out;
             },
             py::arg("force") = false);

    mod.def("benson",
            [](const PyRing& r, const std::vector<std::string>& exprs) {
                ParameterSet ps = params_of(r, exprs);
                FilterRegularityReport fr = filter_regular_report(r.ring(), ps);
                return json_to_py(report_to_json(benson_threshold(ps.degrees, fr)));
            },
            py::arg("ring"), py::arg("params"));
    mod.def("symonds",
            [](const PyRing& r, const std::vector<std::string>& exprs, int64_t n) {
                return json_to_py(report_to_json(symonds_test(r.ring(), params_of(r, exprs), n)));
            },
            py::arg("ring"), py::arg("params"), py::arg("n"));
    mod.def("king_gen",
            [](const PyMorphism& m, int64_t n, bool force) {
                return json_to_py(report_to_json(king_gen(m.m, n, force)));
            },
            py::arg("morphism"), py::arg("n"), py::arg("force") = false);
    mod.def("king_rel",
            [](const PyRing& r, const std::vector<int64_t>& degrees, int64_t depth,
               int64_t n, bool surjective) {
                return json_to_py(report_to_json(
                    king_rel(poincare_series(r.ring()), degrees, depth, n, surjective)));
            },
            py::arg("ring"), py::arg("param_degrees"), py::arg("depth"), py::arg("n"),
            py::arg("surjective"));
    mod.def("compare_all",
            [](int64_t n_lo, int64_t n_hi, bool force) {
                ComparisonBundle b = fixtures::comparison_bundle(n_lo, n_hi);
                b.allow_unvalidated = force;
                py::list rows;
                for (const ComparisonRow& row : compare_all(b)) {
                    py::dict d;
                    d["name"] = row.name;
                    d["minimal_n"] = row.minimal_n;
                    d["report"] = json_to_py(report_to_json(row.report));
                    rows.append(d);
                }
                return rows;
            },
            py::arg("n_lo") = 0, py::arg("n_hi") = 50, py::arg("force") = false);

    mod.def("fixture_rings", [] { return fixtures::ring_names(); });
    mod.def("fixture_morphisms", [] { return fixtures::morphism_names(); });
}
