// Python bindings: the catalog, the combinatorial checks, interpolation, and
// the certificate machinery. Structured results cross the boundary as plain
// dicts/lists (built from the same JSON emitters the CLI uses), so the Python
// surface stays in lockstep with the file formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "seshadri/arrangement.hpp"
#include "seshadri/catalog.hpp"
#include "seshadri/certificates.hpp"
#include "seshadri/json_io.hpp"
#include "seshadri/linear_system.hpp"

namespace py = pybind11;
using namespace seshadri;

namespace {

py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
    }
}

Arrangement make_catalog(const std::string& name, std::optional<int> n, std::optional<int> d,
                         std::optional<int> k, std::optional<std::string> code) {
    CatalogParams params;
    params.n = n;
    params.d = d;
    params.k = k;
    params.code = std::move(code);
    return build_catalog(name, params);
}

Json check_report(const Arrangement& a) {
    Json checks = Json::array();
    auto push = [&](const std::string& name, bool applicable, bool passed,
                    const std::string& detail) {
        checks.push_back({{"name", name},
                          {"applicable", applicable},
                          {"passed", passed},
                          {"detail", detail}});
    };
    CheckResult eq = validate_combinatorics(a.comb);
    push("pairwise-count identity", true, eq.passed, eq.detail);
    if (a.has_geometry()) {
        CheckResult pc = per_curve_check(a);
        push("per-curve identity", true, pc.passed, pc.detail);
        GeometryReport geo = verify_geometry(a);
        std::string detail = geo.passed ? "incidences recomputed from coordinates"
                                        : geo.failures.front();
        push("geometric verification", true, geo.passed, detail);
    }
    InequalityResult hz = hirzebruch_check(a.comb);
    push("line-arrangement inequality", hz.applicable, hz.passed, hz.detail);
    InequalityResult pr = prsz_check(a.comb);
    push("curve-arrangement inequality", pr.applicable, pr.passed, pr.detail);

    bool all = true;
    for (const auto& c : checks)
        if (c.at("applicable").get<bool>() && !c.at("passed").get<bool>()) all = false;
    return Json{{"passed", all}, {"checks", checks}};
}

Json bounds_report(const Arrangement& a) {
    BoundResult b = theorem_lower_bound(a.comb);
    Rational eps = epsilon_config(a.comb);
    Json out{{"bound", to_string(b.bound)},
             {"hypotheses_met", b.hypotheses_met},
             {"note", b.note},
             {"epsilon_config", to_string(eps)}};
    out["satisfied"] = b.hypotheses_met ? Json(eps >= b.bound) : Json(nullptr);
    return out;
}

MultiplicityAssignment assignment_from(const Arrangement& a,
                                       const std::optional<std::vector<int>>& mults) {
    a.require_geometry("interpolate");
    MultiplicityAssignment asg;
    if (mults && mults->size() != a.points.size())
        fail(ErrorCode::invalid_spec, "expected one multiplicity per point (" +
                                          std::to_string(a.points.size()) + ")");
    for (size_t i = 0; i < a.points.size(); ++i)
        asg.push_back({a.points[i].point, mults ? (*mults)[i] : 1});
    return asg;
}

Json interpolate_report(const Arrangement& a, int degree,
                        const std::optional<std::vector<int>>& mults) {
    InterpolationResult r = interpolate(degree, assignment_from(a, mults), a.ctx);
    Json basis = Json::array();
    for (const auto& b : r.basis) basis.push_back(polynomial_to_json(b));
    return Json{{"degree", r.degree},     {"ambient", r.ambient},
                {"conditions", r.conditions}, {"rank", r.rank},
                {"dimension", r.dimension},   {"basis", basis}};
}

Json search_report(const Arrangement& a, int max_degree) {
    a.require_geometry("search");
    if (max_degree < 1 || max_degree > 2)
        fail(ErrorCode::invalid_spec, "max_degree must be 1 or 2");
    std::vector<ProjectivePoint> z;
    for (const auto& ip : a.points) z.push_back(ip.point);
    LineSearchResult lines = search_lines(z);
    Json out{{"line", {{"ratio", to_string(lines.best.ratio)},
                       {"mult_sum", lines.best.mult_sum},
                       {"mpl", lines.mpl},
                       {"candidates", lines.candidates.size()}}}};
    if (max_degree >= 2) {
        ConicSearchResult conics = search_conics(z);
        if (conics.found && conics.best)
            out["conic"] = Json{{"ratio", to_string(conics.best->ratio)},
                                {"mult_sum", conics.best->mult_sum},
                                {"candidates", conics.candidates.size()}};
        else
            out["conic"] = nullptr;
    }
    return out;
}

Json certify_report(const Arrangement& a, int max_degree) {
    SeshadriResult r = compute_seshadri(a, max_degree);
    return seshadri_result_to_json(a, r);
}

Json probe_report(const Arrangement& a, int max_degree) {
    SeshadriResult r = compute_seshadri(a, max_degree);
    NaiveEqualityReport p = naive_equality_probe(a, r);
    return Json{{"bs", p.bs},
                {"naive", to_string(p.naive)},
                {"epsilon", to_string(p.epsilon)},
                {"equal", p.equal},
                {"star_value", to_string(p.star_value)},
                {"star_naive_value", to_string(p.star_naive_value)}};
}

Json unique_member_report(const Arrangement& a) {
    UniqueMemberReport r = unique_member_check(a);
    return Json{{"ambient", r.ambient},     {"conditions", r.conditions},
                {"unique", r.unique},       {"certified", r.certified},
                {"dimension", r.dimension}, {"method", r.method},
                {"detail", r.detail}};
}

Json table_rows() {
    Json rows = Json::array();
    for (const auto& row : simplicial_rows()) {
        Arrangement a = catalog_simplicial(row.code);
        Json t = Json::object();
        for (const auto& [r, count] : row.t) t[std::to_string(r)] = count;
        rows.push_back({{"code", row.code},
                        {"k", row.k},
                        {"t", t},
                        {"epsilon_config", to_string(epsilon_config(a.comb))},
                        {"reported_epsilon", to_string(row.reported_epsilon)},
                        {"certified", row.certified}});
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arrangement invariants, interpolation, and Seshadri certificates";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Arrangement>(m, "Arrangement")
        .def_property_readonly("name", [](const Arrangement& a) { return a.name; })
        .def_property_readonly("d", [](const Arrangement& a) { return a.comb.d; })
        .def_property_readonly("k", [](const Arrangement& a) { return a.comb.k; })
        .def_property_readonly("t",
                               [](const Arrangement& a) {
                                   std::map<int, long long> t(a.comb.t.begin(), a.comb.t.end());
                                   return t;
                               })
        .def_property_readonly("has_geometry",
                               [](const Arrangement& a) { return a.has_geometry(); })
        .def_property_readonly("num_points",
                               [](const Arrangement& a) { return a.points.size(); })
        .def("__repr__", [](const Arrangement& a) {
            return "<Arrangement " + a.name + " d=" + std::to_string(a.comb.d) +
                   " k=" + std::to_string(a.comb.k) + ">";
        });

    m.def("catalog", &make_catalog, py::arg("name"), py::kw_only(), py::arg("n") = py::none(),
          py::arg("d") = py::none(), py::arg("k") = py::none(), py::arg("code") = py::none(),
          "Build a named catalog arrangement.");
    m.def("catalog_entries", &catalog_entries, "Catalog names with parameter summaries.");

    m.def("load_json",
          [](const std::string& text) { return arrangement_from_json(parse_text(text)); },
          py::arg("text"), "Parse an arrangement from its JSON text.");
    m.def("to_json",
          [](const Arrangement& a) { return arrangement_to_json(a).dump(2) + "\n"; },
          py::arg("arrangement"), "Serialize an arrangement to JSON text.");

    m.def("check", [](const Arrangement& a) { return to_py(check_report(a)); },
          py::arg("arrangement"), "Run the combinatorial and geometric consistency checks.");
    m.def("epsilon_config",
          [](const Arrangement& a) { return to_string(epsilon_config(a.comb)); },
          py::arg("arrangement"), "The configurational value dk/f1 as an exact fraction.");
    m.def("f_numbers",
          [](const Arrangement& a) {
              auto [f0, f1] = f_numbers(a.comb);
              return py::make_tuple(f0, f1);
          },
          py::arg("arrangement"), "(f0, f1) = (number of singular points, sum of r*t_r).");
    m.def("base_constant", [](const Arrangement& a) { return base_constant(a); },
          py::arg("arrangement"), "Maximal number of singular points on one member.");
    m.def("bounds", [](const Arrangement& a) { return to_py(bounds_report(a)); },
          py::arg("arrangement"), "The guaranteed lower bound 2/(4dk+3d-9) and its status.");

    m.def("interpolate",
          [](const Arrangement& a, int degree, const std::optional<std::vector<int>>& mults) {
              return to_py(interpolate_report(a, degree, mults));
          },
          py::arg("arrangement"), py::arg("degree"), py::kw_only(),
          py::arg("multiplicities") = py::none(),
          "Exact fat-point interpolation at the arrangement's singular points.");
    m.def("search",
          [](const Arrangement& a, int max_degree) { return to_py(search_report(a, max_degree)); },
          py::arg("arrangement"), py::arg("max_degree") = 2,
          "Best low-degree curves through the singular points.");

    m.def("certify",
          [](const Arrangement& a, int max_degree) { return to_py(certify_report(a, max_degree)); },
          py::arg("arrangement"), py::arg("max_degree") = 2,
          "Two-sided Seshadri estimate with a re-checkable certificate.");
    m.def("verify_certificate",
          [](const std::string& text) {
              CertificateCheck c = verify_certificate(parse_text(text));
              return py::make_tuple(c.ok, c.detail);
          },
          py::arg("text"), "Re-verify a stored certificate; returns (ok, detail).");
    m.def("naive_probe",
          [](const Arrangement& a, int max_degree) { return to_py(probe_report(a, max_degree)); },
          py::arg("arrangement"), py::arg("max_degree") = 2,
          "Compare the certified value against 1/bs.");
    m.def("unique_member",
          [](const Arrangement& a) { return to_py(unique_member_report(a)); },
          py::arg("arrangement"),
          "Is the product of the members the only curve in its linear system?");

    m.def("table", []() { return to_py(table_rows()); },
          "The 11-row table of simplicial arrangements with exact values.");
}
