#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "seshadri/catalog.hpp"
#include "seshadri/json_io.hpp"
#include "seshadri/linear_system.hpp"

using namespace seshadri;

namespace {

// ---- shared plumbing -------------------------------------------------------

struct InputOptions {
    std::string file;
    std::string catalog;
    CatalogParams params;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* f = cmd->add_option("--file", in.file, "arrangement JSON file");
    auto* c = cmd->add_option("--catalog", in.catalog, "catalog entry (see `catalog list`)");
    f->excludes(c);
    c->excludes(f);
    cmd->add_option("--n", in.params.n, "catalog parameter n");
    cmd->add_option("--d", in.params.d, "catalog parameter d");
    cmd->add_option("--k", in.params.k, "catalog parameter k");
    cmd->add_option("--code", in.params.code, "simplicial table row code, e.g. A1(10)");
}

Arrangement resolve_input(const InputOptions& in) {
    if (!in.file.empty()) return load_arrangement(in.file);
    if (!in.catalog.empty()) return build_catalog(in.catalog, in.params);
    fail(ErrorCode::invalid_spec, "no input given: use --file PATH or --catalog NAME");
}

std::string t_to_string(const TVector& t) {
    int rmax = 2;
    for (const auto& [r, n] : t) rmax = std::max(rmax, r);
    std::string s = "(";
    for (int r = 2; r <= rmax; ++r) {
        if (r > 2) s += ",";
        auto it = t.find(r);
        s += std::to_string(it == t.end() ? 0 : it->second);
    }
    return s + ")";
}

Json t_to_json(const TVector& t) {
    Json j = Json::object();
    for (const auto& [r, n] : t) j[std::to_string(r)] = n;
    return j;
}

std::string field_description(const FieldContextPtr& ctx) {
    if (!ctx || ctx->is_rational_field()) return "Q";
    return "number field of degree " + std::to_string(ctx->degree());
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---- commands --------------------------------------------------------------

int cmd_check(const Arrangement& a, bool json) {
    struct Row {
        std::string name;
        bool applicable;
        bool passed;
        std::string detail;
    };
    std::vector<Row> rows;

    CheckResult comb = validate_combinatorics(a.comb);
    rows.push_back({"pairwise-count identity", true, comb.passed, comb.detail});
    if (a.has_geometry()) {
        CheckResult pc = per_curve_check(a);
        rows.push_back({"per-curve identity", true, pc.passed, pc.detail});
        GeometryReport geo = verify_geometry(a);
        std::string detail;
        if (geo.passed) {
            detail = "points, incidences and t-vector verified";
        } else {
            for (const auto& f : geo.failures) {
                if (!detail.empty()) detail += "; ";
                detail += f;
            }
        }
        rows.push_back({"geometric verification", true, geo.passed, detail});
    }
    InequalityResult h = hirzebruch_check(a.comb);
    rows.push_back({"line-arrangement inequality", h.applicable, h.passed, h.detail});
    InequalityResult p = prsz_check(a.comb);
    rows.push_back({"curve-arrangement inequality", p.applicable, p.passed, p.detail});

    bool all = true;
    for (const auto& r : rows)
        if (r.applicable && !r.passed) all = false;

    if (json) {
        Json j;
        j["name"] = a.name;
        j["d"] = a.comb.d;
        j["k"] = a.comb.k;
        j["t"] = t_to_json(a.comb.t);
        j["geometry"] = a.has_geometry();
        Json checks = Json::array();
        for (const auto& r : rows) {
            Json c;
            c["name"] = r.name;
            c["applicable"] = r.applicable;
            c["passed"] = r.passed;
            c["detail"] = r.detail;
            checks.push_back(c);
        }
        j["checks"] = checks;
        j["passed"] = all;
        emit(j);
    } else {
        std::cout << "check: " << a.name << " (d = " << a.comb.d << ", k = " << a.comb.k
                  << ", t = " << t_to_string(a.comb.t) << ")\n";
        for (const auto& r : rows) {
            const char* tag = !r.applicable ? "[n/a ]" : r.passed ? "[pass]" : "[FAIL]";
            std::cout << "  " << tag << " " << r.name;
            if (!r.detail.empty()) std::cout << ": " << r.detail;
            std::cout << "\n";
        }
        std::cout << "result: " << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_epsilon_config(const Arrangement& a, bool json) {
    Rational eps = epsilon_config(a.comb);
    if (json) {
        auto [f0, f1] = f_numbers(a.comb);
        Json j;
        j["name"] = a.name;
        j["d"] = a.comb.d;
        j["k"] = a.comb.k;
        j["f0"] = f0;
        j["f1"] = f1;
        j["epsilon_config"] = to_string(eps);
        emit(j);
    } else {
        std::cout << to_string(eps) << "\n";
    }
    return 0;
}

int cmd_bounds(const Arrangement& a, bool json) {
    BoundResult b = theorem_lower_bound(a.comb);
    Rational eps = epsilon_config(a.comb);
    bool satisfied = eps >= b.bound;
    if (json) {
        Json j;
        j["name"] = a.name;
        j["bound"] = to_string(b.bound);
        j["hypotheses_met"] = b.hypotheses_met;
        j["note"] = b.note;
        j["epsilon_config"] = to_string(eps);
        j["satisfied"] = satisfied;
        emit(j);
    } else {
        std::cout << "lower bound 2/(4dk+3d-9): " << to_string(b.bound)
                  << (b.hypotheses_met ? "" : "  [" + b.note + "]") << "\n";
        std::cout << "epsilon-config:           " << to_string(eps) << "\n";
        std::cout << "comparison:               " << to_string(eps)
                  << (satisfied ? " >= " : " < ") << to_string(b.bound) << "\n";
    }
    // A violation only counts against inputs the bound actually covers.
    return (!b.hypotheses_met || satisfied) ? 0 : 1;
}

MultiplicityAssignment assignment_for(const Arrangement& a, const std::string& mults) {
    a.require_geometry("interpolate");
    std::vector<int> m;
    if (mults.empty()) {
        m.assign(a.points.size(), 1);
    } else {
        std::stringstream ss(mults);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(item, &pos);
                if (pos != item.size() || v < 1 || v > 64) throw std::invalid_argument(item);
                m.push_back(v);
            } catch (const std::exception&) {
                fail(ErrorCode::invalid_spec, "--mults expects integers >= 1, got \"" + item + "\"");
            }
        }
        if (m.size() == 1) m.assign(a.points.size(), m[0]);
        if (m.size() != a.points.size())
            fail(ErrorCode::invalid_spec,
                 "--mults needs one value, or one per point (" + std::to_string(a.points.size()) +
                     "), got " + std::to_string(m.size()));
    }
    MultiplicityAssignment assignment;
    assignment.reserve(a.points.size());
    for (size_t i = 0; i < a.points.size(); ++i)
        assignment.emplace_back(a.points[i].point, m[i]);
    return assignment;
}

int cmd_interpolate(const Arrangement& a, int degree, const std::string& mults, bool json) {
    MultiplicityAssignment assignment = assignment_for(a, mults);
    InterpolationResult res = interpolate(degree, assignment, a.ctx);
    if (json) {
        Json j;
        j["name"] = a.name;
        j["degree"] = res.degree;
        j["points"] = assignment.size();
        j["ambient"] = res.ambient;
        j["conditions"] = res.conditions;
        j["rank"] = res.rank;
        j["dimension"] = res.dimension;
        Json basis = Json::array();
        for (const auto& f : res.basis) basis.push_back(polynomial_to_json(f));
        j["basis"] = basis;
        emit(j);
    } else {
        std::cout << "interpolate: degree " << degree << " through " << assignment.size()
                  << " points of " << a.name << "\n";
        std::cout << "  ambient " << res.ambient << ", conditions " << res.conditions
                  << ", rank " << res.rank << "\n";
        std::cout << "  dimension " << res.dimension
                  << " (vector-space dimension; projective dimension is one less)\n";
        if (!res.basis.empty()) {
            std::cout << "  basis:\n";
            for (const auto& f : res.basis) std::cout << "    " << f.to_string() << "\n";
        }
    }
    return 0;
}

int cmd_search(const Arrangement& a, int max_degree, bool json) {
    a.require_geometry("search");
    if (max_degree < 1 || max_degree > 2)
        fail(ErrorCode::invalid_spec, "--max-degree must be 1 or 2");
    std::vector<ProjectivePoint> z;
    z.reserve(a.points.size());
    for (const auto& ip : a.points) z.push_back(ip.point);

    LineSearchResult lines = search_lines(z);
    std::optional<ConicSearchResult> conics;
    if (max_degree >= 2) conics = search_conics(z);

    if (json) {
        Json j;
        j["name"] = a.name;
        j["points"] = z.size();
        j["max_degree"] = max_degree;
        j["mpl"] = lines.mpl;
        j["best_line"] = ratio_report_to_json(lines.best);
        Json ls = Json::array();
        for (const auto& r : lines.candidates) ls.push_back(ratio_report_to_json(r));
        j["lines"] = ls;
        if (conics) {
            j["best_conic"] = conics->best ? ratio_report_to_json(*conics->best) : Json(nullptr);
            Json cs = Json::array();
            for (const auto& r : conics->candidates) cs.push_back(ratio_report_to_json(r));
            j["conics"] = cs;
        }
        emit(j);
    } else {
        std::cout << "search: " << z.size() << " points of " << a.name << " (max degree "
                  << max_degree << ")\n";
        std::cout << "  best line:  ratio " << to_string(lines.best.ratio) << " through "
                  << lines.best.mult_sum << " points: " << lines.best.curve.to_string()
                  << "  [mpl " << lines.mpl << "]\n";
        std::cout << "  line candidates: " << lines.candidates.size() << "\n";
        if (conics) {
            if (conics->best) {
                std::cout << "  best conic: ratio " << to_string(conics->best->ratio)
                          << ", multiplicity sum " << conics->best->mult_sum << ": "
                          << conics->best->curve.to_string() << "\n";
                std::cout << "  smooth conic candidates: " << conics->candidates.size() << "\n";
            } else {
                std::cout << "  no smooth conic through any 5 of the points\n";
            }
        }
    }
    return 0;
}

std::string factor_summary(const LowerBoundCertificate& c) {
    int nlines = 0, nconics = 0, nother = 0;
    for (const auto& [f, ev] : c.factors) {
        (void)ev;
        if (f.degree() == 1)
            ++nlines;
        else if (f.degree() == 2)
            ++nconics;
        else
            ++nother;
    }
    std::string s;
    auto append = [&s](int n, const char* what) {
        if (n == 0) return;
        if (!s.empty()) s += " + ";
        s += std::to_string(n) + " " + what + (n > 1 ? "s" : "");
    };
    append(nlines, "line");
    append(nconics, "conic");
    append(nother, "higher-degree factor");
    return s;
}

int cmd_certify(const Arrangement& a, const std::optional<Rational>& target,
                const std::string& out, int max_degree, bool json) {
    if (max_degree < 1 || max_degree > 2)
        fail(ErrorCode::invalid_spec, "--max-degree must be 1 or 2");
    SeshadriResult r = compute_seshadri(a, max_degree);
    Json cert = seshadri_result_to_json(a, r);
    if (!out.empty()) write_json_file(cert, out);

    bool met = target && r.exact && *r.exact == *target;
    if (json) {
        if (target) {
            cert["target"] = to_string(*target);
            cert["target_met"] = met;
        }
        emit(cert);
    } else {
        std::cout << "certify: " << a.name << " (" << a.points.size() << " points)\n";
        std::cout << "  upper bound " << to_string(r.upper) << "  (witness "
                  << irreducibility_name(r.witness.irreducibility) << " "
                  << r.witness.curve.to_string() << ", ratio " << to_string(r.witness.ratio)
                  << ")\n";
        if (r.certificate.kind == CertificateKind::arrangement_bezout) {
            std::cout << "  lower bound " << to_string(r.lower)
                      << "  (arrangement-bezout: min multiplicity " << r.certificate.min_mult
                      << " against total degree " << a.comb.d * a.comb.k << ")\n";
        } else {
            std::cout << "  lower bound " << to_string(r.lower)
                      << "  (interpolating-curve of total degree " << r.certificate.total_degree
                      << ": " << factor_summary(r.certificate) << ")\n";
        }
        if (r.exact)
            std::cout << "  exact value: " << to_string(*r.exact) << "\n";
        else
            std::cout << "  exact value: not determined (bounds differ)\n";
        if (!out.empty()) std::cout << "  certificate written to " << out << "\n";
        if (target)
            std::cout << "  target " << to_string(*target) << ": "
                      << (met ? "met" : "NOT met") << "\n";
    }
    return (!target || met) ? 0 : 1;
}

int cmd_verify(const std::string& file, bool json) {
    Json j = read_json_file(file);
    CertificateCheck chk = verify_certificate(j);
    if (json) {
        Json out;
        out["file"] = file;
        out["verified"] = chk.ok;
        out["detail"] = chk.detail;
        emit(out);
    } else {
        std::cout << "certificate " << file << ": " << (chk.ok ? "VERIFIED" : "FAILED") << "\n"
                  << "  " << chk.detail << "\n";
    }
    return chk.ok ? 0 : 1;
}

int cmd_catalog_list(bool json) {
    auto entries = catalog_entries();
    if (json) {
        Json j = Json::array();
        for (const auto& [name, desc] : entries) {
            Json e;
            e["name"] = name;
            e["description"] = desc;
            j.push_back(e);
        }
        emit(j);
    } else {
        std::cout << "catalog entries:\n";
        for (const auto& [name, desc] : entries)
            std::cout << "  " << std::left << std::setw(14) << name << " " << desc << "\n";
    }
    return 0;
}

int cmd_catalog_show(const Arrangement& a, const std::string& out, bool json) {
    Json j = arrangement_to_json(a);
    if (!out.empty()) write_json_file(j, out);
    if (json) {
        emit(j);
    } else {
        std::cout << "catalog entry: " << a.name << "\n";
        std::cout << "  field: " << field_description(a.ctx) << "\n";
        std::cout << "  d = " << a.comb.d << ", k = " << a.comb.k << ", t = "
                  << t_to_string(a.comb.t) << "\n";
        if (a.has_geometry())
            std::cout << "  " << a.curves.size() << " curves, " << a.points.size()
                      << " singular points\n";
        else
            std::cout << "  combinatorial data only\n";
        if (!out.empty()) std::cout << "  written to " << out << "\n";
    }
    return 0;
}

int cmd_table(bool json) {
    const auto& rows = simplicial_rows();
    if (json) {
        Json j = Json::array();
        for (const auto& row : rows) {
            CombinatorialArrangement comb{1, row.k, row.t};
            Json e;
            e["code"] = row.code;
            e["k"] = row.k;
            e["t"] = t_to_json(row.t);
            e["epsilon_config"] = to_string(epsilon_config(comb));
            e["epsilon_reported"] = to_string(row.reported_epsilon);
            e["certified"] = row.certified;
            j.push_back(e);
        }
        emit(j);
    } else {
        std::cout << std::left << std::setw(8) << "code" << std::setw(4) << "k" << std::setw(14)
                  << "t-vector" << std::setw(8) << "eps_C" << "eps\n";
        for (const auto& row : rows) {
            CombinatorialArrangement comb{1, row.k, row.t};
            std::cout << std::left << std::setw(8) << row.code << std::setw(4) << row.k
                      << std::setw(14) << t_to_string(row.t) << std::setw(8)
                      << to_string(epsilon_config(comb)) << to_string(row.reported_epsilon)
                      << (row.certified ? "  [certified]" : "  [reported, unverified]") << "\n";
        }
        std::cout << "note: the eps column is quoted as reported for these arrangements; this\n"
                     "      suite certifies it only for A1(6), which it realizes as fermat(2).\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Seshadri-constant toolkit for plane curve arrangements"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");
    auto add_json = [&json](CLI::App* cmd) {
        cmd->add_flag("--json", json, "machine-readable output");
    };

    InputOptions check_in;
    auto* c_check = app.add_subcommand("check", "validity checks and inequalities");
    add_input_options(c_check, check_in);
    add_json(c_check);

    InputOptions eps_in;
    auto* c_eps = app.add_subcommand("epsilon-config", "exact configurational value dk/f1");
    add_input_options(c_eps, eps_in);
    add_json(c_eps);

    InputOptions bounds_in;
    auto* c_bounds = app.add_subcommand("bounds", "theorem lower bound vs the configurational value");
    add_input_options(c_bounds, bounds_in);
    add_json(c_bounds);

    InputOptions interp_in;
    int interp_degree = 0;
    std::string interp_mults;
    auto* c_interp = app.add_subcommand("interpolate", "linear system through the singular points");
    add_input_options(c_interp, interp_in);
    c_interp->add_option("--degree", interp_degree, "degree of the interpolating forms")
        ->required()
        ->check(CLI::Range(1, 64));
    c_interp->add_option("--mults", interp_mults,
                         "multiplicities: one value for all points, or a comma list");
    add_json(c_interp);

    InputOptions search_in;
    int search_degree = 2;
    auto* c_search = app.add_subcommand("search", "best line/conic ratios against the points");
    add_input_options(c_search, search_in);
    c_search->add_option("--max-degree", search_degree, "search lines (1) or lines and conics (2)");
    add_json(c_search);

    InputOptions certify_in;
    int certify_degree = 2;
    std::string certify_out, certify_verify, certify_target;
    auto* c_certify = app.add_subcommand("certify", "two-sided Seshadri bounds with certificates");
    add_input_options(c_certify, certify_in);
    c_certify->add_option("--max-degree", certify_degree, "candidate search degree cap (1 or 2)");
    c_certify->add_option("--target", certify_target, "exact value to test, as p/q");
    c_certify->add_option("--out", certify_out, "write the certificate JSON here");
    c_certify->add_option("--verify", certify_verify, "re-verify a stored certificate file")
        ->excludes("--file")
        ->excludes("--catalog")
        ->excludes("--target")
        ->excludes("--out");
    add_json(c_certify);

    auto* c_catalog = app.add_subcommand("catalog", "built-in arrangements");
    c_catalog->require_subcommand(1);
    auto* c_list = c_catalog->add_subcommand("list", "list catalog entries");
    add_json(c_list);
    std::string show_name, show_out;
    InputOptions show_in;
    auto* c_show = c_catalog->add_subcommand("show", "build an entry and print or export it");
    c_show->add_option("name", show_name, "catalog entry name")->required();
    c_show->add_option("--n", show_in.params.n, "catalog parameter n");
    c_show->add_option("--d", show_in.params.d, "catalog parameter d");
    c_show->add_option("--k", show_in.params.k, "catalog parameter k");
    c_show->add_option("--code", show_in.params.code, "simplicial table row code");
    c_show->add_option("--out", show_out, "write the arrangement JSON here");
    add_json(c_show);

    auto* c_table = app.add_subcommand("table", "the 11-row simplicial reference table");
    add_json(c_table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_check)) return cmd_check(resolve_input(check_in), json);
        if (app.got_subcommand(c_eps)) return cmd_epsilon_config(resolve_input(eps_in), json);
        if (app.got_subcommand(c_bounds)) return cmd_bounds(resolve_input(bounds_in), json);
        if (app.got_subcommand(c_interp))
            return cmd_interpolate(resolve_input(interp_in), interp_degree, interp_mults, json);
        if (app.got_subcommand(c_search))
            return cmd_search(resolve_input(search_in), search_degree, json);
        if (app.got_subcommand(c_certify)) {
            if (!certify_verify.empty()) return cmd_verify(certify_verify, json);
            std::optional<Rational> target;
            if (!certify_target.empty()) target = parse_rational(certify_target);
            return cmd_certify(resolve_input(certify_in), target, certify_out, certify_degree,
                               json);
        }
        if (app.got_subcommand(c_catalog)) {
            if (c_catalog->got_subcommand(c_list)) return cmd_catalog_list(json);
            return cmd_catalog_show(build_catalog(show_name, show_in.params), show_out, json);
        }
        if (app.got_subcommand(c_table)) return cmd_table(json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable with require_subcommand(1)
}
