#include "seshadri/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

namespace seshadri {

namespace {

// Parse diagnostics name the JSON path of the offending value, e.g.
// "$/curves/0/degree: expected an integer".
[[noreturn]] void bad(const std::string& path, const std::string& what) {
    fail(ErrorCode::parse, path + ": " + what);
}

const Json& member(const Json& j, const std::string& path, const char* key) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path + "/" + key, "missing");
    return *it;
}

const Json* member_opt(const Json& j, const std::string& path, const char* key) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string string_at(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

long long integer_at(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long long>();
}

Rational rational_at(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

std::string index_path(const std::string& base, size_t i) {
    return base + "/" + std::to_string(i);
}

} // namespace

Json field_to_json(const FieldContextPtr& ctx) {
    Json j;
    if (!ctx || ctx->is_rational_field()) {
        j["type"] = "rational";
    } else {
        j["type"] = "number_field";
        Json mp = Json::array();
        for (const auto& c : ctx->minpoly()) mp.push_back(to_string(c));
        j["minpoly"] = mp;
    }
    return j;
}

FieldContextPtr field_from_json(const Json& j, const std::string& path) {
    std::string type = string_at(member(j, path, "type"), path + "/type");
    if (type == "rational") return FieldContext::rationals();
    if (type == "number_field") {
        const Json& mp = member(j, path, "minpoly");
        if (!mp.is_array() || mp.size() < 2)
            bad(path + "/minpoly", "expected an array of at least two rational strings");
        std::vector<Rational> coeffs;
        coeffs.reserve(mp.size());
        for (size_t i = 0; i < mp.size(); ++i)
            coeffs.push_back(rational_at(mp[i], index_path(path + "/minpoly", i)));
        try {
            return FieldContext::number_field(std::move(coeffs));
        } catch (const Error& e) {
            bad(path + "/minpoly", e.what());
        }
    }
    bad(path + "/type", "unknown field type \"" + type + "\"");
}

Json element_to_json(const FieldElement& e) {
    Json a = Json::array();
    for (const auto& s : serialize_element(e)) a.push_back(s);
    return a;
}

FieldElement element_from_json(const FieldContextPtr& ctx, const Json& j,
                               const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of rational strings");
    if (static_cast<int>(j.size()) != ctx->degree())
        bad(path, "expected " + std::to_string(ctx->degree()) + " coordinates, got " +
                      std::to_string(j.size()));
    std::vector<Rational> coords;
    coords.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        coords.push_back(rational_at(j[i], index_path(path, i)));
    return ctx->element(std::move(coords));
}

Json polynomial_to_json(const HomogeneousPolynomial& f) {
    Json j;
    j["degree"] = f.degree();
    Json cs = Json::array();
    for (const auto& c : f.coefficient_vector()) cs.push_back(element_to_json(c));
    j["coefficients"] = cs;
    return j;
}

HomogeneousPolynomial polynomial_from_json(const FieldContextPtr& ctx, const Json& j,
                                           const std::string& path) {
    long long degree = integer_at(member(j, path, "degree"), path + "/degree");
    if (degree < 1 || degree > 64) bad(path + "/degree", "expected a degree in [1, 64]");
    const Json& cs = member(j, path, "coefficients");
    size_t expected = monomials_of_degree(static_cast<int>(degree)).size();
    if (!cs.is_array() || cs.size() != expected)
        bad(path + "/coefficients", "expected " + std::to_string(expected) +
                                        " coefficients for degree " + std::to_string(degree));
    std::vector<FieldElement> coeffs;
    coeffs.reserve(expected);
    for (size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(element_from_json(ctx, cs[i], index_path(path + "/coefficients", i)));
    return HomogeneousPolynomial::from_coefficients(ctx, static_cast<int>(degree), coeffs);
}

namespace {

Json point_coords_to_json(const ProjectivePoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords()) coords.push_back(element_to_json(c));
    return coords;
}

ProjectivePoint point_from_json(const FieldContextPtr& ctx, const Json& j,
                                const std::string& path) {
    if (!j.is_array() || j.size() != 3) bad(path, "expected 3 coordinates");
    FieldElement x = element_from_json(ctx, j[0], index_path(path, 0));
    FieldElement y = element_from_json(ctx, j[1], index_path(path, 1));
    FieldElement z = element_from_json(ctx, j[2], index_path(path, 2));
    try {
        return ProjectivePoint(x, y, z);
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

} // namespace

Json arrangement_to_json(const Arrangement& a) {
    Json j;
    j["name"] = a.name;
    j["field"] = field_to_json(a.ctx);
    j["d"] = a.comb.d;
    j["k"] = a.comb.k;
    Json t = Json::object();
    for (const auto& [r, n] : a.comb.t) t[std::to_string(r)] = n;
    Json comb;
    comb["t"] = t;
    j["combinatorics"] = comb;
    if (a.has_geometry()) {
        Json curves = Json::array();
        for (const auto& c : a.curves) curves.push_back(polynomial_to_json(c));
        j["curves"] = curves;
        Json points = Json::array();
        for (const auto& ip : a.points) {
            Json p;
            p["coords"] = point_coords_to_json(ip.point);
            p["curves"] = ip.curves;
            points.push_back(p);
        }
        j["points"] = points;
    }
    return j;
}

Arrangement arrangement_from_json(const Json& j) {
    const std::string root = "$";
    Arrangement a;
    a.name = string_at(member(j, root, "name"), "$/name");
    long long d = integer_at(member(j, root, "d"), "$/d");
    long long k = integer_at(member(j, root, "k"), "$/k");
    if (d < 1 || d > 64) bad("$/d", "expected a degree in [1, 64]");
    if (k < 1 || k > 4096) bad("$/k", "expected a curve count in [1, 4096]");
    a.comb.d = static_cast<int>(d);
    a.comb.k = static_cast<int>(k);

    const Json& comb = member(j, root, "combinatorics");
    const Json& t = member(comb, "$/combinatorics", "t");
    if (!t.is_object()) bad("$/combinatorics/t", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
        std::string tpath = "$/combinatorics/t/" + it.key();
        long long r = 0;
        try {
            size_t pos = 0;
            r = std::stoll(it.key(), &pos);
            if (pos != it.key().size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            bad(tpath, "key must be an integer multiplicity");
        }
        if (r < 2) bad(tpath, "multiplicities start at 2");
        long long count = integer_at(it.value(), tpath);
        if (count < 0) bad(tpath, "expected a count >= 0");
        if (count > 0) a.comb.t[static_cast<int>(r)] = count;
    }

    // The field block is validated even for combinatorial-only files, but the
    // context is attached only when curves are present (has_geometry tracks it).
    FieldContextPtr ctx = field_from_json(member(j, root, "field"), "$/field");

    const Json* curves = member_opt(j, root, "curves");
    const Json* points = member_opt(j, root, "points");
    if (!curves) {
        if (points) bad("$/points", "points listed without curves");
        return a;
    }
    a.ctx = ctx;
    if (!curves->is_array() || curves->empty()) bad("$/curves", "expected a non-empty array");
    if (static_cast<long long>(curves->size()) != k)
        bad("$/curves", "expected k = " + std::to_string(k) + " curves, got " +
                            std::to_string(curves->size()));
    for (size_t i = 0; i < curves->size(); ++i) {
        std::string cpath = index_path("$/curves", i);
        HomogeneousPolynomial f = polynomial_from_json(ctx, (*curves)[i], cpath);
        if (f.is_zero()) bad(cpath, "zero polynomial");
        if (f.degree() != a.comb.d)
            bad(cpath + "/degree", "curve degree differs from d = " + std::to_string(d));
        a.curves.push_back(std::move(f));
    }

    if (!points) {
        if (a.comb.d != 1) bad("$/points", "required for curves of degree >= 2");
        // For lines the singular locus is computable; keep the file's t-vector
        // (geometric verification compares it against the recomputed one).
        Arrangement assembled = assemble_arrangement(a.name, 1, ctx, a.curves,
                                                     line_intersection_points(a.curves));
        a.points = std::move(assembled.points);
        return a;
    }

    if (!points->is_array()) bad("$/points", "expected an array");
    for (size_t i = 0; i < points->size(); ++i) {
        std::string ppath = index_path("$/points", i);
        const Json& pj = (*points)[i];
        const Json& cj = member(pj, ppath, "curves");
        if (!cj.is_array() || cj.size() < 2)
            bad(ppath + "/curves", "expected at least 2 curve indices");
        std::vector<int> idx;
        idx.reserve(cj.size());
        for (size_t l = 0; l < cj.size(); ++l) {
            long long c = integer_at(cj[l], index_path(ppath + "/curves", l));
            if (c < 0 || c >= k)
                bad(index_path(ppath + "/curves", l),
                    "curve index out of range [0, " + std::to_string(k) + ")");
            idx.push_back(static_cast<int>(c));
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            bad(ppath + "/curves", "duplicate curve index");
        ProjectivePoint p = point_from_json(ctx, member(pj, ppath, "coords"), ppath + "/coords");
        a.points.push_back(IncidencePoint{std::move(p), std::move(idx)});
    }
    return a;
}

Arrangement load_arrangement(const std::string& file_path) {
    return arrangement_from_json(read_json_file(file_path));
}

Json read_json_file(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) fail(ErrorCode::parse, "cannot read file: " + file_path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, file_path + ": " + e.what());
    }
}

void write_json_file(const Json& j, const std::string& file_path) {
    std::ofstream out(file_path);
    if (!out) fail(ErrorCode::parse, "cannot write file: " + file_path);
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) fail(ErrorCode::parse, "write failed: " + file_path);
}

Json ratio_report_to_json(const RatioReport& r) {
    Json j;
    j["curve"] = polynomial_to_json(r.curve);
    j["degree"] = r.degree;
    j["mult_sum"] = r.mult_sum;
    j["ratio"] = to_string(r.ratio);
    j["irreducibility"] = irreducibility_name(r.irreducibility);
    return j;
}

namespace {

RatioReport ratio_report_from_json(const FieldContextPtr& ctx, const Json& j,
                                   const std::string& path) {
    RatioReport r{polynomial_from_json(ctx, member(j, path, "curve"), path + "/curve"),
                  0, 0, Rational(0), Irreducibility::assumed};
    long long degree = integer_at(member(j, path, "degree"), path + "/degree");
    if (degree != r.curve.degree()) bad(path + "/degree", "does not match the curve");
    r.degree = static_cast<int>(degree);
    r.mult_sum = integer_at(member(j, path, "mult_sum"), path + "/mult_sum");
    if (r.mult_sum < 1) bad(path + "/mult_sum", "expected a positive integer");
    r.ratio = rational_at(member(j, path, "ratio"), path + "/ratio");
    std::string ev = string_at(member(j, path, "irreducibility"), path + "/irreducibility");
    try {
        r.irreducibility = irreducibility_from_name(ev);
    } catch (const Error& e) {
        bad(path + "/irreducibility", e.what());
    }
    return r;
}

const char* kind_name(CertificateKind k) {
    return k == CertificateKind::arrangement_bezout ? "arrangement-bezout"
                                                    : "interpolating-curve";
}

} // namespace

Json certificate_to_json(const LowerBoundCertificate& c) {
    Json j;
    j["kind"] = kind_name(c.kind);
    j["bound"] = to_string(c.bound);
    if (c.kind == CertificateKind::arrangement_bezout) {
        j["min_mult"] = c.min_mult;
    } else {
        Json fs = Json::array();
        for (const auto& [f, ev] : c.factors) {
            Json fj;
            fj["polynomial"] = polynomial_to_json(f);
            fj["irreducibility"] = irreducibility_name(ev);
            fs.push_back(fj);
        }
        j["factors"] = fs;
        j["total_degree"] = c.total_degree;
    }
    Json ex = Json::array();
    for (const auto& r : c.exhibited) ex.push_back(ratio_report_to_json(r));
    j["exhibited"] = ex;
    return j;
}

Json seshadri_result_to_json(const Arrangement& a, const SeshadriResult& r) {
    a.require_geometry("certificate serialization");
    Json j;
    j["name"] = a.name;
    j["field"] = field_to_json(a.ctx);
    j["d"] = a.comb.d;
    j["k"] = a.comb.k;
    Json pts = Json::array();
    for (const auto& ip : a.points) {
        Json p;
        p["coords"] = point_coords_to_json(ip.point);
        p["multiplicity"] = ip.multiplicity();
        pts.push_back(p);
    }
    j["points"] = pts;
    Json up;
    up["ratio"] = to_string(r.upper);
    up["witness"] = ratio_report_to_json(r.witness);
    j["upper"] = up;
    j["lower"] = certificate_to_json(r.certificate);
    j["exact"] = r.exact ? Json(to_string(*r.exact)) : Json(nullptr);
    return j;
}

namespace {

// Everything a stored certificate claims, parsed but not yet checked.
struct ParsedCertificate {
    FieldContextPtr ctx;
    int d = 0;
    int k = 0;
    std::vector<ProjectivePoint> z;
    std::vector<int> mults;
    Rational upper;
    RatioReport witness;
    CertificateKind kind = CertificateKind::arrangement_bezout;
    Rational bound;
    int min_mult = 0;
    std::vector<HomogeneousPolynomial> factors;
    std::vector<Irreducibility> factor_evidence;
    int total_degree = 0;
    std::vector<RatioReport> exhibited;
    std::optional<Rational> exact;
};

ParsedCertificate parse_certificate(const Json& j) {
    const std::string root = "$";
    FieldContextPtr ctx = field_from_json(member(j, root, "field"), "$/field");
    ParsedCertificate c{ctx,
                        0,
                        0,
                        {},
                        {},
                        Rational(0),
                        RatioReport{HomogeneousPolynomial(ctx, 1), 0, 0, Rational(0),
                                    Irreducibility::assumed},
                        CertificateKind::arrangement_bezout,
                        Rational(0),
                        0,
                        {},
                        {},
                        0,
                        {},
                        std::nullopt};

    long long d = integer_at(member(j, root, "d"), "$/d");
    long long k = integer_at(member(j, root, "k"), "$/k");
    if (d < 1 || d > 64) bad("$/d", "expected a degree in [1, 64]");
    if (k < 2 || k > 4096) bad("$/k", "expected a curve count in [2, 4096]");
    c.d = static_cast<int>(d);
    c.k = static_cast<int>(k);

    const Json& pts = member(j, root, "points");
    if (!pts.is_array() || pts.empty()) bad("$/points", "expected a non-empty array");
    for (size_t i = 0; i < pts.size(); ++i) {
        std::string ppath = index_path("$/points", i);
        const Json& pj = pts[i];
        long long m = integer_at(member(pj, ppath, "multiplicity"), ppath + "/multiplicity");
        if (m < 2 || m > 4096) bad(ppath + "/multiplicity", "expected a multiplicity >= 2");
        c.z.push_back(point_from_json(ctx, member(pj, ppath, "coords"), ppath + "/coords"));
        c.mults.push_back(static_cast<int>(m));
    }

    const Json& up = member(j, root, "upper");
    c.upper = rational_at(member(up, "$/upper", "ratio"), "$/upper/ratio");
    c.witness = ratio_report_from_json(ctx, member(up, "$/upper", "witness"), "$/upper/witness");

    const Json& low = member(j, root, "lower");
    std::string kind = string_at(member(low, "$/lower", "kind"), "$/lower/kind");
    c.bound = rational_at(member(low, "$/lower", "bound"), "$/lower/bound");
    if (kind == "arrangement-bezout") {
        c.kind = CertificateKind::arrangement_bezout;
        long long mm = integer_at(member(low, "$/lower", "min_mult"), "$/lower/min_mult");
        if (mm < 2 || mm > 4096) bad("$/lower/min_mult", "expected a multiplicity >= 2");
        c.min_mult = static_cast<int>(mm);
    } else if (kind == "interpolating-curve") {
        c.kind = CertificateKind::interpolating_curve;
        const Json& fs = member(low, "$/lower", "factors");
        if (!fs.is_array() || fs.empty()) bad("$/lower/factors", "expected a non-empty array");
        for (size_t i = 0; i < fs.size(); ++i) {
            std::string fpath = index_path("$/lower/factors", i);
            const Json& fj = fs[i];
            c.factors.push_back(
                polynomial_from_json(ctx, member(fj, fpath, "polynomial"), fpath + "/polynomial"));
            std::string ev =
                string_at(member(fj, fpath, "irreducibility"), fpath + "/irreducibility");
            try {
                c.factor_evidence.push_back(irreducibility_from_name(ev));
            } catch (const Error& e) {
                bad(fpath + "/irreducibility", e.what());
            }
        }
        long long q = integer_at(member(low, "$/lower", "total_degree"), "$/lower/total_degree");
        if (q < 1 || q > 4096) bad("$/lower/total_degree", "expected a positive degree");
        c.total_degree = static_cast<int>(q);
    } else {
        bad("$/lower/kind", "unknown certificate kind \"" + kind + "\"");
    }

    const Json& ex = member(low, "$/lower", "exhibited");
    if (!ex.is_array()) bad("$/lower/exhibited", "expected an array");
    for (size_t i = 0; i < ex.size(); ++i)
        c.exhibited.push_back(
            ratio_report_from_json(ctx, ex[i], index_path("$/lower/exhibited", i)));

    const Json& exact = member(j, root, "exact");
    if (!exact.is_null()) c.exact = rational_at(exact, "$/exact");
    return c;
}

[[noreturn]] void reject(const std::string& what) {
    fail(ErrorCode::invalid_certificate, what);
}

// Checks an irreducibility claim that can be settled from the polynomial
// alone; membership claims are checked by the caller where the member list
// is available.
void check_evidence(const HomogeneousPolynomial& f, Irreducibility ev, const std::string& who) {
    switch (ev) {
    case Irreducibility::line:
        if (f.degree() != 1) reject(who + ": claimed a line but has degree " +
                                    std::to_string(f.degree()));
        break;
    case Irreducibility::smooth_conic:
        if (f.degree() != 2 || conic_rank(f) != 3)
            reject(who + ": claimed a smooth conic but is not one");
        break;
    case Irreducibility::component_of_arrangement:
    case Irreducibility::assumed:
        break;
    }
}

void check_ratio_matches(const RatioReport& stored, const RatioReport& fresh,
                         const std::string& who) {
    if (!(stored.curve == fresh.curve)) reject(who + ": polynomial is not normalized");
    if (stored.mult_sum != fresh.mult_sum)
        reject(who + ": stored multiplicity sum " + std::to_string(stored.mult_sum) +
               ", recomputed " + std::to_string(fresh.mult_sum));
    if (stored.ratio != fresh.ratio)
        reject(who + ": stored ratio " + to_string(stored.ratio) + ", recomputed " +
               to_string(fresh.ratio));
}

// Re-verification of the Bézout certificate against the full arrangement.
// The exhibited entries carry the k member curves, so the whole situation is
// reconstructed: the listed points must be exactly the singular locus of an
// ordinary arrangement (pairwise transverse smooth branches), which is forced
// by the per-curve intersection count d^2 (k-1).
void verify_bezout(const ParsedCertificate& c) {
    if (static_cast<int>(c.exhibited.size()) != c.k)
        reject("exhibited list must contain all " + std::to_string(c.k) + " members");
    for (size_t i = 0; i < c.exhibited.size(); ++i) {
        const RatioReport& r = c.exhibited[i];
        std::string who = "exhibited member " + std::to_string(i);
        if (r.degree != c.d) reject(who + ": degree differs from d");
        if (r.irreducibility != Irreducibility::component_of_arrangement)
            reject(who + ": members must be marked component_of_arrangement");
        for (size_t l = 0; l < i; ++l)
            if (c.exhibited[l].curve == r.curve) reject(who + ": duplicate member");
        check_ratio_matches(r, ratio_of(r.curve, c.z, r.irreducibility), who);
    }

    // Points: pairwise distinct, multiplicity = number of incident members
    // (each smooth there), never on all k members.
    long long n = static_cast<long long>(c.z.size());
    for (long long i = 0; i < n; ++i)
        for (long long l = 0; l < i; ++l)
            if (c.z[static_cast<size_t>(i)] == c.z[static_cast<size_t>(l)])
                reject("points " + std::to_string(l) + " and " + std::to_string(i) +
                       " coincide");
    std::vector<std::vector<int>> through(c.exhibited.size());
    for (size_t i = 0; i < c.z.size(); ++i) {
        int m = 0;
        for (size_t l = 0; l < c.exhibited.size(); ++l) {
            int ml = multiplicity_at(c.exhibited[l].curve, c.z[i]);
            if (ml == 0) continue;
            if (ml > 1)
                reject("member " + std::to_string(l) + " is singular at point " +
                       std::to_string(i));
            through[l].push_back(static_cast<int>(i));
            ++m;
        }
        if (m != c.mults[i])
            reject("point " + std::to_string(i) + ": stored multiplicity " +
                   std::to_string(c.mults[i]) + ", recomputed " + std::to_string(m));
        if (m >= c.k) reject("point " + std::to_string(i) + " lies on all members");
        if (m < 2) reject("point " + std::to_string(i) + " is not a singular point");
    }

    // Per-member count: sum of (m_p - 1) over its points must be d^2 (k-1);
    // a missing intersection point or a tangency would make it fall short.
    long long expected = static_cast<long long>(c.d) * c.d * (c.k - 1);
    for (size_t l = 0; l < through.size(); ++l) {
        long long sum = 0;
        for (int i : through[l]) sum += c.mults[static_cast<size_t>(i)] - 1;
        if (sum != expected)
            reject("member " + std::to_string(l) + ": intersection count " +
                   std::to_string(sum) + " != " + std::to_string(expected));
    }

    int min_mult = *std::min_element(c.mults.begin(), c.mults.end());
    if (min_mult != c.min_mult)
        reject("stored min_mult " + std::to_string(c.min_mult) + ", recomputed " +
               std::to_string(min_mult));
    Rational bound = make_rational(min_mult, static_cast<long>(c.d) * c.k);
    for (const auto& r : c.exhibited) bound = std::min(bound, r.ratio);
    if (bound != c.bound)
        reject("stored bound " + to_string(c.bound) + ", recomputed " + to_string(bound));
}

void verify_interpolating(const ParsedCertificate& c) {
    LowerBoundCertificate fresh = interpolating_curve_bound(c.z, c.factors);
    if (fresh.total_degree != c.total_degree)
        reject("stored total_degree " + std::to_string(c.total_degree) + ", recomputed " +
               std::to_string(fresh.total_degree));
    for (size_t i = 0; i < c.factors.size(); ++i)
        if (c.factor_evidence[i] != fresh.factors[i].second)
            reject("factor " + std::to_string(i) + ": stored irreducibility \"" +
                   irreducibility_name(c.factor_evidence[i]) + "\", recomputed \"" +
                   irreducibility_name(fresh.factors[i].second) + "\"");
    if (c.exhibited.size() != fresh.exhibited.size())
        reject("exhibited list must carry one entry per factor");
    for (size_t i = 0; i < c.exhibited.size(); ++i)
        check_ratio_matches(c.exhibited[i], fresh.exhibited[i],
                            "exhibited factor " + std::to_string(i));
    if (fresh.bound != c.bound)
        reject("stored bound " + to_string(c.bound) + ", recomputed " + to_string(fresh.bound));
}

} // namespace

CertificateCheck verify_certificate(const Json& j) {
    ParsedCertificate c = parse_certificate(j); // malformed input propagates as parse error
    try {
        if (c.kind == CertificateKind::arrangement_bezout) {
            verify_bezout(c);
        } else {
            verify_interpolating(c);
        }

        check_evidence(c.witness.curve, c.witness.irreducibility, "upper witness");
        check_ratio_matches(c.witness, ratio_of(c.witness.curve, c.z, c.witness.irreducibility),
                            "upper witness");
        if (c.witness.ratio != c.upper)
            reject("upper ratio " + to_string(c.upper) + " differs from its witness ratio " +
                   to_string(c.witness.ratio));

        if (c.bound > c.upper)
            reject("lower bound " + to_string(c.bound) + " exceeds upper bound " +
                   to_string(c.upper));
        if (c.exact) {
            if (c.bound != c.upper)
                reject("exact value claimed but bounds differ: " + to_string(c.bound) +
                       " vs " + to_string(c.upper));
            if (*c.exact != c.bound)
                reject("exact value " + to_string(*c.exact) + " differs from the bounds");
        } else if (c.bound == c.upper) {
            reject("bounds agree at " + to_string(c.bound) + " but no exact value is claimed");
        }
    } catch (const Error& e) {
        return CertificateCheck{false, e.what()};
    }

    std::string detail = "verified: lower " + to_string(c.bound) + " (" + kind_name(c.kind) +
                         "), upper " + to_string(c.upper);
    if (c.exact) detail += ", exact " + to_string(*c.exact);
    return CertificateCheck{true, detail};
}

} // namespace seshadri
