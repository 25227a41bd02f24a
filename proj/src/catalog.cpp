#include "seshadri/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "seshadri/linear_system.hpp"

namespace seshadri {

namespace {

// Exact division of polynomials over Q (coefficients constant-first);
// errors if the division leaves a remainder.
std::vector<Rational> poly_divide_exact(std::vector<Rational> num,
                                        const std::vector<Rational>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    if (dd < 0 || den[static_cast<size_t>(dd)] == 0)
        fail(ErrorCode::internal_consistency, "division by a zero polynomial");
    std::vector<Rational> quot(static_cast<size_t>(dn - dd + 1), Rational(0));
    for (int i = dn - dd; i >= 0; --i) {
        Rational c = num[static_cast<size_t>(i + dd)] / den[static_cast<size_t>(dd)];
        quot[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<size_t>(i + j)] -= c * den[static_cast<size_t>(j)];
    }
    for (const auto& c : num)
        if (c != 0) fail(ErrorCode::internal_consistency, "inexact polynomial division");
    return quot;
}

FieldElement el(const FieldContextPtr& ctx, std::vector<long> coeffs) {
    std::vector<Rational> coords(static_cast<size_t>(ctx->degree()), Rational(0));
    if (coeffs.size() > coords.size())
        fail(ErrorCode::out_of_range, "element coefficients exceed the field degree");
    for (size_t i = 0; i < coeffs.size(); ++i) coords[i] = Rational(coeffs[i]);
    return ctx->element(std::move(coords));
}

HomogeneousPolynomial linear_form(const FieldContextPtr& ctx, const FieldElement& cx,
                                  const FieldElement& cy, const FieldElement& cz) {
    HomogeneousPolynomial f(ctx, 1);
    f.add_term({1, 0, 0}, cx);
    f.add_term({0, 1, 0}, cy);
    f.add_term({0, 0, 1}, cz);
    return f;
}

HomogeneousPolynomial conic_form(const FieldContextPtr& ctx, const FieldElement& cxx,
                                 const FieldElement& cyy, const FieldElement& czz) {
    HomogeneousPolynomial f(ctx, 2);
    f.add_term({2, 0, 0}, cxx);
    f.add_term({0, 2, 0}, cyy);
    f.add_term({0, 0, 2}, czz);
    return f;
}

void require_verified(const Arrangement& a) {
    GeometryReport rep = verify_geometry(a);
    if (rep.passed) return;
    std::ostringstream os;
    os << a.name << " failed geometric verification:";
    for (const auto& f : rep.failures) os << "\n  " << f;
    fail(ErrorCode::genericity, os.str());
}

} // namespace

std::vector<Rational> cyclotomic(int n) {
    if (n < 1) fail(ErrorCode::out_of_range, "cyclotomic index must be >= 1");
    // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<Rational> poly(static_cast<size_t>(n) + 1, Rational(0));
    poly[0] = -1;
    poly[static_cast<size_t>(n)] = 1;
    for (int m = 1; m < n; ++m)
        if (n % m == 0) poly = poly_divide_exact(std::move(poly), cyclotomic(m));
    return poly;
}

Arrangement catalog_fermat(int n) {
    if (n < 2) fail(ErrorCode::out_of_range, "fermat needs n >= 2 (n = 1 is a pencil)");
    FieldContextPtr ctx;
    FieldElement zeta;
    if (n == 2) {
        ctx = FieldContext::rationals();
        zeta = ctx->from_int(-1);
    } else {
        ctx = FieldContext::number_field(cyclotomic(n));
        zeta = ctx->generator();
    }
    std::vector<HomogeneousPolynomial> lines;
    FieldElement zero = ctx->zero(), one = ctx->one();
    FieldElement p = one;
    for (int i = 0; i < n; ++i) {
        lines.push_back(linear_form(ctx, one, -p, zero)); // x - zeta^i y
        p = p * zeta;
    }
    p = one;
    for (int i = 0; i < n; ++i) {
        lines.push_back(linear_form(ctx, zero, one, -p)); // y - zeta^i z
        p = p * zeta;
    }
    p = one;
    for (int i = 0; i < n; ++i) {
        lines.push_back(linear_form(ctx, one, zero, -p)); // x - zeta^i z
        p = p * zeta;
    }
    auto crossings = line_intersection_points(lines);
    Arrangement a = assemble_arrangement("fermat(" + std::to_string(n) + ")", 1, ctx,
                                         std::move(lines), crossings);
    require_verified(a);
    return a;
}

Arrangement catalog_dual_hesse() {
    Arrangement a = catalog_fermat(3);
    a.name = "dual_hesse";
    return a;
}

Arrangement catalog_hesse_conics() {
    // Q[u]/(u^6 + 9u^4 - 4u^3 + 27u^2 + 36u + 31).
    FieldContextPtr ctx =
        FieldContext::number_field({Rational(31), Rational(36), Rational(27), Rational(-4),
                                    Rational(9), Rational(0), Rational(1)});
    using C = std::vector<long>;
    const C alpha{181, 182, -26, 40, -1, 4};
    const C beta{-1, -182, 26, -40, 1, -4};
    const C gamma{-91, -92, 26, -40, 1, -4};
    auto lf = [&](C cx, C cy, C cz) {
        return linear_form(ctx, el(ctx, std::move(cx)), el(ctx, std::move(cy)),
                           el(ctx, std::move(cz)));
    };

    // The 21 singular points, each the intersection of two linear forms. The
    // first nine are the 8-fold points; the rest are the nodes.
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> ideals;
    ideals.emplace_back(lf({}, {90}, gamma), lf({1}, {}, {-1}));
    ideals.emplace_back(lf({}, {36}, {-11, 29, -20, 10, -1, 1}),
                        lf({10}, {11, 2, -1}, {-6, -4, -4}));
    ideals.emplace_back(lf({}, {60}, {79, 13, 16, 10, 1, 1}),
                        lf({6}, {-11, 2, 1}, {-10, 4, -4}));
    ideals.emplace_back(lf({}, {90}, {-11, 53, -29, 10, -4, 1}), lf({1}, {-1}, {}));
    ideals.emplace_back(lf({}, {60}, {44, -2, 1, 5, 1, 1}),
                        lf({6}, {-10, 4, -4}, {-11, 2, 1}));
    ideals.emplace_back(lf({}, {36}, {-22, -20, 11, -7, 1, -1}),
                        lf({10}, {-6, -4, -4}, {11, 2, -1}));
    ideals.emplace_back(lf({}, {1}, {-1}), lf({90}, {}, gamma));
    ideals.emplace_back(lf({}, {180}, alpha), lf({1}, {-1, -1}, {1, -1}));
    ideals.emplace_back(lf({}, {180}, beta), lf({1}, {1, -1}, {-1, -1}));
    ideals.emplace_back(lf({}, {}, {1}), lf({1}, {}, {}));
    ideals.emplace_back(lf({}, {1}, {}), lf({1}, {}, {}));
    ideals.emplace_back(lf({}, {}, {1}), lf({}, {1}, {}));
    ideals.emplace_back(lf({}, {1}, {-1}), lf({1}, {}, {-1}));
    ideals.emplace_back(lf({}, {180}, alpha), lf({180}, {}, beta));
    ideals.emplace_back(lf({}, {180}, beta), lf({180}, {}, alpha));
    ideals.emplace_back(lf({}, {180}, alpha), lf({1}, {}, {-1}));
    ideals.emplace_back(lf({}, {180}, beta), lf({180}, {}, beta));
    ideals.emplace_back(lf({}, {1}, {-1}), lf({180}, {}, alpha));
    ideals.emplace_back(lf({}, {180}, beta), lf({1}, {}, {-1}));
    ideals.emplace_back(lf({}, {1}, {-1}), lf({180}, {}, beta));
    ideals.emplace_back(lf({}, {180}, alpha), lf({180}, {}, alpha));

    std::vector<ProjectivePoint> points;
    for (const auto& [l1, l2] : ideals) points.push_back(point_from_two_lines(l1, l2));
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                fail(ErrorCode::genericity, "hesse_conics: coincident singular points");

    // Recover the conics: each passes through exactly 6 of the nine 8-fold
    // points, so it shows up as the unique conic through one 6-subset.
    struct ConicLess {
        bool operator()(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) const {
            return HomogeneousPolynomial::compare(a, b) < 0;
        }
    };
    std::set<HomogeneousPolynomial, ConicLess> conics;
    std::array<size_t, 6> idx{};
    for (idx[0] = 0; idx[0] < 9; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < 9; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < 9; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < 9; ++idx[3])
                    for (idx[4] = idx[3] + 1; idx[4] < 9; ++idx[4])
                        for (idx[5] = idx[4] + 1; idx[5] < 9; ++idx[5]) {
                            MultiplicityAssignment asg;
                            for (size_t s : idx) asg.emplace_back(points[s], 1);
                            auto sys = interpolate(2, asg, ctx);
                            if (sys.dimension == 0) continue;
                            if (sys.dimension > 1)
                                fail(ErrorCode::genericity,
                                     "hesse_conics: a 6-subset admits a pencil of conics");
                            if (conic_rank(sys.basis[0]) != 3)
                                fail(ErrorCode::genericity,
                                     "hesse_conics: degenerate conic through a 6-subset");
                            conics.insert(sys.basis[0]);
                        }
    if (conics.size() != 12)
        fail(ErrorCode::genericity, "hesse_conics: expected 12 conics, found " +
                                        std::to_string(conics.size()));

    Arrangement a = assemble_arrangement(
        "hesse_conics", 2, ctx,
        std::vector<HomogeneousPolynomial>(conics.begin(), conics.end()), points);
    TVector expected{{2, 12}, {8, 9}};
    if (a.comb.t != expected)
        fail(ErrorCode::genericity, "hesse_conics: multiplicity census is not {2:12, 8:9}");
    require_verified(a);
    return a;
}

namespace {

// Square root of a rational inside the ambient field. Over Q(zeta_8) the
// square classes -1, 2, -2 become squares via i = u^2 and sqrt(2) = u - u^3.
FieldElement sqrt_in_context(const FieldContextPtr& ctx, const Rational& r) {
    if (r == 0) return ctx->zero();
    auto sc = square_class_decompose(r);
    if (!sc || sc->e3 != 0)
        fail(ErrorCode::genericity, "required square root does not exist: " + to_string(r));
    FieldElement res = ctx->from_rational(sc->root);
    if (sc->e2 || sc->sign < 0) {
        if (ctx->degree() != 4)
            fail(ErrorCode::genericity,
                 "square root of " + to_string(r) + " needs the eighth cyclotomic field");
        FieldElement u = ctx->generator();
        if (sc->e2) res = res * (u - u.pow(3));       // sqrt(2)
        if (sc->sign < 0) res = res * u.pow(2);       // i
    }
    if (!(res * res == ctx->from_rational(r)))
        fail(ErrorCode::internal_consistency, "square root construction failed");
    return res;
}

Arrangement star_of_conics(int k) {
    // Conics x^2 + s*y^2 + q(s)*z^2: two members with parameters s, t meet at
    // (+-x0 : +-y0 : 1) with x0^2 = st - c and y0^2 = -(s + t + b) for
    // q(s) = s^2 + bs + c. The parameter sets below make every needed root
    // exist: k = 3 over Q (Euler-brick legs), k = 4, 5 over Q(zeta_8).
    std::vector<long> params;
    long b = 0, c = 0;
    FieldContextPtr ctx;
    if (k == 3) {
        params = {-44 * 44, -117 * 117, -240 * 240}; // q(s) = s^2
        ctx = FieldContext::rationals();
    } else if (k == 4 || k == 5) {
        b = -6; // q(s) = s^2 - 6s
        params = (k == 4) ? std::vector<long>{-1, 8, 16, -18}
                          : std::vector<long>{-25, -50, -169, 200, 256};
        ctx = FieldContext::number_field(cyclotomic(8));
    } else {
        fail(ErrorCode::out_of_range, "star conics are provided for k = 3, 4, 5");
    }

    std::vector<HomogeneousPolynomial> curves;
    for (long s : params)
        curves.push_back(
            conic_form(ctx, ctx->one(), ctx->from_int(s), ctx->from_int(s * s + b * s + c)));

    std::vector<ProjectivePoint> candidates;
    FieldElement one = ctx->one();
    for (size_t i = 0; i < params.size(); ++i)
        for (size_t j = i + 1; j < params.size(); ++j) {
            long s = params[i], t = params[j];
            FieldElement x0 = sqrt_in_context(ctx, Rational(s) * Rational(t) - c);
            FieldElement y0 = sqrt_in_context(ctx, -(Rational(s) + t + b));
            candidates.emplace_back(x0, y0, one);
            candidates.emplace_back(-x0, y0, one);
            candidates.emplace_back(x0, -y0, one);
            candidates.emplace_back(-x0, -y0, one);
        }
    return assemble_arrangement("star(2," + std::to_string(k) + ")", 2, ctx,
                                std::move(curves), candidates);
}

} // namespace

Arrangement catalog_star(int d, int k) {
    if (k < 3) fail(ErrorCode::out_of_range, "star needs k >= 3");
    Arrangement a = [&] {
        if (d == 1) {
            // Lines x + i*y + i^2*z: never three concurrent (Vandermonde).
            FieldContextPtr ctx = FieldContext::rationals();
            std::vector<HomogeneousPolynomial> lines;
            for (int i = 1; i <= k; ++i)
                lines.push_back(linear_form(ctx, ctx->one(), ctx->from_int(i),
                                            ctx->from_int(static_cast<long>(i) * i)));
            auto crossings = line_intersection_points(lines);
            return assemble_arrangement("star(1," + std::to_string(k) + ")", 1, ctx,
                                        std::move(lines), crossings);
        }
        if (d == 2) return star_of_conics(k);
        fail(ErrorCode::out_of_range, "star curves are provided for d = 1 and d = 2");
    }();
    // A star must consist of plain double points.
    TVector expected{{2, static_cast<long long>(d) * d * k * (k - 1) / 2}};
    if (a.comb.t != expected)
        fail(ErrorCode::genericity, a.name + ": intersections are not all transversal doubles");
    require_verified(a);
    return a;
}

Arrangement catalog_quasi_pencil(int k) {
    if (k < 4) fail(ErrorCode::out_of_range, "quasi_pencil needs k >= 4");
    FieldContextPtr ctx = FieldContext::rationals();
    std::vector<HomogeneousPolynomial> lines;
    for (int i = 1; i <= k - 1; ++i)
        lines.push_back(linear_form(ctx, ctx->one(), ctx->zero(), ctx->from_int(-i)));
    lines.push_back(linear_form(ctx, ctx->zero(), ctx->one(), ctx->zero()));
    auto crossings = line_intersection_points(lines);
    Arrangement a = assemble_arrangement("quasi_pencil(" + std::to_string(k) + ")", 1, ctx,
                                         std::move(lines), crossings);
    require_verified(a);
    return a;
}

Arrangement catalog_hl(int k) {
    if (k < 5) fail(ErrorCode::out_of_range, "hl needs k >= 5");
    FieldContextPtr ctx = FieldContext::rationals();
    std::vector<HomogeneousPolynomial> lines;
    for (int i = 1; i <= k - 2; ++i)
        lines.push_back(linear_form(ctx, ctx->one(), ctx->zero(), ctx->from_int(-i)));
    lines.push_back(linear_form(ctx, ctx->zero(), ctx->one(), ctx->zero()));
    lines.push_back(linear_form(ctx, ctx->zero(), ctx->one(), ctx->from_int(-1)));
    auto crossings = line_intersection_points(lines);
    Arrangement a = assemble_arrangement("hl(" + std::to_string(k) + ")", 1, ctx,
                                         std::move(lines), crossings);
    require_verified(a);
    return a;
}

Arrangement catalog_pc65() {
    FieldContextPtr ctx = FieldContext::rationals();
    auto pt = [&](long x, long y, long z) {
        return ProjectivePoint(ctx->from_int(x), ctx->from_int(y), ctx->from_int(z));
    };
    std::vector<ProjectivePoint> pts{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1),
                                     pt(1, 1, 1), pt(1, 2, 3), pt(2, 3, 1)};

    // General position: no three collinear, no conic through all six.
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j) {
            HomogeneousPolynomial l = line_through(pts[i], pts[j]);
            for (size_t s = 0; s < 6; ++s)
                if (s != i && s != j && l.evaluate(pts[s]).is_zero())
                    fail(ErrorCode::genericity, "pc65: three of the six points are collinear");
        }
    {
        MultiplicityAssignment all;
        for (const auto& p : pts) all.emplace_back(p, 1);
        if (interpolate(2, all, ctx).dimension != 0)
            fail(ErrorCode::genericity, "pc65: the six points lie on a conic");
    }

    std::vector<HomogeneousPolynomial> conics;
    for (size_t skip = 0; skip < 6; ++skip) {
        MultiplicityAssignment asg;
        for (size_t i = 0; i < 6; ++i)
            if (i != skip) asg.emplace_back(pts[i], 1);
        auto sys = interpolate(2, asg, ctx);
        if (sys.dimension != 1 || conic_rank(sys.basis[0]) != 3)
            fail(ErrorCode::genericity, "pc65: a 5-subset fails to give a unique smooth conic");
        conics.push_back(sys.basis[0]);
    }
    Arrangement a = assemble_arrangement("pc65", 2, ctx, std::move(conics), pts);
    TVector expected{{5, 6}};
    if (a.comb.t != expected)
        fail(ErrorCode::genericity, "pc65: multiplicity census is not {5:6}");
    require_verified(a);
    return a;
}

const std::vector<SimplicialRow>& simplicial_rows() {
    auto make = [](std::string code, int k, TVector t, long en, long ed, bool cert) {
        return SimplicialRow{std::move(code), k, std::move(t), make_rational(en, ed), cert};
    };
    static const std::vector<SimplicialRow> rows = {
        make("A1(6)", 6, {{2, 3}, {3, 4}}, 1, 3, true),
        make("A1(7)", 7, {{2, 3}, {3, 6}}, 1, 4, false),
        make("A1(8)", 8, {{2, 4}, {3, 6}, {4, 1}}, 1, 4, false),
        make("A1(9)", 9, {{2, 6}, {3, 4}, {4, 3}}, 1, 4, false),
        make("A1(10)", 10, {{2, 5}, {3, 10}, {5, 1}}, 1, 5, false),
        make("A2(10)", 10, {{2, 6}, {3, 7}, {4, 3}}, 1, 6, false),
        make("A3(10)", 10, {{2, 6}, {3, 7}, {4, 3}}, 1, 5, false),
        make("A1(11)", 11, {{2, 7}, {3, 8}, {4, 4}}, 1, 6, false),
        make("A1(12)", 12, {{2, 6}, {3, 15}, {6, 1}}, 1, 6, false),
        make("A2(12)", 12, {{2, 8}, {3, 10}, {4, 3}, {5, 1}}, 1, 6, false),
        make("A3(12)", 12, {{2, 9}, {3, 7}, {4, 6}}, 1, 6, false),
    };
    return rows;
}

Arrangement catalog_simplicial(const std::string& code) {
    for (const auto& row : simplicial_rows())
        if (row.code == code) {
            Arrangement a;
            a.name = code;
            a.comb.d = 1;
            a.comb.k = row.k;
            a.comb.t = row.t;
            return a;
        }
    fail(ErrorCode::unknown_catalog, "unknown simplicial row '" + code + "'");
}

Arrangement build_catalog(const std::string& name, const CatalogParams& params) {
    auto need = [&](const std::optional<int>& v, const char* what) {
        if (!v) fail(ErrorCode::out_of_range,
                     name + " needs --" + std::string(what));
        return *v;
    };
    if (name == "fermat") return catalog_fermat(need(params.n, "n"));
    if (name == "dual_hesse") return catalog_dual_hesse();
    if (name == "hesse_conics") return catalog_hesse_conics();
    if (name == "star") return catalog_star(need(params.d, "d"), need(params.k, "k"));
    if (name == "quasi_pencil") return catalog_quasi_pencil(need(params.k, "k"));
    if (name == "hl") return catalog_hl(need(params.k, "k"));
    if (name == "pc65") return catalog_pc65();
    if (name == "simplicial") {
        if (!params.code)
            fail(ErrorCode::out_of_range, "simplicial needs --code (such as A1(10))");
        return catalog_simplicial(*params.code);
    }
    fail(ErrorCode::unknown_catalog, "unknown catalog entry '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"fermat", "--n N (N >= 2): 3N lines over Q(zeta_N)"},
        {"dual_hesse", "9 lines with t_3 = 12 over Q(zeta_3)"},
        {"hesse_conics", "12 conics with t_8 = 9, t_2 = 12 over a degree-6 field"},
        {"star", "--d D --k K: K degree-D curves with double points only (D = 1, 2)"},
        {"quasi_pencil", "--k K (K >= 4): t_{K-1} = 1, t_2 = K - 1"},
        {"hl", "--k K (K >= 5): t_{K-2} = 1, t_2 = 2K - 3"},
        {"pc65", "6 conics through 5-subsets of 6 general points, t_5 = 6"},
        {"simplicial", "--code ROW: combinatorial table rows A1(6) ... A3(12)"},
    };
}

} // namespace seshadri
