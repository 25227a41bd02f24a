#include "doctest.h"

#include "seshadri/catalog.hpp"
#include "seshadri/certificates.hpp"

using namespace seshadri;

namespace {

std::vector<ProjectivePoint> centers(const Arrangement& a) {
    std::vector<ProjectivePoint> z;
    for (const auto& ip : a.points) z.push_back(ip.point);
    return z;
}

} // namespace

TEST_CASE("ratio of a member line against the six-line quadrilateral") {
    Arrangement f2 = catalog_fermat(2);
    auto z = centers(f2);
    // x - y passes two triple points and one double point
    RatioReport r = ratio_of(f2.curves[0], z, Irreducibility::component_of_arrangement);
    CHECK(r.degree == 1);
    CHECK(r.mult_sum == 3);
    CHECK(r.ratio == make_rational(1, 3));

    HomogeneousPolynomial zero(f2.ctx, 1);
    CHECK_THROWS_AS(ratio_of(zero, z, Irreducibility::line), Error);
}

TEST_CASE("ratio errors when the curve misses every center") {
    Arrangement s = catalog_star(1, 3);
    auto z = centers(s);
    HomogeneousPolynomial far(s.ctx, 1);
    far.add_term({1, 0, 0}, s.ctx->one());
    far.add_term({0, 1, 0}, s.ctx->from_int(977));
    far.add_term({0, 0, 1}, s.ctx->from_int(1901));
    CHECK_THROWS_AS(ratio_of(far, z, Irreducibility::line), Error);
}

TEST_CASE("line search finds the pencil line of a quasi-pencil") {
    Arrangement qp = catalog_quasi_pencil(5);
    LineSearchResult res = search_lines(centers(qp));
    CHECK(res.best.ratio == make_rational(1, 4));
    CHECK(res.best.mult_sum == 4);
    CHECK(res.mpl == 4);
    // every line candidate really passes >= 2 of the points
    for (const auto& r : res.candidates) CHECK(r.mult_sum >= 2);
}

TEST_CASE("conic search on six general points") {
    Arrangement a = catalog_pc65();
    ConicSearchResult res = search_conics(centers(a));
    REQUIRE(res.found);
    CHECK(res.best->ratio == make_rational(2, 5));
    CHECK(res.best->mult_sum == 5);
    CHECK(res.candidates.size() == 6); // one conic per 5-subset
    for (const auto& r : res.candidates) CHECK(conic_rank(r.curve) == 3);
}

TEST_CASE("conic search needs five points") {
    Arrangement s = catalog_star(1, 3);
    ConicSearchResult res = search_conics(centers(s));
    CHECK_FALSE(res.found);
}

TEST_CASE("arrangement-Bezout certificates on the line catalogs") {
    Arrangement f3 = catalog_fermat(3);
    LowerBoundCertificate c = arrangement_bezout_bound(f3);
    CHECK(c.kind == CertificateKind::arrangement_bezout);
    CHECK(c.min_mult == 3);
    CHECK(c.bound == make_rational(1, 4)); // min(3/9, member 1/4)
    CHECK(c.exhibited.size() == 9);

    Arrangement pc = catalog_pc65();
    c = arrangement_bezout_bound(pc);
    CHECK(c.min_mult == 5);
    CHECK(c.bound == make_rational(2, 5)); // min(5/12, component 2/5)
}

TEST_CASE("interpolating-curve certificates validate their factors") {
    Arrangement s = catalog_star(1, 3);
    auto z = centers(s);
    LowerBoundCertificate c = interpolating_curve_bound(z, s.curves);
    CHECK(c.kind == CertificateKind::interpolating_curve);
    CHECK(c.total_degree == 3);
    CHECK(c.bound == make_rational(1, 3)); // min(1/3, member ratios 1/2)

    // a single member misses the intersection point of the other two
    std::vector<HomogeneousPolynomial> partial = {s.curves[0]};
    CHECK_THROWS_AS(interpolating_curve_bound(z, partial), Error);

    // degenerate conics and high-degree factors are rejected
    std::vector<HomogeneousPolynomial> degenerate = {s.curves[0] * s.curves[1],
                                                     s.curves[2]};
    CHECK_THROWS_AS(interpolating_curve_bound(z, degenerate), Error);
    std::vector<HomogeneousPolynomial> cubic = {s.curves[0] * s.curves[1] * s.curves[2]};
    CHECK_THROWS_AS(interpolating_curve_bound(z, cubic), Error);
}

TEST_CASE("compute_seshadri certifies the expected exact values") {
    struct Case {
        Arrangement a;
        Rational expected;
        CertificateKind kind;
    };
    std::vector<Case> cases;
    cases.push_back({catalog_fermat(2), make_rational(1, 3), CertificateKind::arrangement_bezout});
    cases.push_back({catalog_fermat(3), make_rational(1, 4), CertificateKind::arrangement_bezout});
    cases.push_back({catalog_star(1, 3), make_rational(1, 2), CertificateKind::arrangement_bezout});
    cases.push_back({catalog_star(1, 5), make_rational(1, 4), CertificateKind::arrangement_bezout});
    cases.push_back({catalog_star(2, 3), make_rational(1, 4), CertificateKind::arrangement_bezout});
    cases.push_back({catalog_quasi_pencil(5), make_rational(1, 4),
                     CertificateKind::arrangement_bezout});
    cases.push_back({catalog_hl(6), make_rational(1, 5), CertificateKind::arrangement_bezout});
    cases.push_back({catalog_pc65(), make_rational(2, 5), CertificateKind::arrangement_bezout});
    for (const auto& c : cases) {
        SeshadriResult r = compute_seshadri(c.a, 1);
        REQUIRE_MESSAGE(r.exact.has_value(), c.a.name);
        CHECK_MESSAGE(*r.exact == c.expected, c.a.name);
        CHECK(r.certificate.kind == c.kind);
        CHECK(r.lower == r.upper);
    }
}

TEST_CASE("lower <= upper on every result, exact set only on equality") {
    for (int d = 1; d <= 2; ++d)
        for (int k = 3; k <= 5; ++k) {
            SeshadriResult r = compute_seshadri(catalog_star(d, k), 1);
            CHECK(r.lower <= r.upper);
            CHECK(r.exact.has_value() == (r.lower == r.upper));
            REQUIRE(r.exact.has_value());
            CHECK(*r.exact == make_rational(1, d * (k - 1)));
        }
}

TEST_CASE("certified values never exceed the configurational value") {
    std::vector<Arrangement> entries;
    entries.push_back(catalog_fermat(2));
    entries.push_back(catalog_fermat(3));
    entries.push_back(catalog_star(1, 4));
    entries.push_back(catalog_star(2, 4));
    entries.push_back(catalog_quasi_pencil(5));
    entries.push_back(catalog_hl(6));
    entries.push_back(catalog_pc65());
    for (const auto& a : entries) {
        SeshadriResult r = compute_seshadri(a, 1);
        REQUIRE_MESSAGE(r.exact.has_value(), a.name);
        CHECK_MESSAGE(*r.exact <= epsilon_config(a.comb), a.name);
    }
}

TEST_CASE("naive probe: 1/bs equals the certified value exactly when it should") {
    Arrangement s = catalog_star(1, 4);
    SeshadriResult rs = compute_seshadri(s, 1);
    NaiveEqualityReport rep = naive_equality_probe(s, rs);
    CHECK(rep.bs == 3);
    CHECK(rep.naive == make_rational(1, 3));
    CHECK(rep.equal);
    CHECK(rep.star_value == make_rational(1, 3));
    CHECK(rep.star_naive_value == make_rational(1, 3));

    Arrangement pc = catalog_pc65();
    SeshadriResult rp = compute_seshadri(pc, 1);
    rep = naive_equality_probe(pc, rp);
    CHECK(rep.bs == 5);
    CHECK(rep.naive == make_rational(1, 5));
    CHECK_FALSE(rep.equal); // 1/5 != 2/5: the naive guess fails here

    Arrangement s2 = catalog_star(2, 3);
    rep = naive_equality_probe(s2, compute_seshadri(s2, 1));
    CHECK(rep.star_value == make_rational(1, 4));       // 1/(d(k-1))
    CHECK(rep.star_naive_value == make_rational(1, 8)); // 1/(d^2(k-1))
    CHECK_FALSE(rep.equal);
}
