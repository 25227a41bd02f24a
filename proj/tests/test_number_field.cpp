#include <random>
#include <vector>

#include "doctest.h"

#include "seshadri/number_field.hpp"

using namespace seshadri;

namespace {

// Test-local oracle: coordinate polynomials multiplied as plain univariate
// polynomials, then long-divided by the monic minimal polynomial.
std::vector<Rational> oracle_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 const std::vector<Rational>& minpoly) {
    size_t n = minpoly.size() - 1;
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    for (size_t top = prod.size(); top-- > n;) {
        Rational c = prod[top];
        if (sgn(c) == 0) continue;
        prod[top] = 0;
        for (size_t i = 0; i < n; ++i) prod[top - n + i] -= c * minpoly[i];
    }
    prod.resize(n);
    return prod;
}

std::vector<Rational> rationals_from(const std::vector<long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

FieldContextPtr quartic() {
    return FieldContext::number_field(rationals_from({1, 0, 0, 0, 1})); // u^4 + 1
}

FieldContextPtr sextic() {
    return FieldContext::number_field(rationals_from({31, 36, 27, -4, 9, 0, 1}));
}

FieldElement random_element(const FieldContextPtr& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 5);
    std::vector<Rational> coords;
    for (int i = 0; i < ctx->degree(); ++i) coords.push_back(make_rational(num(rng), den(rng)));
    return ctx->element(std::move(coords));
}

} // namespace

TEST_CASE("field axioms hold on >= 1200 randomized cases") {
    std::mt19937 rng(97531u);
    for (const auto& ctx : {FieldContext::rationals(), quartic(), sextic()}) {
        const FieldElement zero = ctx->zero(), one = ctx->one();
        for (int i = 0; i < 400; ++i) {
            FieldElement a = random_element(ctx, rng);
            FieldElement b = random_element(ctx, rng);
            FieldElement c = random_element(ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a - a == zero);
            CHECK(a * zero == zero);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == one);
                CHECK(a / a == one);
            }
        }
    }
}

TEST_CASE("products match the univariate long-division oracle") {
    std::mt19937 rng(24680u);
    for (const auto& ctx : {quartic(), sextic()}) {
        for (int i = 0; i < 300; ++i) {
            FieldElement a = random_element(ctx, rng);
            FieldElement b = random_element(ctx, rng);
            CHECK((a * b).coords() == oracle_mul(a.coords(), b.coords(), ctx->minpoly()));
        }
    }
}

TEST_CASE("powers agree with repeated multiplication") {
    std::mt19937 rng(11223u);
    auto ctx = quartic();
    for (int i = 0; i < 50; ++i) {
        FieldElement a = random_element(ctx, rng);
        FieldElement acc = ctx->one();
        for (int e = 0; e <= 6; ++e) {
            CHECK(a.pow(e) == acc);
            acc = acc * a;
        }
    }
}

TEST_CASE("eighth roots of unity in Q[u]/(u^4+1)") {
    auto ctx = quartic();
    FieldElement u = ctx->generator();
    CHECK(u.pow(4) == -ctx->one());
    CHECK(u.pow(8) == ctx->one());
    FieldElement sqrt2 = u - u.pow(3);
    CHECK(sqrt2 * sqrt2 == ctx->from_int(2));
    FieldElement i = u.pow(2);
    CHECK(i * i == -ctx->one());
}

TEST_CASE("the degree-6 context carries a primitive cube root of unity") {
    auto ctx = sextic();
    FieldElement alpha = ctx->element(rationals_from({181, 182, -26, 40, -1, 4}));
    FieldElement beta = ctx->element(rationals_from({-1, -182, 26, -40, 1, -4}));
    CHECK(alpha + beta == ctx->from_int(180));
    FieldElement omega = (-alpha) / ctx->from_int(180);
    FieldElement omega_bar = (-beta) / ctx->from_int(180);
    CHECK(omega != ctx->one());
    CHECK(omega.pow(3) == ctx->one());
    CHECK(omega * omega_bar == ctx->one());
    CHECK(omega * omega == omega_bar);
}

TEST_CASE("element serialization round-trips") {
    std::mt19937 rng(5150u);
    for (const auto& ctx : {FieldContext::rationals(), quartic(), sextic()}) {
        for (int i = 0; i < 40; ++i) {
            FieldElement a = random_element(ctx, rng);
            CHECK(parse_element(ctx, serialize_element(a)) == a);
        }
    }
    CHECK(to_string(quartic()->one()) == "1");
}

TEST_CASE("context discipline and construction errors") {
    auto q4 = quartic();
    CHECK_THROWS_AS(FieldContext::rationals()->one() + q4->one(), Error);
    CHECK_THROWS_AS(q4->element({Rational(1)}), Error); // wrong coordinate count
    CHECK_THROWS_AS(FieldContext::number_field(rationals_from({2, 3})), Error); // not monic
    CHECK_THROWS_AS(FieldContext::number_field(rationals_from({1})), Error);    // degree 0
    CHECK_THROWS_AS(q4->zero().inverse(), Error);
}

TEST_CASE("a reducible modulus reports zero divisors on inversion") {
    auto ctx = FieldContext::number_field(rationals_from({-1, 0, 1})); // u^2 - 1
    FieldElement zd = ctx->generator() - ctx->one();
    CHECK_THROWS_AS(zd.inverse(), Error);
}

TEST_CASE("deterministic element ordering is a total order") {
    std::mt19937 rng(31415u);
    auto ctx = quartic();
    for (int i = 0; i < 200; ++i) {
        FieldElement a = random_element(ctx, rng), b = random_element(ctx, rng);
        int ab = FieldElement::compare(a, b), ba = FieldElement::compare(b, a);
        CHECK(ab == -ba);
        CHECK((ab == 0) == (a == b));
    }
}
