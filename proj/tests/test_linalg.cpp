#include <algorithm>
#include <random>

#include "doctest.h"

#include "seshadri/linalg.hpp"

using namespace seshadri;

namespace {

// Test-local oracle: plain Gaussian elimination with division, partial
// pivoting — an independent route to the same rank.
size_t gauss_rank(std::vector<std::vector<FieldElement>> rows, size_t cols) {
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        FieldElement inv = rows[rank][c].inverse();
        for (size_t l = rank + 1; l < rows.size(); ++l) {
            if (rows[l][c].is_zero()) continue;
            FieldElement f = rows[l][c] * inv;
            for (size_t cc = c; cc < cols; ++cc) rows[l][cc] = rows[l][cc] - f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

Matrix random_matrix(const FieldContextPtr& ctx, std::mt19937& rng, size_t max_rows,
                     size_t max_cols) {
    std::uniform_int_distribution<size_t> rdist(0, max_rows), cdist(1, max_cols);
    std::uniform_int_distribution<long> e(-9, 9);
    std::uniform_int_distribution<int> sparse(0, 2);
    size_t nrows = rdist(rng), ncols = cdist(rng);
    Matrix m(ctx, ncols);
    for (size_t i = 0; i < nrows; ++i) {
        std::vector<FieldElement> row;
        for (size_t j = 0; j < ncols; ++j)
            row.push_back(sparse(rng) == 0 ? ctx->zero() : ctx->from_int(e(rng)));
        m.add_row(std::move(row));
    }
    return m;
}

bool is_zero_vector(const std::vector<FieldElement>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<FieldElement> matvec(const Matrix& m, const std::vector<FieldElement>& v) {
    std::vector<FieldElement> out;
    for (const auto& row : m.rows) {
        FieldElement s = m.ctx->zero();
        for (size_t j = 0; j < m.cols; ++j) s = s + row[j] * v[j];
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("rank agrees with the division-based oracle on random matrices") {
    std::mt19937 rng(1357u);
    auto quartic = FieldContext::number_field(
        {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
    for (const auto& ctx : {FieldContext::rationals(), quartic}) {
        for (int i = 0; i < 60; ++i) {
            Matrix m = random_matrix(ctx, rng, 8, 10);
            CHECK(rank(m) == gauss_rank(m.rows, m.cols));
        }
    }
}

TEST_CASE("rank is invariant under >= 20 row shuffles") {
    std::mt19937 rng(8642u);
    auto ctx = FieldContext::rationals();
    Matrix m = random_matrix(ctx, rng, 10, 9);
    while (m.row_count() < 4) m = random_matrix(ctx, rng, 10, 9);
    size_t r = rank(m);
    for (int i = 0; i < 25; ++i) {
        Matrix shuffled(ctx, m.cols);
        auto rows = m.rows;
        std::shuffle(rows.begin(), rows.end(), rng);
        for (auto& row : rows) shuffled.add_row(std::move(row));
        CHECK(rank(shuffled) == r);
    }
}

TEST_CASE("kernel vectors actually solve M v = 0 and match rank-nullity") {
    std::mt19937 rng(2468u);
    auto quartic = FieldContext::number_field(
        {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
    for (const auto& ctx : {FieldContext::rationals(), quartic}) {
        for (int i = 0; i < 40; ++i) {
            Matrix m = random_matrix(ctx, rng, 7, 8);
            auto kernel = kernel_basis(m);
            CHECK(kernel.size() == m.cols - rank(m));
            for (const auto& v : kernel) {
                CHECK(!is_zero_vector(v));
                CHECK(is_zero_vector(matvec(m, v)));
            }
            // normalization: first nonzero entry is 1
            for (const auto& v : kernel) {
                size_t lead = 0;
                while (lead < v.size() && v[lead].is_zero()) ++lead;
                CHECK(lead < v.size());
                CHECK(v[lead].is_one());
            }
            // independence: the kernel vectors form a full-rank matrix
            if (!kernel.empty()) {
                Matrix km(ctx, m.cols);
                for (const auto& v : kernel) km.add_row(v);
                CHECK(rank(km) == kernel.size());
            }
        }
    }
}

TEST_CASE("known ranks: identity, repeated rows, zero matrix") {
    auto ctx = FieldContext::rationals();
    Matrix id(ctx, 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<FieldElement> row(4, ctx->zero());
        row[static_cast<size_t>(i)] = ctx->one();
        id.add_row(std::move(row));
    }
    CHECK(rank(id) == 4);
    CHECK(kernel_basis(id).empty());

    Matrix rep(ctx, 3);
    std::vector<FieldElement> r = {ctx->from_int(2), ctx->from_int(-1), ctx->from_int(7)};
    rep.add_row(r);
    rep.add_row(r);
    rep.add_row(r);
    CHECK(rank(rep) == 1);
    CHECK(kernel_basis(rep).size() == 2);

    Matrix zero(ctx, 5);
    CHECK(rank(zero) == 0);
    CHECK(kernel_basis(zero).size() == 5);
}

TEST_CASE("modular rank certificate is sound against exact ranks") {
    std::mt19937 rng(11111u);
    auto sextic = FieldContext::number_field({Rational(31), Rational(36), Rational(27),
                                              Rational(-4), Rational(9), Rational(0),
                                              Rational(1)});
    for (const auto& ctx : {FieldContext::rationals(), sextic}) {
        for (int i = 0; i < 20; ++i) {
            Matrix m = random_matrix(ctx, rng, 6, 6);
            size_t r = rank(m);
            for (size_t bound = 0; bound <= r; ++bound) {
                // the certificate may fail to certify, but must never certify
                // a bound above the true rank
                if (certify_rank_at_least(m, bound)) CHECK(bound <= r);
            }
            CHECK_FALSE(certify_rank_at_least(m, r + 1));
        }
    }
}
