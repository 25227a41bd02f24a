#pragma once

#include <cstdint>
#include <vector>

#include "seshadri/number_field.hpp"

namespace seshadri {

// Dense matrix over a field context. Rows may be empty (0 x n handled).
struct Matrix {
    FieldContextPtr ctx;
    size_t cols = 0;
    std::vector<std::vector<FieldElement>> rows;

    Matrix(FieldContextPtr c, size_t columns) : ctx(std::move(c)), cols(columns) {}
    void add_row(std::vector<FieldElement> row);
    size_t row_count() const { return rows.size(); }
};

// Exact rank via fraction-free (Bareiss) elimination, deterministic pivoting:
// columns left to right, first row with a nonzero entry scanning top-down.
size_t rank(const Matrix& m);

// Basis of the right kernel {v : M v = 0}; each vector normalized so its
// first nonzero entry (in column order) is 1. Deterministic.
std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m);

// One-sided exact rank certificate: proves rank(m) >= bound by exhibiting a
// nonzero bound-sized minor modulo a prime (a nonzero minor mod p lifts to a
// nonzero minor in characteristic 0). Returns true when certified; false
// means no tried prime worked, which proves nothing either way.
bool certify_rank_at_least(const Matrix& m, size_t bound);

} // namespace seshadri
