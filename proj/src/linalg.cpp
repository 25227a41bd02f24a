#include "seshadri/linalg.hpp"

#include <algorithm>
#include <optional>

namespace seshadri {

void Matrix::add_row(std::vector<FieldElement> row) {
    if (row.size() != cols)
        fail(ErrorCode::invalid_spec, "row length does not match matrix column count");
    rows.push_back(std::move(row));
}

namespace {

struct Echelon {
    std::vector<std::vector<FieldElement>> rows; // echelon form
    std::vector<size_t> pivot_cols;              // col of pivot of row i
};

// Fraction-free elimination (two-term Bareiss updates, dividing by the
// previous pivot). Exact over any field; entries stay minors of the input,
// which keeps coordinate growth additive rather than multiplicative.
Echelon echelon_form(const Matrix& m) {
    Echelon e;
    e.rows = m.rows;
    const size_t nrows = e.rows.size();
    FieldElement prev = m.ctx->one();
    size_t rank_rows = 0;
    for (size_t col = 0; col < m.cols && rank_rows < nrows; ++col) {
        size_t pivot = rank_rows;
        while (pivot < nrows && e.rows[pivot][col].is_zero()) ++pivot;
        if (pivot == nrows) continue;
        std::swap(e.rows[rank_rows], e.rows[pivot]);
        const FieldElement& pv = e.rows[rank_rows][col];
        for (size_t r = rank_rows + 1; r < nrows; ++r) {
            FieldElement head = e.rows[r][col];
            // Skip columns left of `col`: already zero below earlier pivots.
            for (size_t c = col; c < m.cols; ++c)
                e.rows[r][c] = (e.rows[r][c] * pv - head * e.rows[rank_rows][c]) / prev;
        }
        prev = pv;
        e.pivot_cols.push_back(col);
        ++rank_rows;
    }
    return e;
}

} // namespace

size_t rank(const Matrix& m) {
    if (m.rows.empty()) return 0;
    return echelon_form(m).pivot_cols.size();
}

std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m) {
    std::vector<std::vector<FieldElement>> basis;
    const auto& ctx = m.ctx;
    if (m.rows.empty()) {
        // Whole space: standard basis vectors, already normalized.
        for (size_t j = 0; j < m.cols; ++j) {
            std::vector<FieldElement> v(m.cols, ctx->zero());
            v[j] = ctx->one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;

    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(m.cols, ctx->zero());
        v[free_col] = ctx->one();
        // Back-substitute through pivot rows, bottom-up.
        for (size_t i = e.pivot_cols.size(); i-- > 0;) {
            size_t pc = e.pivot_cols[i];
            if (pc > free_col) continue; // later pivots see only zeros here
            FieldElement acc = ctx->zero();
            for (size_t c = pc + 1; c <= free_col; ++c) {
                if (v[c].is_zero()) continue;
                acc = acc + e.rows[i][c] * v[c];
            }
            v[pc] = -(acc / e.rows[i][pc]);
        }
        // Normalize first nonzero entry to 1.
        for (size_t c = 0; c < m.cols; ++c) {
            if (!v[c].is_zero()) {
                FieldElement inv = v[c].inverse();
                for (size_t c2 = c; c2 < m.cols; ++c2) v[c2] = v[c2] * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// ---- modular arithmetic over a word-size prime --------------------------

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = (__uint128_t)acc * b % p;
        b = (__uint128_t)b * b % p;
        e >>= 1;
    }
    return acc;
}

uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = mod_pow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (__uint128_t)x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Rational -> F_p; nullopt when the denominator vanishes mod p.
std::optional<uint64_t> mod_rational(const Rational& q, uint64_t p) {
    mpz_class num = q.get_num() % static_cast<long>(p);
    mpz_class den = q.get_den() % static_cast<long>(p);
    uint64_t d = (den.get_si() % static_cast<long>(p) + static_cast<long>(p)) % p;
    if (d == 0) return std::nullopt;
    uint64_t n = (num.get_si() % static_cast<long>(p) + static_cast<long>(p)) % p;
    return (__uint128_t)n * mod_inv(d, p) % p;
}

// Root of the context's minimal polynomial mod p, if any (u -> root gives a
// ring homomorphism into F_p). Plain Q (or degree 1) maps trivially.
std::optional<uint64_t> minpoly_root_mod_p(const FieldContext& ctx, uint64_t p) {
    if (ctx.is_rational_field()) return 0;
    std::vector<uint64_t> f;
    for (const auto& c : ctx.minpoly()) {
        auto m = mod_rational(c, p);
        if (!m) return std::nullopt;
        f.push_back(*m);
    }
    auto eval = [&](uint64_t x) {
        uint64_t acc = 0;
        for (size_t i = f.size(); i-- > 0;) acc = ((__uint128_t)acc * x + f[i]) % p;
        return acc;
    };
    for (uint64_t x = 0; x < p; ++x)
        if (eval(x) == 0) return x;
    return std::nullopt;
}

std::optional<uint64_t> mod_element(const FieldElement& e, uint64_t root, uint64_t p) {
    uint64_t acc = 0;
    const auto& c = e.coords();
    for (size_t i = c.size(); i-- > 0;) {
        auto m = mod_rational(c[i], p);
        if (!m) return std::nullopt;
        acc = ((__uint128_t)acc * root + *m) % p;
    }
    return acc;
}

size_t rank_mod_p(std::vector<std::vector<uint64_t>>& a, uint64_t p) {
    const size_t nrows = a.size();
    if (nrows == 0) return 0;
    const size_t ncols = a[0].size();
    size_t rank_rows = 0;
    for (size_t col = 0; col < ncols && rank_rows < nrows; ++col) {
        size_t pivot = rank_rows;
        while (pivot < nrows && a[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(a[rank_rows], a[pivot]);
        uint64_t inv = mod_inv(a[rank_rows][col], p);
        for (size_t r = rank_rows + 1; r < nrows; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t f = (__uint128_t)a[r][col] * inv % p;
            for (size_t c = col; c < ncols; ++c) {
                uint64_t sub = (__uint128_t)f * a[rank_rows][c] % p;
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        ++rank_rows;
    }
    return rank_rows;
}

} // namespace

bool certify_rank_at_least(const Matrix& m, size_t bound) {
    if (bound == 0) return true;
    if (bound > std::min(m.rows.size(), m.cols)) return false;
    // Fixed deterministic prime sequence; each prime needs a root of the
    // minimal polynomial and all denominators invertible.
    uint64_t p = 1000003;
    for (int attempt = 0; attempt < 40; ++attempt, ++p) {
        while (!is_prime(p)) ++p;
        auto root = minpoly_root_mod_p(*m.ctx, p);
        if (!root) { continue; }
        std::vector<std::vector<uint64_t>> a;
        a.reserve(m.rows.size());
        bool ok = true;
        for (const auto& row : m.rows) {
            std::vector<uint64_t> r;
            r.reserve(m.cols);
            for (const auto& e : row) {
                auto v = mod_element(e, *root, p);
                if (!v) { ok = false; break; }
                r.push_back(*v);
            }
            if (!ok) break;
            a.push_back(std::move(r));
        }
        if (!ok) continue;
        if (rank_mod_p(a, p) >= bound) return true;
    }
    return false;
}

} // namespace seshadri
