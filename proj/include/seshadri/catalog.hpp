#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/arrangement.hpp"

namespace seshadri {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Rational> cyclotomic(int n);

// 3n lines (x^n - y^n)(y^n - z^n)(x^n - z^n) over Q(zeta_n); n = 2 stays
// over Q. Singular locus: n^2 triple points plus the three coordinate
// vertices of multiplicity n.
Arrangement catalog_fermat(int n);

// The 9 lines with t_3 = 12 over Q(zeta_3).
Arrangement catalog_dual_hesse();

// The 12 conics with nine 8-fold points and 12 nodes over the degree-6
// field Q[u]/(u^6 + 9u^4 - 4u^3 + 27u^2 + 36u + 31): 21 hardcoded points,
// each cut out by a pair of linear forms; the conics are recovered by
// interpolation through 6-subsets of the nine 8-fold points.
Arrangement catalog_hesse_conics();

// k curves of degree d meeting pairwise transversally in double points only
// (t_2 = d^2 k(k-1)/2). d = 1: the lines x + iy + i^2 z over Q, any k >= 3.
// d = 2: explicit conic families for k = 3 (over Q) and k = 4, 5 (over
// Q(zeta_8), where the needed square roots of +-2^a live).
Arrangement catalog_star(int d, int k);

// k >= 4 lines with t_{k-1} = 1 and t_2 = k - 1, over Q.
Arrangement catalog_quasi_pencil(int k);

// k >= 5 lines with t_{k-2} = 1 and t_2 = 2k - 3, over Q.
Arrangement catalog_hl(int k);

// Six points in general position and the six conics through each 5-subset;
// t_5 = 6. General position is re-verified at build time.
Arrangement catalog_pc65();

// One row of the simplicial-arrangement table (combinatorial data only; the
// reference reports an epsilon value per row but ships no coordinates, so
// only A1(6) - realized by fermat(2) - is certified by this suite).
struct SimplicialRow {
    std::string code;
    int k = 0;
    TVector t;
    Rational reported_epsilon;
    bool certified = false;
};
const std::vector<SimplicialRow>& simplicial_rows();

// Combinatorial-only arrangement for a table row code such as "A1(10)".
Arrangement catalog_simplicial(const std::string& code);

// Name + parameter dispatch used by the CLI and the bindings.
struct CatalogParams {
    std::optional<int> n;
    std::optional<int> d;
    std::optional<int> k;
    std::optional<std::string> code;
};
Arrangement build_catalog(const std::string& name, const CatalogParams& params);

// Entry names with a one-line description of their parameters.
std::vector<std::pair<std::string, std::string>> catalog_entries();

} // namespace seshadri
