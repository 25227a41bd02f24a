#pragma once

#include <vector>

#include "seshadri/arrangement.hpp"
#include "seshadri/linalg.hpp"

namespace seshadri {

// (point, required multiplicity) with multiplicity >= 1; points pairwise
// distinct is the caller's contract (interpolate validates it).
using MultiplicityAssignment = std::vector<std::pair<ProjectivePoint, int>>;

// Conditions on degree-e forms: for each (p, m), one row per partial
// derivative of order m-1 (all C(m+1, 2) of them), columns indexed by the
// degree-e monomials in term order. Vanishing of all order-(m-1) partials at
// p forces multiplicity >= m.
Matrix conditions_matrix(int degree, const MultiplicityAssignment& assignment,
                         const FieldContextPtr& ctx);

struct InterpolationResult {
    int degree = 0;
    size_t ambient = 0;    // C(degree+2, 2)
    size_t conditions = 0; // rows of the matrix
    size_t rank = 0;
    size_t dimension = 0;  // ambient - rank (vector-space dimension)
    std::vector<HomogeneousPolynomial> basis;
};

// Exact solve of the fat-point interpolation problem. Every basis element is
// re-verified against the multiplicity conditions via multiplicity_at; a
// discrepancy is an internal-consistency error.
InterpolationResult interpolate(int degree, const MultiplicityAssignment& assignment,
                                const FieldContextPtr& ctx);

struct UniqueMemberReport {
    size_t ambient = 0;
    size_t conditions = 0;
    bool unique = false;        // dimension == 1, certified
    bool certified = false;     // false only if no method could decide
    size_t dimension = 0;       // exact when certified via elimination; 1 when
                                // certified via the rank certificate
    std::string method;         // "elimination" or "product-member+rank-certificate"
    bool basis_matches_product = false;
    std::string detail;
};

// Does the degree d*k system with the arrangement's own multiplicities have
// vector-space dimension exactly 1 (so the product of the curves is its only
// member)? Small systems: exact elimination + random-evaluation comparison of
// the basis element with the product. Large systems (ambient > 128):
// dimension >= 1 from the product itself (its multiplicity at each point is
// the number of incident curves, all verified smooth there) and
// dimension <= 1 from an exact modular rank certificate.
UniqueMemberReport unique_member_check(const Arrangement& a);

} // namespace seshadri
