#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/geometry.hpp"

namespace seshadri {

// t[r] = number of points where exactly r curves meet; keys r >= 2, counts >= 1.
using TVector = std::map<int, long long>;

struct CombinatorialArrangement {
    int d = 1; // common degree of the curves
    int k = 0; // number of curves
    TVector t;
};

// A singular point of the union, with the (sorted, 0-based) indices of the
// curves through it; its multiplicity is the number of incident curves.
struct IncidencePoint {
    ProjectivePoint point;
    std::vector<int> curves;

    int multiplicity() const { return static_cast<int>(curves.size()); }
};

// Arrangement with an optional geometric layer. Catalog entries marked
// combinatorial-only and file inputs without curves carry no geometry;
// operations that need it fail with missing_geometry.
struct Arrangement {
    std::string name;
    CombinatorialArrangement comb;

    FieldContextPtr ctx; // null when combinatorial-only
    std::vector<HomogeneousPolynomial> curves;
    std::vector<IncidencePoint> points;

    bool has_geometry() const { return ctx != nullptr; }
    void require_geometry(const char* op) const {
        if (!has_geometry())
            fail(ErrorCode::missing_geometry, std::string(op) + " needs curves and points");
    }
};

// ---- reports -------------------------------------------------------------

struct CheckResult {
    bool passed = false;
    std::string detail;
};

struct InequalityResult {
    bool applicable = false; // hypotheses met?
    bool passed = false;     // meaningful only when applicable
    std::string detail;
};

struct BoundResult {
    Rational bound;
    bool hypotheses_met = false;
    std::string note;
};

struct GeometryReport {
    bool passed = false;
    TVector recomputed_t;
    std::vector<std::string> failures;
};

// ---- combinatorial operations ---------------------------------------------

// Pairwise-intersection identity: d^2 * C(k,2) == sum_r C(r,2) * t_r.
CheckResult validate_combinatorics(const CombinatorialArrangement& a);

// Per-curve identity d^2 (k-1) = sum over points on the curve of (m_p - 1);
// needs geometry (incidences).
CheckResult per_curve_check(const Arrangement& a);

// f0 = number of singular points, f1 = sum of their multiplicities.
std::pair<long long, long long> f_numbers(const CombinatorialArrangement& a);

// d*k / f1; f1 = 0 is an error (no singular points).
Rational epsilon_config(const CombinatorialArrangement& a);

// Largest number of singular points on a single curve; needs geometry.
int base_constant(const Arrangement& a);

// Line-arrangement inequality (d = 1, k >= 6, t_k = t_{k-1} = 0):
// t2 + t3 >= k + sum_{r>=4} (r-4) t_r.
InequalityResult hirzebruch_check(const CombinatorialArrangement& a);

// Curve-arrangement inequality (d >= 2, k >= 3, t_k = 0):
// (7d/2 - 9/2) d k + t2 + t3 >= sum_{r>=4} (r-4) t_r.
InequalityResult prsz_check(const CombinatorialArrangement& a);

// Lower bound 2 / (4dk + 3d - 9) for the configurational Seshadri constant.
// k >= 3 required; hypotheses_met records the inequality regime backing the
// bound (d >= 2: t_k = 0; d = 1: the line-arrangement hypotheses above).
BoundResult theorem_lower_bound(const CombinatorialArrangement& a);

// Full geometric verification: listed points pairwise distinct and lying on
// exactly their listed curves, each incident curve smooth there with pairwise
// distinct tangents, the t-vector recomputed from the incidences matches, and
// no point lies on all k curves.
GeometryReport verify_geometry(const Arrangement& a);

// Helper used by builders and loaders: given curves of equal degree and a set
// of candidate points, recompute incidences by evaluation and build the point
// list (keeping points on >= 2 curves) and the t-vector.
Arrangement assemble_arrangement(std::string name, int d, FieldContextPtr ctx,
                                 std::vector<HomogeneousPolynomial> curves,
                                 const std::vector<ProjectivePoint>& candidate_points);

// All pairwise intersection points of an arrangement of lines (d = 1), used
// by builders; the singular locus of a line arrangement is computable.
std::vector<ProjectivePoint> line_intersection_points(const std::vector<HomogeneousPolynomial>& lines);

} // namespace seshadri
