#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/arrangement.hpp"

namespace seshadri {

// Why a candidate curve is known to be irreducible. Degree 1 is automatic,
// degree 2 needs full rank of its symmetric matrix, arrangement members are
// smooth by hypothesis. "assumed" is accepted on input but never produced.
enum class Irreducibility { line, smooth_conic, component_of_arrangement, assumed };

const char* irreducibility_name(Irreducibility ev);
Irreducibility irreducibility_from_name(const std::string& name);

// One candidate curve measured against a point set: deg(D) / sum of the
// multiplicities of D at the points it meets.
struct RatioReport {
    HomogeneousPolynomial curve; // stored normalized
    int degree = 0;
    long long mult_sum = 0;
    Rational ratio;
    Irreducibility irreducibility = Irreducibility::assumed;
};

// Exact ratio of D against Z, multiplicities recomputed from scratch.
// Errors with no_incidence if D misses every point of Z.
RatioReport ratio_of(const HomogeneousPolynomial& d, const std::vector<ProjectivePoint>& z,
                     Irreducibility evidence);

// Lines through all point pairs of Z, deduplicated. `candidates` is sorted by
// (ratio, polynomial); `best` is its front; mpl is the maximal number of
// collinear points. Ties broken by graded-lex-smallest normalized line.
struct LineSearchResult {
    RatioReport best;
    int mpl = 0;
    std::vector<RatioReport> candidates;
};
LineSearchResult search_lines(const std::vector<ProjectivePoint>& z);

// Smooth conics interpolated through 5-subsets of Z (subsets containing a
// collinear triple are skipped: their conic is forced to be degenerate).
// found = false when |Z| < 5 or no subset yields a smooth conic.
struct ConicSearchResult {
    bool found = false;
    std::optional<RatioReport> best;
    std::vector<RatioReport> candidates;
};
ConicSearchResult search_conics(const std::vector<ProjectivePoint>& z);

// Ratio of every arrangement curve against the singular locus.
std::vector<RatioReport> component_ratios(const Arrangement& a);

enum class CertificateKind { arrangement_bezout, interpolating_curve };

// A certified lower bound for the multipoint Seshadri constant at Z.
//
// arrangement-bezout: for any irreducible D not a component,
//   e*dk = D.C >= sum_p m_p(D) m_p(C) >= min_mult * sum_p m_p(D),
// so ratio(D) >= min_mult/deg(C); components are covered by `exhibited`.
//
// interpolating-curve: the factors multiply to a degree-q curve through all
// of Z, so any irreducible D that is not a factor has
//   e*q = D.Q >= sum_p m_p(D) m_p(Q) >= sum_p m_p(D),
// i.e. ratio(D) >= 1/q; the factors themselves are covered by `exhibited`.
struct LowerBoundCertificate {
    CertificateKind kind = CertificateKind::arrangement_bezout;
    Rational bound;

    // arrangement-bezout only
    int min_mult = 0;

    // interpolating-curve only
    std::vector<std::pair<HomogeneousPolynomial, Irreducibility>> factors;
    int total_degree = 0;

    std::vector<RatioReport> exhibited;
};

// Bézout against the full arrangement divisor. Needs geometry and t_k = 0.
LowerBoundCertificate arrangement_bezout_bound(const Arrangement& a);

// Bézout against an explicit product of lines and smooth conics through all
// of Z. Factors of degree > 2 (or degenerate conics) are rejected with
// unsupported_factor; a point of Z missed by the product is an
// invalid_certificate error.
LowerBoundCertificate interpolating_curve_bound(const std::vector<ProjectivePoint>& z,
                                                const std::vector<HomogeneousPolynomial>& factors);

struct SeshadriResult {
    Rational lower;
    LowerBoundCertificate certificate;
    Rational upper;
    RatioReport witness;
    std::optional<Rational> exact; // set iff lower == upper
};

// Two-sided estimate of the multipoint Seshadri constant at the singular
// locus: upper bound from the best curve found (components, lines, and with
// max_search_degree = 2 smooth conics), lower bound from the best
// certificate. When the Bézout certificate falls short, searches for a
// product of found lines/conics/low-degree components covering Z whose total
// degree q keeps 1/q at the upper bound.
SeshadriResult compute_seshadri(const Arrangement& a, int max_search_degree);

// Compares the certified value against 1/bs(C) (bs = maximal number of
// singular points on one curve), plus the two reference values a d-star
// arrangement would put on each side of that comparison.
struct NaiveEqualityReport {
    long long bs = 0;
    Rational naive;   // 1/bs
    Rational epsilon; // the certified exact value
    bool equal = false;
    Rational star_value;       // 1/(d(k-1)): certified for d-stars
    Rational star_naive_value; // 1/(d^2(k-1)): what 1/bs gives on a d-star
};
NaiveEqualityReport naive_equality_probe(const Arrangement& a, const SeshadriResult& r);

} // namespace seshadri
