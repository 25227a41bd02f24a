#pragma once

#include <string>

#include "json.hpp"

#include "seshadri/arrangement.hpp"
#include "seshadri/certificates.hpp"

namespace seshadri {

// Insertion-ordered JSON keeps every serialization deterministic.
using Json = nlohmann::ordered_json;

// field: {"type":"rational"} or {"type":"number_field","minpoly":[rationals]}
Json field_to_json(const FieldContextPtr& ctx);
FieldContextPtr field_from_json(const Json& j, const std::string& path);

// element: array of rational strings, coordinate i multiplying u^i
Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const FieldContextPtr& ctx, const Json& j,
                               const std::string& path);

// polynomial: {"degree": e, "coefficients": [element, ...]} over the degree-e
// monomials in term order
Json polynomial_to_json(const HomogeneousPolynomial& f);
HomogeneousPolynomial polynomial_from_json(const FieldContextPtr& ctx, const Json& j,
                                           const std::string& path);

// Arrangement file: {"name", "field", "d", "k", "combinatorics": {"t": {...}},
// "curves": [...], "points": [{"coords", "curves"}]}; curves/points optional
// (combinatorial-only). Lines with curves but no points get their singular
// locus computed; degree >= 2 geometry must list its points.
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);
Arrangement load_arrangement(const std::string& file_path);

Json ratio_report_to_json(const RatioReport& r);
Json certificate_to_json(const LowerBoundCertificate& c);

// Self-contained two-sided certificate: the field, the centers with their
// arrangement multiplicities, both bounds and every witness polynomial -
// enough to re-verify without rebuilding the arrangement.
Json seshadri_result_to_json(const Arrangement& a, const SeshadriResult& r);

struct CertificateCheck {
    bool ok = false;
    std::string detail;
};
// Re-verifies a stored certificate from scratch: multiplicities, ratios,
// coverage and irreducibility are all recomputed. Malformed JSON raises a
// parse error; a certificate that parses but does not hold returns ok=false.
CertificateCheck verify_certificate(const Json& j);

Json read_json_file(const std::string& file_path);
void write_json_file(const Json& j, const std::string& file_path);

} // namespace seshadri
