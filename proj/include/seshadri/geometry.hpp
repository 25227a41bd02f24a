#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "seshadri/number_field.hpp"

namespace seshadri {

// Exponent triple (a, b, c) of x^a y^b z^c.
using Exp = std::array<int, 3>;

// Graded-lex term order with x > y > z: higher total degree first, then
// lexicographically larger exponent first. Serialization, coefficient
// vectors and normalization all follow this order.
struct TermOrder {
    bool operator()(const Exp& l, const Exp& r) const {
        int dl = l[0] + l[1] + l[2], dr = r[0] + r[1] + r[2];
        if (dl != dr) return dl > dr;
        return l > r; // array lexicographic; x first
    }
};

// All degree-e exponent triples, in term order.
std::vector<Exp> monomials_of_degree(int e);

class ProjectivePoint;

// Homogeneous polynomial in x, y, z over a field context. Zero polynomials
// are allowed (empty term map) so linear algebra can hand us its results;
// most geometric operations reject them explicitly.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(FieldContextPtr ctx, int degree)
        : ctx_(std::move(ctx)), degree_(degree) {}
    // From a coefficient vector over monomials_of_degree(degree).
    static HomogeneousPolynomial from_coefficients(const FieldContextPtr& ctx, int degree,
                                                   const std::vector<FieldElement>& coeffs);

    const FieldContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, FieldElement, TermOrder>& terms() const { return terms_; }

    // Adds `coeff * x^a y^b z^c`; drops the term if the total cancels.
    void add_term(const Exp& exp, const FieldElement& coeff);
    FieldElement coefficient(const Exp& exp) const;
    std::vector<FieldElement> coefficient_vector() const;

    FieldElement evaluate(const ProjectivePoint& p) const;
    FieldElement evaluate(const std::array<FieldElement, 3>& coords) const;
    HomogeneousPolynomial derivative(int var) const;
    // Scaled so the first nonzero coefficient in term order is 1.
    HomogeneousPolynomial normalized() const;
    HomogeneousPolynomial scaled(const FieldElement& s) const;

    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b);
    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

    // Deterministic total order for tie-breaking: degree, then term-by-term.
    static int compare(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

    std::string to_string() const;

private:
    FieldContextPtr ctx_;
    int degree_;
    std::map<Exp, FieldElement, TermOrder> terms_;
};

// Point of P^2 stored with its last nonzero coordinate normalized to 1,
// so equality is plain coordinate equality.
class ProjectivePoint {
public:
    ProjectivePoint(const FieldElement& x, const FieldElement& y, const FieldElement& z);
    const std::array<FieldElement, 3>& coords() const { return coords_; }
    const FieldElement& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const FieldContextPtr& context() const { return coords_[0].context(); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
    static int compare(const ProjectivePoint& a, const ProjectivePoint& b);

    std::string to_string() const;

private:
    std::array<FieldElement, 3> coords_;
};

// Vanishing order of F at p: dehomogenize in the chart of p's unit
// coordinate, translate p to the origin, and read off the lowest total
// degree with a nonzero coefficient. F(p) != 0 gives 0; errors on the zero
// polynomial.
int multiplicity_at(const HomogeneousPolynomial& f, const ProjectivePoint& p);

// Line through two distinct points (degree-1 polynomial, normalized).
HomogeneousPolynomial line_through(const ProjectivePoint& p, const ProjectivePoint& q);

// Intersection of two non-proportional lines.
ProjectivePoint point_from_two_lines(const HomogeneousPolynomial& l1,
                                     const HomogeneousPolynomial& l2);

// Rank of the symmetric matrix of a degree-2 form: 3 = smooth conic,
// 2 = two distinct lines, 1 = double line.
int conic_rank(const HomogeneousPolynomial& f);

} // namespace seshadri
