#pragma once

#include <memory>
#include <string>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

// Arithmetic context: either plain Q or the number field Q[u]/(f) for a monic
// irreducible f. Irreducibility is the caller's promise (the spec of the
// field); everything here only needs f to be monic of degree >= 1, and
// inversion reports a genuine zero divisor if the promise was broken.
//
// Contexts are immutable and shared via shared_ptr. Elements from contexts
// that are not structurally equal never mix.
class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

class FieldElement {
public:
    FieldElement() = default; // empty element, only for containers
    FieldElement(FieldContextPtr ctx, std::vector<Rational> coords);

    const FieldContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    // True when the element lies in the prime field (all u-coordinates zero).
    bool is_rational() const;
    // The degree-0 coordinate; error if the element is not rational.
    Rational rational_value() const;

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // Deterministic total order (lexicographic on coordinates); used only for
    // reproducible tie-breaking, it has no algebraic meaning.
    static int compare(const FieldElement& a, const FieldElement& b);

private:
    FieldContextPtr ctx_;
    std::vector<Rational> coords_;
};

class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    // Plain Q.
    static FieldContextPtr rationals();
    // Q[u]/(f), f given by coefficients c[0] + c[1]*u + ... + c[n]*u^n, monic,
    // n >= 1. Degree 1 degenerates to a copy of Q (u = -c[0]).
    static FieldContextPtr number_field(std::vector<Rational> minpoly);

    bool is_rational_field() const { return rational_; }
    int degree() const { return degree_; }
    const std::vector<Rational>& minpoly() const { return minpoly_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& q) const;
    FieldElement from_int(long v) const { return from_rational(Rational(v)); }
    // The class of u (degree >= 2 required; for degree 1 it is the constant -c0).
    FieldElement generator() const;
    FieldElement element(std::vector<Rational> coords) const;

    bool same_as(const FieldContext& other) const;

    // Reduction of u^(degree + i) for i in [0, degree-2], as coordinate rows.
    const std::vector<std::vector<Rational>>& reduction_table() const { return reduction_; }

private:
    FieldContext() = default;

    bool rational_ = true;
    int degree_ = 1;
    std::vector<Rational> minpoly_; // empty for plain Q
    std::vector<std::vector<Rational>> reduction_;
};

void check_same_context(const FieldElement& a, const FieldElement& b);

// Element grammar: array of rational strings, length = context degree,
// coordinate i multiplying u^i.
FieldElement parse_element(const FieldContextPtr& ctx, const std::vector<std::string>& coords);
std::vector<std::string> serialize_element(const FieldElement& e);
// Human-readable form like "1/2 - 3*u^2" (for messages and text output).
std::string to_string(const FieldElement& e);

} // namespace seshadri
