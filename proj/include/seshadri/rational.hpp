#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "seshadri/error.hpp"

namespace seshadri {

// Arbitrary-precision rational. GMP keeps mpq_class results canonical
// (denominator > 0, gcd(num, den) = 1) for all arithmetic; the factories and
// the parser below canonicalize explicitly so the invariant holds for every
// value we ever hand out.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) fail(ErrorCode::division_by_zero, "rational with zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// Strict grammar: -?digits or -?digits/digits with positive denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

// Exact square root when `q` is a perfect square of a rational, else nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

// Decomposition q = sign * 2^e2 * 3^e3 * r^2 with e2, e3 in {0, 1}.
// Returns nullopt when q is zero or has no such decomposition.
struct SquareClass {
    int sign = 1; // +1 or -1
    int e2 = 0;
    int e3 = 0;
    Rational root; // r, positive
};
std::optional<SquareClass> square_class_decompose(const Rational& q);

} // namespace seshadri
