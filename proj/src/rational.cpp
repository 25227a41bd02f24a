#include "seshadri/rational.hpp"

#include <cctype>

namespace seshadri {

Rational parse_rational(std::string_view text) {
    // -?digits(/digits)?  with nonzero denominator; no whitespace, no signs on
    // the denominator. mpq_set_str is laxer than that, so validate first.
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    std::string_view num = body, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!is_digits(den)) fail(ErrorCode::parse, "bad rational literal: " + std::string(text));
    }
    if (!is_digits(num)) fail(ErrorCode::parse, "bad rational literal: " + std::string(text));

    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        fail(ErrorCode::parse, "bad rational literal: " + std::string(text));
    if (q.get_den() == 0)
        fail(ErrorCode::parse, "zero denominator in rational literal: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<SquareClass> square_class_decompose(const Rational& q) {
    if (sgn(q) == 0) return std::nullopt;
    SquareClass sc;
    mpz_class v = q.get_num() * q.get_den(); // same square class as q
    if (sgn(v) < 0) {
        sc.sign = -1;
        v = -v;
    }
    sc.e2 = static_cast<int>(mpz_remove(v.get_mpz_t(), v.get_mpz_t(),
                                        mpz_class(2).get_mpz_t()) % 2);
    mpz_class v3 = v;
    sc.e3 = static_cast<int>(mpz_remove(v3.get_mpz_t(), v.get_mpz_t(),
                                        mpz_class(3).get_mpz_t()) % 2);
    // q = sign * 2^a * 3^b * w with w coprime to 6; square part demands the
    // leftover odd exponents absorbed into the root: need v3 (after removing
    // single 2,3 parities) to be a perfect square relative to q's denominator.
    // Work with q / (sign * 2^e2 * 3^e3): it must be a rational square.
    Rational rest = q / Rational(sc.sign);
    if (sc.e2) rest /= 2;
    if (sc.e3) rest /= 3;
    auto root = rational_sqrt(rest);
    if (!root) return std::nullopt;
    sc.root = *root;
    return sc;
}

} // namespace seshadri
