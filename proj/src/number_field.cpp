#include "seshadri/number_field.hpp"

#include <sstream>

namespace seshadri {

namespace {

// Dense univariate polynomials over Q, coefficient i multiplying u^i, used
// only inside this translation unit (reduction tables, inversion).
using Poly = std::vector<Rational>;

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (sgn(p[i]) != 0) return i;
    return -1;
}

void poly_trim(Poly& p) {
    p.resize(static_cast<size_t>(poly_degree(p) + 1));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// a mod b and a div b with b != 0; returns {quotient, remainder}.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    int db = poly_degree(b);
    Poly q;
    int da = poly_degree(a);
    if (da >= db) q.assign(static_cast<size_t>(da - db + 1), Rational(0));
    while ((da = poly_degree(a)) >= db) {
        Rational f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(da - db)] = f;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
    }
    poly_trim(a);
    return {std::move(q), std::move(a)};
}

} // namespace

FieldContextPtr FieldContext::rationals() {
    static FieldContextPtr instance = [] {
        auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
        ctx->rational_ = true;
        ctx->degree_ = 1;
        return FieldContextPtr(ctx);
    }();
    return instance;
}

FieldContextPtr FieldContext::number_field(std::vector<Rational> minpoly) {
    if (minpoly.size() < 2)
        fail(ErrorCode::invalid_spec, "minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1)
        fail(ErrorCode::invalid_spec, "minimal polynomial must be monic");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->rational_ = false;
    ctx->degree_ = static_cast<int>(minpoly.size()) - 1;
    ctx->minpoly_ = std::move(minpoly);
    // u^(n+i) = u * u^(n+i-1) reduced; row i of the table holds u^(n+i).
    const int n = ctx->degree_;
    std::vector<Rational> cur(static_cast<size_t>(n)); // u^n = -(c0 + ... + c_{n-1} u^{n-1})
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = -ctx->minpoly_[static_cast<size_t>(i)];
    for (int i = 0; i + 1 < n; ++i) {
        ctx->reduction_.push_back(cur);
        // multiply by u: shift, then fold the overflowing u^n term back in.
        Rational top = cur[static_cast<size_t>(n - 1)];
        for (int j = n - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
        cur[0] = 0;
        for (int j = 0; j < n; ++j)
            cur[static_cast<size_t>(j)] += top * ctx->reduction_[0][static_cast<size_t>(j)];
    }
    // n == 1 needs no table: products of constants never overflow the basis.
    return FieldContextPtr(ctx);
}

bool FieldContext::same_as(const FieldContext& other) const {
    if (this == &other) return true;
    return rational_ == other.rational_ && minpoly_ == other.minpoly_;
}

FieldElement FieldContext::zero() const {
    return FieldElement(shared_from_this(), std::vector<Rational>(static_cast<size_t>(degree_), Rational(0)));
}

FieldElement FieldContext::one() const { return from_rational(Rational(1)); }

FieldElement FieldContext::from_rational(const Rational& q) const {
    std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
    c[0] = q;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldContext::generator() const {
    if (degree_ == 1) {
        if (rational_) fail(ErrorCode::invalid_spec, "plain Q has no generator");
        return from_rational(-minpoly_[0]); // u = -c0 in a degree-1 field
    }
    std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldContext::element(std::vector<Rational> coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement::FieldElement(FieldContextPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (!ctx_) fail(ErrorCode::invalid_spec, "element without context");
    if (coords_.size() != static_cast<size_t>(ctx_->degree()))
        fail(ErrorCode::invalid_spec, "element coordinate count does not match field degree");
}

void check_same_context(const FieldElement& a, const FieldElement& b) {
    if (a.context().get() == b.context().get()) return;
    if (!a.context() || !b.context() || !a.context()->same_as(*b.context()))
        fail(ErrorCode::context_mismatch, "elements from different field contexts");
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (sgn(coords_[0] - 1) != 0) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational())
        fail(ErrorCode::invalid_spec, "element is not rational: " + to_string(*this));
    return coords_[0];
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
    return FieldElement(ctx_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    std::vector<Rational> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return FieldElement(a.ctx_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    std::vector<Rational> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return FieldElement(a.ctx_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    const size_t n = a.coords_.size();
    if (n == 1) {
        std::vector<Rational> c{a.coords_[0] * b.coords_[0]};
        return FieldElement(a.ctx_, std::move(c));
    }
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (sgn(a.coords_[i]) == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (sgn(b.coords_[j]) == 0) continue;
            prod[i + j] += a.coords_[i] * b.coords_[j];
        }
    }
    const auto& table = a.ctx_->reduction_table();
    std::vector<Rational> c(prod.begin(), prod.begin() + static_cast<long>(n));
    for (size_t k = n; k < prod.size(); ++k) {
        if (sgn(prod[k]) == 0) continue;
        const auto& row = table[k - n];
        for (size_t j = 0; j < n; ++j) c[j] += prod[k] * row[j];
    }
    return FieldElement(a.ctx_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
    if (ctx_->degree() == 1) {
        std::vector<Rational> c{Rational(1) / coords_[0]};
        return FieldElement(ctx_, std::move(c));
    }
    // Extended Euclid in Q[u] between the minimal polynomial and this element:
    // s*f + t*a = gcd; gcd must be a nonzero constant, then a^{-1} = t / gcd.
    Poly f = ctx_->minpoly();
    Poly a(coords_.begin(), coords_.end());
    poly_trim(a);
    Poly r0 = f, r1 = a;
    Poly t0 = {}, t1 = {Rational(1)};
    while (poly_degree(r1) > 0) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly qt = poly_mul(q, t1);
        Poly t2(std::max(t0.size(), qt.size()), Rational(0));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] += t0[i];
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        poly_trim(t2);
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (poly_degree(r1) < 0)
        fail(ErrorCode::division_by_zero,
             "element is a zero divisor (minimal polynomial not irreducible?)");
    Rational g = r1[0];
    std::vector<Rational> c(static_cast<size_t>(ctx_->degree()), Rational(0));
    for (size_t i = 0; i < t1.size(); ++i) c[i] = t1[i] / g;
    return FieldElement(ctx_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = ctx_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    return a.coords_ == b.coords_;
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c;
    }
    return 0;
}

FieldElement parse_element(const FieldContextPtr& ctx, const std::vector<std::string>& coords) {
    if (coords.size() != static_cast<size_t>(ctx->degree()))
        fail(ErrorCode::parse, "element has " + std::to_string(coords.size()) +
                                   " coordinates, field degree is " + std::to_string(ctx->degree()));
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (const auto& s : coords) c.push_back(parse_rational(s));
    return ctx->element(std::move(c));
}

std::vector<std::string> serialize_element(const FieldElement& e) {
    std::vector<std::string> out;
    out.reserve(e.coords().size());
    for (const auto& c : e.coords()) out.push_back(to_string(c));
    return out;
}

std::string to_string(const FieldElement& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.coords().size(); ++i) {
        const Rational& c = e.coords()[i];
        if (sgn(c) == 0) continue;
        Rational abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (abs_c == 1);
        if (i == 0 || !unit) os << to_string(abs_c);
        if (i > 0) {
            if (!unit) os << "*";
            os << "u";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace seshadri
