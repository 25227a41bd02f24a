#include "seshadri/geometry.hpp"

#include <sstream>

namespace seshadri {

std::vector<Exp> monomials_of_degree(int e) {
    std::vector<Exp> out;
    out.reserve(static_cast<size_t>((e + 1) * (e + 2) / 2));
    for (int a = e; a >= 0; --a)
        for (int b = e - a; b >= 0; --b)
            out.push_back({a, b, e - a - b});
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::from_coefficients(
    const FieldContextPtr& ctx, int degree, const std::vector<FieldElement>& coeffs) {
    auto mons = monomials_of_degree(degree);
    if (coeffs.size() != mons.size())
        fail(ErrorCode::invalid_spec, "coefficient vector length does not match degree");
    HomogeneousPolynomial f(ctx, degree);
    for (size_t i = 0; i < mons.size(); ++i)
        if (!coeffs[i].is_zero()) f.terms_.emplace(mons[i], coeffs[i]);
    return f;
}

void HomogeneousPolynomial::add_term(const Exp& exp, const FieldElement& coeff) {
    if (exp[0] < 0 || exp[1] < 0 || exp[2] < 0 || exp[0] + exp[1] + exp[2] != degree_)
        fail(ErrorCode::invalid_spec, "term degree does not match polynomial degree");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElement HomogeneousPolynomial::coefficient(const Exp& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? ctx_->zero() : it->second;
}

std::vector<FieldElement> HomogeneousPolynomial::coefficient_vector() const {
    std::vector<FieldElement> out;
    auto mons = monomials_of_degree(degree_);
    out.reserve(mons.size());
    for (const auto& m : mons) out.push_back(coefficient(m));
    return out;
}

FieldElement HomogeneousPolynomial::evaluate(const std::array<FieldElement, 3>& coords) const {
    // Precompute coordinate powers once; degree is small, terms may be many.
    std::array<std::vector<FieldElement>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[static_cast<size_t>(v)].push_back(ctx_->one());
        for (int e = 1; e <= degree_; ++e)
            powers[static_cast<size_t>(v)].push_back(powers[static_cast<size_t>(v)].back() *
                                                     coords[static_cast<size_t>(v)]);
    }
    FieldElement acc = ctx_->zero();
    for (const auto& [exp, coeff] : terms_)
        acc = acc + coeff * powers[0][static_cast<size_t>(exp[0])] *
                        powers[1][static_cast<size_t>(exp[1])] *
                        powers[2][static_cast<size_t>(exp[2])];
    return acc;
}

FieldElement HomogeneousPolynomial::evaluate(const ProjectivePoint& p) const {
    if (!ctx_->same_as(*p.context()))
        fail(ErrorCode::context_mismatch, "polynomial and point from different field contexts");
    return evaluate(p.coords());
}

HomogeneousPolynomial HomogeneousPolynomial::derivative(int var) const {
    if (degree_ == 0) return HomogeneousPolynomial(ctx_, 0);
    HomogeneousPolynomial out(ctx_, degree_ - 1);
    for (const auto& [exp, coeff] : terms_) {
        int e = exp[static_cast<size_t>(var)];
        if (e == 0) continue;
        Exp d = exp;
        d[static_cast<size_t>(var)] -= 1;
        out.add_term(d, coeff * ctx_->from_int(e));
    }
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(const FieldElement& s) const {
    HomogeneousPolynomial out(ctx_, degree_);
    if (s.is_zero()) return out;
    for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, coeff * s);
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::normalized() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.begin()->second.inverse());
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (!a.ctx_->same_as(*b.ctx_))
        fail(ErrorCode::context_mismatch, "polynomials from different field contexts");
    HomogeneousPolynomial out(a.ctx_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return HomogeneousPolynomial::compare(a, b) == 0;
}

int HomogeneousPolynomial::compare(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    TermOrder before;
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first != ib->first) return before(ia->first, ib->first) ? -1 : 1;
        int c = FieldElement::compare(ia->second, ib->second);
        if (c != 0) return c;
        ++ia; ++ib;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string HomogeneousPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coeff] : terms_) {
        std::string cs = seshadri::to_string(coeff);
        if (!first) os << " + ";
        first = false;
        bool unit = coeff.is_one();
        bool constant = exp[0] == 0 && exp[1] == 0 && exp[2] == 0;
        if (!unit || constant) {
            bool needs_parens = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos;
            if (needs_parens) os << "(" << cs << ")";
            else os << cs;
            if (!constant) os << "*";
        }
        const char* names[3] = {"x", "y", "z"};
        for (int v = 0; v < 3; ++v) {
            if (exp[static_cast<size_t>(v)] == 0) continue;
            os << names[v];
            if (exp[static_cast<size_t>(v)] > 1) os << "^" << exp[static_cast<size_t>(v)];
        }
    }
    return os.str();
}

ProjectivePoint::ProjectivePoint(const FieldElement& x, const FieldElement& y, const FieldElement& z)
    : coords_{x, y, z} {
    check_same_context(x, y);
    check_same_context(y, z);
    int last = -1;
    for (int i = 2; i >= 0; --i) {
        if (!coords_[static_cast<size_t>(i)].is_zero()) { last = i; break; }
    }
    if (last < 0) fail(ErrorCode::degenerate_input, "(0:0:0) is not a projective point");
    FieldElement inv = coords_[static_cast<size_t>(last)].inverse();
    for (auto& c : coords_) c = c * inv;
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_[0] == b.coords_[0] && a.coords_[1] == b.coords_[1] && a.coords_[2] == b.coords_[2];
}

int ProjectivePoint::compare(const ProjectivePoint& a, const ProjectivePoint& b) {
    for (int i = 0; i < 3; ++i) {
        int c = FieldElement::compare(a.coords_[static_cast<size_t>(i)], b.coords_[static_cast<size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

std::string ProjectivePoint::to_string() const {
    return "(" + seshadri::to_string(coords_[0]) + " : " + seshadri::to_string(coords_[1]) +
           " : " + seshadri::to_string(coords_[2]) + ")";
}

int multiplicity_at(const HomogeneousPolynomial& f, const ProjectivePoint& p) {
    if (f.is_zero())
        fail(ErrorCode::undefined_multiplicity, "multiplicity of the zero polynomial is undefined");
    if (!f.context()->same_as(*p.context()))
        fail(ErrorCode::context_mismatch, "polynomial and point from different field contexts");
    // Chart of the normalized unit coordinate: with p[i] = 1, substitute
    // x_i = 1, x_j = s + p_j, x_k = t + p_k and find the lowest total degree.
    int unit = 2;
    while (p[unit].is_zero()) --unit;
    int j = (unit == 0) ? 1 : 0;
    int k = (unit == 2) ? 1 : 2;

    const auto& ctx = f.context();
    const int d = f.degree();
    // binomial(n, r) * p^(n-r) tables for both affine coordinates.
    std::vector<std::vector<FieldElement>> shift_j(static_cast<size_t>(d + 1)),
        shift_k(static_cast<size_t>(d + 1));
    auto build = [&](const FieldElement& v, std::vector<std::vector<FieldElement>>& table) {
        std::vector<FieldElement> powers{ctx->one()};
        for (int e = 1; e <= d; ++e) powers.push_back(powers.back() * v);
        std::vector<std::vector<Rational>> binom(static_cast<size_t>(d + 1));
        for (int n = 0; n <= d; ++n) {
            binom[static_cast<size_t>(n)].resize(static_cast<size_t>(n + 1));
            for (int r = 0; r <= n; ++r)
                binom[static_cast<size_t>(n)][static_cast<size_t>(r)] =
                    (r == 0 || r == n) ? Rational(1)
                                       : binom[static_cast<size_t>(n - 1)][static_cast<size_t>(r - 1)] +
                                             binom[static_cast<size_t>(n - 1)][static_cast<size_t>(r)];
        }
        for (int n = 0; n <= d; ++n) {
            table[static_cast<size_t>(n)].reserve(static_cast<size_t>(n + 1));
            for (int r = 0; r <= n; ++r)
                table[static_cast<size_t>(n)].push_back(
                    ctx->from_rational(binom[static_cast<size_t>(n)][static_cast<size_t>(r)]) *
                    powers[static_cast<size_t>(n - r)]);
        }
    };
    build(p[j], shift_j);
    build(p[k], shift_k);

    // affine[s][t] = coefficient of s^s t^t after the substitution.
    std::vector<std::vector<FieldElement>> affine(
        static_cast<size_t>(d + 1),
        std::vector<FieldElement>(static_cast<size_t>(d + 1), ctx->zero()));
    for (const auto& [exp, coeff] : f.terms()) {
        int a = exp[static_cast<size_t>(j)], b = exp[static_cast<size_t>(k)];
        for (int s = 0; s <= a; ++s)
            for (int t = 0; t <= b; ++t)
                affine[static_cast<size_t>(s)][static_cast<size_t>(t)] =
                    affine[static_cast<size_t>(s)][static_cast<size_t>(t)] +
                    coeff * shift_j[static_cast<size_t>(a)][static_cast<size_t>(s)] *
                        shift_k[static_cast<size_t>(b)][static_cast<size_t>(t)];
    }
    for (int total = 0; total <= d; ++total)
        for (int s = 0; s <= total; ++s)
            if (!affine[static_cast<size_t>(s)][static_cast<size_t>(total - s)].is_zero())
                return total;
    // A homogeneous polynomial cannot vanish to order > degree on its own chart
    // unless it is divisible by other chart variables only; that cannot happen
    // for nonzero f.
    fail(ErrorCode::internal_consistency, "affine expansion of a nonzero polynomial vanished");
}

HomogeneousPolynomial line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p == q) fail(ErrorCode::degenerate_input, "line through two equal points is not unique");
    const auto& ctx = p.context();
    std::array<FieldElement, 3> cross = {
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    };
    HomogeneousPolynomial line(ctx, 1);
    line.add_term({1, 0, 0}, cross[0]);
    line.add_term({0, 1, 0}, cross[1]);
    line.add_term({0, 0, 1}, cross[2]);
    return line.normalized();
}

ProjectivePoint point_from_two_lines(const HomogeneousPolynomial& l1,
                                     const HomogeneousPolynomial& l2) {
    if (l1.degree() != 1 || l2.degree() != 1)
        fail(ErrorCode::invalid_spec, "point_from_two_lines expects degree-1 polynomials");
    auto a = l1.coefficient({1, 0, 0}), b = l1.coefficient({0, 1, 0}), c = l1.coefficient({0, 0, 1});
    auto d = l2.coefficient({1, 0, 0}), e = l2.coefficient({0, 1, 0}), f = l2.coefficient({0, 0, 1});
    FieldElement x = b * f - c * e, y = c * d - a * f, z = a * e - b * d;
    if (x.is_zero() && y.is_zero() && z.is_zero())
        fail(ErrorCode::degenerate_input, "lines are proportional, no unique intersection");
    return ProjectivePoint(x, y, z);
}

int conic_rank(const HomogeneousPolynomial& f) {
    if (f.degree() != 2) fail(ErrorCode::invalid_spec, "conic_rank expects a degree-2 polynomial");
    const auto& ctx = f.context();
    FieldElement half = ctx->from_rational(Rational(1, 2));
    // Symmetric Gram matrix of the quadratic form.
    std::array<std::array<FieldElement, 3>, 3> m = {{
        {f.coefficient({2, 0, 0}), half * f.coefficient({1, 1, 0}), half * f.coefficient({1, 0, 1})},
        {half * f.coefficient({1, 1, 0}), f.coefficient({0, 2, 0}), half * f.coefficient({0, 1, 1})},
        {half * f.coefficient({1, 0, 1}), half * f.coefficient({0, 1, 1}), f.coefficient({0, 0, 2})},
    }};
    int rank = 0;
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int pivot = -1;
        for (int r = row; r < 3; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pivot)]);
        FieldElement inv = m[static_cast<size_t>(row)][static_cast<size_t>(col)].inverse();
        for (int r = row + 1; r < 3; ++r) {
            FieldElement factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)] * inv;
            if (factor.is_zero()) continue;
            for (int c2 = col; c2 < 3; ++c2)
                m[static_cast<size_t>(r)][static_cast<size_t>(c2)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -
                    factor * m[static_cast<size_t>(row)][static_cast<size_t>(c2)];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace seshadri
