#include "seshadri/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace seshadri {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

std::string ineq_detail(const Rational& lhs, const Rational& rhs, bool passed) {
    std::ostringstream os;
    os << to_string(lhs) << (passed ? " >= " : " < ") << to_string(rhs);
    return os.str();
}

} // namespace

CheckResult validate_combinatorics(const CombinatorialArrangement& a) {
    CheckResult res;
    for (const auto& [r, count] : a.t) {
        if (r < 2 || count < 0) {
            res.passed = false;
            res.detail = "invalid t-vector entry t_" + std::to_string(r) + " = " + std::to_string(count);
            return res;
        }
    }
    long long lhs = static_cast<long long>(a.d) * a.d * choose2(a.k);
    long long rhs = 0;
    for (const auto& [r, count] : a.t) rhs += choose2(r) * count;
    res.passed = (lhs == rhs);
    std::ostringstream os;
    os << lhs << (res.passed ? " = " : " != ") << rhs;
    res.detail = os.str();
    return res;
}

CheckResult per_curve_check(const Arrangement& a) {
    a.require_geometry("per-curve identity");
    CheckResult res;
    res.passed = true;
    const long long expected = static_cast<long long>(a.comb.d) * a.comb.d * (a.comb.k - 1);
    std::ostringstream os;
    for (int i = 0; i < a.comb.k; ++i) {
        long long sum = 0;
        for (const auto& pt : a.points)
            if (std::binary_search(pt.curves.begin(), pt.curves.end(), i))
                sum += pt.multiplicity() - 1;
        if (sum != expected) {
            res.passed = false;
            if (!os.str().empty()) os << "; ";
            os << "curve " << i << ": " << sum << " != " << expected;
        }
    }
    if (res.passed) {
        os << "all " << a.comb.k << " curves: sum(m_p - 1) = " << expected;
    }
    res.detail = os.str();
    return res;
}

std::pair<long long, long long> f_numbers(const CombinatorialArrangement& a) {
    long long f0 = 0, f1 = 0;
    for (const auto& [r, count] : a.t) {
        f0 += count;
        f1 += static_cast<long long>(r) * count;
    }
    return {f0, f1};
}

Rational epsilon_config(const CombinatorialArrangement& a) {
    auto [f0, f1] = f_numbers(a);
    (void)f0;
    if (f1 == 0)
        fail(ErrorCode::degenerate_input, "no singular points: configurational invariant undefined");
    return make_rational(static_cast<long>(a.d) * a.k, static_cast<long>(f1));
}

int base_constant(const Arrangement& a) {
    a.require_geometry("base constant");
    int best = 0;
    for (int i = 0; i < a.comb.k; ++i) {
        int count = 0;
        for (const auto& pt : a.points)
            if (std::binary_search(pt.curves.begin(), pt.curves.end(), i)) ++count;
        best = std::max(best, count);
    }
    return best;
}

namespace {

long long t_of(const TVector& t, int r) {
    auto it = t.find(r);
    return it == t.end() ? 0 : it->second;
}

long long excess_sum(const TVector& t) {
    long long s = 0;
    for (const auto& [r, count] : t)
        if (r >= 4) s += static_cast<long long>(r - 4) * count;
    return s;
}

} // namespace

InequalityResult hirzebruch_check(const CombinatorialArrangement& a) {
    InequalityResult res;
    if (a.d != 1 || a.k < 6 || t_of(a.t, a.k) != 0 || t_of(a.t, a.k - 1) != 0) {
        res.applicable = false;
        res.detail = "hypotheses not met (need d = 1, k >= 6, t_k = t_{k-1} = 0)";
        return res;
    }
    res.applicable = true;
    Rational lhs = make_rational(t_of(a.t, 2) + t_of(a.t, 3));
    Rational rhs = make_rational(a.k + excess_sum(a.t));
    res.passed = lhs >= rhs;
    res.detail = ineq_detail(lhs, rhs, res.passed);
    return res;
}

InequalityResult prsz_check(const CombinatorialArrangement& a) {
    InequalityResult res;
    if (a.d < 2 || a.k < 3 || t_of(a.t, a.k) != 0) {
        res.applicable = false;
        res.detail = "hypotheses not met (need d >= 2, k >= 3, t_k = 0)";
        return res;
    }
    res.applicable = true;
    Rational coeff = make_rational(7 * a.d, 2) - make_rational(9, 2);
    Rational lhs = coeff * make_rational(static_cast<long long>(a.d) * a.k) +
                   make_rational(t_of(a.t, 2) + t_of(a.t, 3));
    Rational rhs = make_rational(excess_sum(a.t));
    res.passed = lhs >= rhs;
    res.detail = ineq_detail(lhs, rhs, res.passed);
    return res;
}

BoundResult theorem_lower_bound(const CombinatorialArrangement& a) {
    if (a.k < 3) fail(ErrorCode::out_of_range, "lower bound needs k >= 3");
    long den = 4L * a.d * a.k + 3L * a.d - 9;
    if (den <= 0) fail(ErrorCode::out_of_range, "lower bound denominator is not positive");
    BoundResult res;
    res.bound = make_rational(2, den);
    if (a.d >= 2) {
        res.hypotheses_met = (t_of(a.t, a.k) == 0);
        res.note = res.hypotheses_met ? "curve-arrangement hypotheses met (t_k = 0)"
                                      : "t_k != 0: bound not established for this input";
    } else {
        res.hypotheses_met =
            (a.k >= 6 && t_of(a.t, a.k) == 0 && t_of(a.t, a.k - 1) == 0);
        res.note = res.hypotheses_met
                       ? "line-arrangement hypotheses met (k >= 6, t_k = t_{k-1} = 0)"
                       : "d = 1 bound established only under k >= 6, t_k = t_{k-1} = 0";
    }
    return res;
}

GeometryReport verify_geometry(const Arrangement& a) {
    a.require_geometry("geometric verification");
    GeometryReport rep;
    rep.passed = true;
    auto flag = [&rep](std::string msg) {
        rep.passed = false;
        rep.failures.push_back(std::move(msg));
    };

    for (size_t i = 0; i < a.curves.size(); ++i) {
        if (a.curves[i].degree() != a.comb.d)
            flag("curve " + std::to_string(i) + " has degree " + std::to_string(a.curves[i].degree()) +
                 ", expected " + std::to_string(a.comb.d));
        if (a.curves[i].is_zero()) flag("curve " + std::to_string(i) + " is the zero polynomial");
    }
    if (static_cast<int>(a.curves.size()) != a.comb.k)
        flag("curve count " + std::to_string(a.curves.size()) + " != k = " + std::to_string(a.comb.k));
    for (size_t i = 0; i < a.curves.size(); ++i)
        for (size_t j = i + 1; j < a.curves.size(); ++j)
            if (a.curves[i].normalized() == a.curves[j].normalized())
                flag("curves " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    for (size_t i = 0; i < a.points.size(); ++i)
        for (size_t j = i + 1; j < a.points.size(); ++j)
            if (a.points[i].point == a.points[j].point)
                flag("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    for (size_t pi = 0; pi < a.points.size(); ++pi) {
        const auto& pt = a.points[pi];
        std::string pname = "point " + std::to_string(pi) + " " + pt.point.to_string();
        if (pt.multiplicity() < 2) flag(pname + " lies on fewer than 2 curves");
        if (pt.multiplicity() == a.comb.k) flag(pname + " lies on all k curves (t_k must be 0)");
        // membership: vanishing exactly on the listed curves
        for (int ci = 0; ci < a.comb.k; ++ci) {
            bool listed = std::binary_search(pt.curves.begin(), pt.curves.end(), ci);
            bool vanishes = a.curves[static_cast<size_t>(ci)].evaluate(pt.point).is_zero();
            if (listed != vanishes)
                flag(pname + (listed ? " listed on curve " : " also lies on unlisted curve ") +
                     std::to_string(ci));
        }
        // smoothness and pairwise distinct tangent directions
        std::vector<std::array<FieldElement, 3>> tangents;
        for (int ci : pt.curves) {
            const auto& f = a.curves[static_cast<size_t>(ci)];
            std::array<FieldElement, 3> grad = {f.derivative(0).evaluate(pt.point),
                                                f.derivative(1).evaluate(pt.point),
                                                f.derivative(2).evaluate(pt.point)};
            if (grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero()) {
                flag(pname + ": curve " + std::to_string(ci) + " is singular there");
                continue;
            }
            tangents.push_back(grad);
        }
        for (size_t i = 0; i < tangents.size(); ++i)
            for (size_t j = i + 1; j < tangents.size(); ++j) {
                const auto& g = tangents[i];
                const auto& h = tangents[j];
                bool proportional = (g[1] * h[2] - g[2] * h[1]).is_zero() &&
                                    (g[2] * h[0] - g[0] * h[2]).is_zero() &&
                                    (g[0] * h[1] - g[1] * h[0]).is_zero();
                if (proportional)
                    flag(pname + ": two incident curves share a tangent (intersection not transversal)");
            }
    }

    for (const auto& pt : a.points) {
        int m = pt.multiplicity();
        if (m >= 2) rep.recomputed_t[m] += 1;
    }
    if (rep.recomputed_t != a.comb.t) {
        std::ostringstream os;
        os << "t-vector mismatch: recomputed {";
        bool first = true;
        for (const auto& [r, c] : rep.recomputed_t) {
            if (!first) os << ", ";
            first = false;
            os << r << ": " << c;
        }
        os << "}";
        flag(os.str());
    }
    return rep;
}

Arrangement assemble_arrangement(std::string name, int d, FieldContextPtr ctx,
                                 std::vector<HomogeneousPolynomial> curves,
                                 const std::vector<ProjectivePoint>& candidate_points) {
    Arrangement arr;
    arr.name = std::move(name);
    arr.comb.d = d;
    arr.comb.k = static_cast<int>(curves.size());
    arr.ctx = std::move(ctx);
    arr.curves = std::move(curves);

    std::vector<ProjectivePoint> dedup;
    for (const auto& p : candidate_points) {
        bool seen = false;
        for (const auto& q : dedup)
            if (p == q) { seen = true; break; }
        if (!seen) dedup.push_back(p);
    }
    for (const auto& p : dedup) {
        IncidencePoint ip{p, {}};
        for (int ci = 0; ci < arr.comb.k; ++ci)
            if (arr.curves[static_cast<size_t>(ci)].evaluate(p).is_zero()) ip.curves.push_back(ci);
        if (ip.multiplicity() >= 2) {
            arr.comb.t[ip.multiplicity()] += 1;
            arr.points.push_back(std::move(ip));
        }
    }
    return arr;
}

std::vector<ProjectivePoint> line_intersection_points(const std::vector<HomogeneousPolynomial>& lines) {
    std::vector<ProjectivePoint> pts;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            pts.push_back(point_from_two_lines(lines[i], lines[j]));
    return pts;
}

} // namespace seshadri
