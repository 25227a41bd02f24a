#include "seshadri/certificates.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <sstream>

#include "seshadri/linear_system.hpp"

namespace seshadri {

const char* irreducibility_name(Irreducibility ev) {
    switch (ev) {
    case Irreducibility::line: return "line";
    case Irreducibility::smooth_conic: return "smooth-conic";
    case Irreducibility::component_of_arrangement: return "component-of-arrangement";
    case Irreducibility::assumed: return "assumed";
    }
    fail(ErrorCode::internal_consistency, "unknown irreducibility tag");
}

Irreducibility irreducibility_from_name(const std::string& name) {
    if (name == "line") return Irreducibility::line;
    if (name == "smooth-conic") return Irreducibility::smooth_conic;
    if (name == "component-of-arrangement") return Irreducibility::component_of_arrangement;
    if (name == "assumed") return Irreducibility::assumed;
    fail(ErrorCode::parse, "unknown irreducibility tag '" + name + "'");
}

RatioReport ratio_of(const HomogeneousPolynomial& d, const std::vector<ProjectivePoint>& z,
                     Irreducibility evidence) {
    if (d.is_zero()) fail(ErrorCode::degenerate_input, "ratio of the zero polynomial");
    long long mult_sum = 0;
    for (const auto& p : z) mult_sum += multiplicity_at(d, p);
    if (mult_sum == 0)
        fail(ErrorCode::no_incidence, "curve misses every point of the center set");
    return RatioReport{d.normalized(), d.degree(), mult_sum,
                       make_rational(d.degree(), static_cast<long>(mult_sum)), evidence};
}

RatioReport ratio_of(const HomogeneousPolynomial& d, const std::vector<ProjectivePoint>& z) {
    Irreducibility ev = Irreducibility::assumed;
    if (d.degree() == 1 && !d.is_zero()) ev = Irreducibility::line;
    else if (d.degree() == 2 && conic_rank(d) == 3) ev = Irreducibility::smooth_conic;
    return ratio_of(d, z, ev);
}

namespace {

struct PolyLess {
    bool operator()(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) const {
        return HomogeneousPolynomial::compare(a, b) < 0;
    }
};

bool report_less(const RatioReport& a, const RatioReport& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    return HomogeneousPolynomial::compare(a.curve, b.curve) < 0;
}

} // namespace

LineSearchResult search_lines(const std::vector<ProjectivePoint>& z) {
    if (z.size() < 2) fail(ErrorCode::out_of_range, "line search needs at least 2 points");
    std::map<HomogeneousPolynomial, long long, PolyLess> incidence;
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            HomogeneousPolynomial l = line_through(z[i], z[j]);
            if (incidence.count(l)) continue;
            long long on = 0;
            for (const auto& p : z)
                if (l.evaluate(p).is_zero()) ++on;
            incidence.emplace(std::move(l), on);
        }
    std::vector<RatioReport> cands;
    int mpl = 0;
    for (const auto& [l, on] : incidence) {
        mpl = std::max<int>(mpl, static_cast<int>(on));
        // A line is smooth, so its multiplicity at every incident point is 1.
        cands.push_back(RatioReport{l, 1, on, make_rational(1, static_cast<long>(on)),
                                    Irreducibility::line});
    }
    std::sort(cands.begin(), cands.end(), report_less);
    RatioReport best = cands.front();
    return LineSearchResult{std::move(best), mpl, std::move(cands)};
}

ConicSearchResult search_conics(const std::vector<ProjectivePoint>& z) {
    ConicSearchResult res;
    const size_t n = z.size();
    if (n < 5) return res;
    if (n > 256) fail(ErrorCode::out_of_range, "conic search supports at most 256 points");
    const auto& ctx = z[0].context();

    // Mask of points on the line through each pair; used to skip 5-subsets
    // with a collinear triple (their conic would contain the line, hence be
    // degenerate and rejected by the rank test anyway).
    std::vector<std::bitset<256>> on_line(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            HomogeneousPolynomial l = line_through(z[i], z[j]);
            std::bitset<256> m;
            for (size_t s = 0; s < n; ++s)
                if (l.evaluate(z[s]).is_zero()) m.set(s);
            on_line[i * n + j] = m;
        }
    auto collinear_with = [&](const std::vector<size_t>& chosen, size_t v) {
        for (size_t a = 0; a < chosen.size(); ++a)
            for (size_t b = a + 1; b < chosen.size(); ++b)
                if (on_line[chosen[a] * n + chosen[b]].test(v)) return true;
        return false;
    };

    std::map<HomogeneousPolynomial, long long, PolyLess> incidence;
    std::vector<size_t> sub;
    // Depth-first enumeration of 5-subsets, pruning collinear triples early.
    auto extend = [&](auto&& self, size_t from) -> void {
        if (sub.size() == 5) {
            MultiplicityAssignment asg;
            for (size_t idx : sub) asg.emplace_back(z[idx], 1);
            auto sys = interpolate(2, asg, ctx);
            if (sys.dimension != 1)
                fail(ErrorCode::internal_consistency,
                     "five points with no collinear triple determine more than one conic");
            const HomogeneousPolynomial& c = sys.basis[0];
            if (conic_rank(c) != 3) return; // degenerate: skip
            if (incidence.count(c)) return;
            long long on = 0;
            for (const auto& p : z)
                if (c.evaluate(p).is_zero()) ++on;
            incidence.emplace(c, on);
            return;
        }
        for (size_t v = from; v < n; ++v) {
            if (collinear_with(sub, v)) continue;
            sub.push_back(v);
            self(self, v + 1);
            sub.pop_back();
        }
    };
    extend(extend, 0);

    for (const auto& [c, on] : incidence)
        // Rank 3 means smooth, so multiplicity 1 at every incident point.
        res.candidates.push_back(RatioReport{c, 2, on, make_rational(2, static_cast<long>(on)),
                                             Irreducibility::smooth_conic});
    std::sort(res.candidates.begin(), res.candidates.end(), report_less);
    if (!res.candidates.empty()) {
        res.found = true;
        res.best = res.candidates.front();
    }
    return res;
}

std::vector<RatioReport> component_ratios(const Arrangement& a) {
    a.require_geometry("component ratios");
    std::vector<ProjectivePoint> z;
    for (const auto& pt : a.points) z.push_back(pt.point);
    std::vector<RatioReport> out;
    for (const auto& c : a.curves)
        out.push_back(ratio_of(c, z, Irreducibility::component_of_arrangement));
    return out;
}

LowerBoundCertificate arrangement_bezout_bound(const Arrangement& a) {
    a.require_geometry("arrangement-Bezout bound");
    if (auto it = a.comb.t.find(a.comb.k); it != a.comb.t.end() && it->second > 0)
        fail(ErrorCode::out_of_range, "arrangement-Bezout bound needs t_k = 0");
    if (a.points.empty())
        fail(ErrorCode::degenerate_input, "arrangement has no singular points");

    LowerBoundCertificate cert;
    cert.kind = CertificateKind::arrangement_bezout;
    int min_mult = a.points.front().multiplicity();
    for (const auto& pt : a.points) min_mult = std::min(min_mult, pt.multiplicity());
    cert.min_mult = min_mult;
    cert.bound = make_rational(min_mult, static_cast<long>(a.comb.d) * a.comb.k);
    cert.exhibited = component_ratios(a);
    for (const auto& r : cert.exhibited) cert.bound = std::min(cert.bound, r.ratio);
    return cert;
}

LowerBoundCertificate interpolating_curve_bound(const std::vector<ProjectivePoint>& z,
                                                const std::vector<HomogeneousPolynomial>& factors) {
    if (z.empty()) fail(ErrorCode::degenerate_input, "empty center set");
    if (factors.empty()) fail(ErrorCode::degenerate_input, "certificate needs at least one factor");

    LowerBoundCertificate cert;
    cert.kind = CertificateKind::interpolating_curve;
    int q = 0;
    for (const auto& f : factors) {
        if (!f.context()->same_as(*z[0].context()))
            fail(ErrorCode::context_mismatch, "factor from a different field context");
        Irreducibility ev;
        if (f.degree() == 1 && !f.is_zero()) {
            ev = Irreducibility::line;
        } else if (f.degree() == 2) {
            if (conic_rank(f) != 3)
                fail(ErrorCode::unsupported_factor, "degenerate conic factor");
            ev = Irreducibility::smooth_conic;
        } else {
            fail(ErrorCode::unsupported_factor,
                 "factor of degree " + std::to_string(f.degree()) +
                     "; only lines and smooth conics are verifiable");
        }
        cert.factors.emplace_back(f.normalized(), ev);
        q += f.degree();
    }
    for (const auto& p : z) {
        bool covered = false;
        for (const auto& [f, ev] : cert.factors)
            if (f.evaluate(p).is_zero()) {
                covered = true;
                break;
            }
        if (!covered)
            fail(ErrorCode::invalid_certificate,
                 "center " + p.to_string() + " is not on the factor product");
    }
    cert.total_degree = q;
    cert.bound = make_rational(1, q);
    for (const auto& [f, ev] : cert.factors) {
        RatioReport r = ratio_of(f, z, ev);
        cert.bound = std::min(cert.bound, r.ratio);
        cert.exhibited.push_back(std::move(r));
    }
    return cert;
}

namespace {

struct PoolEntry {
    HomogeneousPolynomial poly;
    int degree;
    std::bitset<256> mask;
    size_t cover;
};

// Exact-total-degree cover: subsets of at most 5 pool entries, indices
// strictly increasing, first full cover wins (pool order is deterministic).
bool cover_dfs(const std::vector<PoolEntry>& pool, size_t from, int remaining, size_t n,
               std::bitset<256>& covered, std::vector<size_t>& chosen) {
    if (remaining == 0) return covered.count() == n;
    if (covered.count() == n) return false; // found earlier at a smaller total degree
    if (chosen.size() == 5) return false;
    size_t factors_left = std::min<size_t>(5 - chosen.size(), static_cast<size_t>(remaining));
    for (size_t i = from; i < pool.size(); ++i) {
        // Pool is sorted by coverage, so no later entry can close the gap.
        if (n - covered.count() > factors_left * pool[i].cover) break;
        if (pool[i].degree > remaining) continue;
        std::bitset<256> next = covered | pool[i].mask;
        chosen.push_back(i);
        std::swap(covered, next);
        if (cover_dfs(pool, i + 1, remaining - pool[i].degree, n, covered, chosen)) return true;
        std::swap(covered, next);
        chosen.pop_back();
    }
    return false;
}

std::vector<PoolEntry> build_pool(const std::vector<const RatioReport*>& sources,
                                  const std::vector<ProjectivePoint>& z) {
    std::vector<PoolEntry> pool;
    std::map<HomogeneousPolynomial, bool, PolyLess> seen;
    for (const RatioReport* r : sources) {
        if (r->degree > 2) continue;
        HomogeneousPolynomial p = r->curve.normalized();
        if (seen.count(p)) continue;
        seen.emplace(p, true);
        std::bitset<256> m;
        for (size_t s = 0; s < z.size(); ++s)
            if (p.evaluate(z[s]).is_zero()) m.set(s);
        pool.push_back(PoolEntry{std::move(p), r->degree, m, m.count()});
    }
    std::sort(pool.begin(), pool.end(), [](const PoolEntry& a, const PoolEntry& b) {
        if (a.cover != b.cover) return a.cover > b.cover;
        if (a.degree != b.degree) return a.degree < b.degree;
        return HomogeneousPolynomial::compare(a.poly, b.poly) < 0;
    });
    return pool;
}

std::optional<std::vector<HomogeneousPolynomial>>
find_cover(const std::vector<PoolEntry>& pool, const std::vector<ProjectivePoint>& z,
           int max_total_degree) {
    for (int q = 1; q <= max_total_degree; ++q) {
        std::bitset<256> covered;
        std::vector<size_t> chosen;
        if (cover_dfs(pool, 0, q, z.size(), covered, chosen)) {
            std::vector<HomogeneousPolynomial> factors;
            for (size_t i : chosen) factors.push_back(pool[i].poly);
            return factors;
        }
    }
    return std::nullopt;
}

} // namespace

SeshadriResult compute_seshadri(const Arrangement& a, int max_search_degree) {
    a.require_geometry("Seshadri computation");
    if (max_search_degree < 1 || max_search_degree > 2)
        fail(ErrorCode::out_of_range, "search degree must be 1 or 2");
    if (auto it = a.comb.t.find(a.comb.k); it != a.comb.t.end() && it->second > 0)
        fail(ErrorCode::out_of_range, "Seshadri computation needs t_k = 0");

    std::vector<ProjectivePoint> z;
    for (const auto& pt : a.points) z.push_back(pt.point);
    if (z.size() < 2)
        fail(ErrorCode::degenerate_input, "Seshadri computation needs at least 2 centers");

    std::vector<RatioReport> comp = component_ratios(a);
    LineSearchResult lines = search_lines(z);
    ConicSearchResult conics;
    if (max_search_degree >= 2) conics = search_conics(z);

    const RatioReport* witness = &lines.best;
    for (const auto& r : comp)
        if (report_less(r, *witness)) witness = &r;
    if (conics.best && report_less(*conics.best, *witness)) witness = &*conics.best;
    Rational upper = witness->ratio;

    LowerBoundCertificate cert = arrangement_bezout_bound(a);
    Rational lower = cert.bound;
    if (lower > upper)
        fail(ErrorCode::internal_consistency,
             "certified lower bound exceeds the best witness ratio");

    if (lower < upper && z.size() <= 256) {
        // Bézout against the arrangement fell short: look for a product of
        // found curves through all centers with total degree q <= 1/upper,
        // so that the 1/q bound meets the witness.
        mpz_class qz = upper.get_den() / upper.get_num();
        int budget = qz > 10 ? 10 : static_cast<int>(qz.get_si());
        if (budget >= 1) {
            Rational best_line = lines.best.ratio;
            std::vector<const RatioReport*> elite, full;
            for (const auto& r : lines.candidates) {
                full.push_back(&r);
                if (r.ratio == best_line) elite.push_back(&r);
            }
            for (const auto& r : conics.candidates) {
                full.push_back(&r);
                if (r.ratio == conics.best->ratio) elite.push_back(&r);
            }
            for (const auto& r : comp) {
                full.push_back(&r);
                elite.push_back(&r);
            }
            for (const auto* sources : {&elite, &full}) {
                auto pool = build_pool(*sources, z);
                if (auto factors = find_cover(pool, z, budget)) {
                    LowerBoundCertificate ic = interpolating_curve_bound(z, *factors);
                    if (ic.bound > lower) {
                        lower = ic.bound;
                        cert = std::move(ic);
                    }
                }
                if (lower == upper) break;
            }
            if (lower > upper)
                fail(ErrorCode::internal_consistency,
                     "certified lower bound exceeds the best witness ratio");
        }
    }

    std::optional<Rational> exact;
    if (lower == upper) exact = upper;
    return SeshadriResult{lower, std::move(cert), upper, *witness, exact};
}

NaiveEqualityReport naive_equality_probe(const Arrangement& a, const SeshadriResult& r) {
    if (!r.exact)
        fail(ErrorCode::degenerate_input, "naive-equality probe needs an exact value");
    NaiveEqualityReport rep;
    rep.bs = base_constant(a);
    rep.naive = make_rational(1, static_cast<long>(rep.bs));
    rep.epsilon = *r.exact;
    rep.equal = (rep.epsilon == rep.naive);
    long d = a.comb.d, k = a.comb.k;
    rep.star_value = make_rational(1, d * (k - 1));
    rep.star_naive_value = make_rational(1, d * d * (k - 1));
    return rep;
}

} // namespace seshadri
