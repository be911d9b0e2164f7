#include "ptcurves/curve_analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ptcurves/fiber_table.hpp"

namespace ptcurves {

CyclicInterval::CyclicInterval(u64 p, u64 start, u64 length) : p_(p), start_(start), length_(length) {
    if (start >= p) throw UsageError("interval start " + std::to_string(start) + " must be < p");
    if (length > p) throw UsageError("interval length " + std::to_string(length) + " must be <= p");
}

CyclicInterval CyclicInterval::window_after(u64 p, u64 x, u64 h) {
    return CyclicInterval(p, (x % p + 1) % p, h);
}

CyclicInterval CyclicInterval::parse(u64 p, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("interval '" + text + "' must be start:length");
    auto to_u64 = [&](const std::string& s) -> u64 {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("interval '" + text + "': expected non-negative integers");
        }
        return std::stoull(s);
    };
    return CyclicInterval(p, to_u64(text.substr(0, colon)), to_u64(text.substr(colon + 1)));
}

Rectangle::Rectangle(CyclicInterval i, CyclicInterval j) : I(i), J(j) {
    if (I.modulus() != J.modulus()) throw UsageError("rectangle intervals use different moduli");
}

// ---------------------------------------------------------------------------

PlaneCurve::PlaneCurve(BivariatePoly f) : f_(std::move(f)) {
    if (f_.y_degree() < 1) throw UsageError("curve polynomial must involve y (deg_y f >= 1)");
}

PlaneCurve PlaneCurve::parse(const PrimeModulus& mod, std::string_view text) {
    return PlaneCurve(parse_poly(mod, text));
}

UnivariatePoly PlaneCurve::fiber_poly(u64 x0) const {
    std::vector<u64> c;
    f_.specialize_x(f_.modulus().reduce(x0), c);
    return UnivariatePoly(f_.modulus(), std::move(c));
}

std::vector<Root> PlaneCurve::fiber_roots(u64 x0, RootMethod method) const {
    UnivariatePoly g = fiber_poly(x0);
    if (g.is_zero()) {
        throw DomainError("vertical line component: f(" + std::to_string(x0) +
                          ", y) vanishes identically, so C is not absolutely irreducible");
    }
    return univariate_roots(g, method);
}

int fiber_count(const PlaneCurve& c, const FieldElement& x0, const CyclicInterval& j) {
    if (!(x0.modulus() == c.modulus())) throw UsageError("fiber_count: modulus mismatch");
    if (j.modulus() != c.p()) throw UsageError("fiber_count: interval modulus mismatch");
    int n = 0;
    for (const Root& r : c.fiber_roots(x0.value())) n += j.contains(r.value) ? 1 : 0;
    return n;
}

RamificationReport find_completely_ramified(const PlaneCurve& c, int threads) {
    const u64 p = c.p();
    const int n = c.y_degree();
    std::vector<std::uint8_t> flag(p, 0);
    const int nt = resolve_threads(threads);
#pragma omp parallel for num_threads(nt) schedule(static)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(p); ++xi) {
        UnivariatePoly g = c.fiber_poly(static_cast<u64>(xi));
        if (g.degree() != n) continue;
        if (n == 1) {
            flag[xi] = 1;
            continue;
        }
        auto roots = univariate_roots(g);
        flag[xi] = roots.size() == 1 && roots.front().multiplicity == n;
    }
    RamificationReport rep;
    for (u64 x = 0; x < p; ++x) {
        if (flag[x]) rep.ramified_x.push_back(x);
    }
    return rep;
}

ConditionOneResult check_condition_one(const PlaneCurve& c, const CyclicInterval& j, int threads) {
    if (j.modulus() != c.p()) throw UsageError("check_condition_one: interval modulus mismatch");
    FiberRoots fr = compute_fiber_roots(c, threads);
    ConditionOneResult res;
    for (u64 x = 0; x < c.p(); ++x) {
        const u64* r = fr.roots(x);
        int found = 0;
        for (int k = 0; k < fr.count(x); ++k) {
            if (!j.contains(r[k])) continue;
            if (found == 0) {
                res.y1 = r[k];
            } else {
                res.y2 = r[k];
                res.holds = false;
                res.x = x;
                return res;
            }
            ++found;
        }
    }
    return res;
}

u64 enumerate_points(const PlaneCurve& c, int threads) { return compute_fiber_roots(c, threads).total_points(); }

void for_each_point(const PlaneCurve& c, const std::function<void(u64, u64)>& visit) {
    for (u64 x = 0; x < c.p(); ++x) {
        for (const Root& r : c.fiber_roots(x)) visit(x, r.value);
    }
}

bool within_weil_range(const PlaneCurve& c, u64 n_points) {
    const double d = c.degree();
    const double p = static_cast<double>(c.p());
    const double slack = (d - 1) * (d - 2) * std::sqrt(p) + d * d;
    return std::fabs(static_cast<double>(n_points) - p) <= slack;
}

} // namespace ptcurves
