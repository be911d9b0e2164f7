#include "ptcurves/moment_model.hpp"

#include <cmath>
#include <string>

#include "ptcurves/window_sweep.hpp"

namespace ptcurves {

BigInt stirling2(unsigned r, unsigned t) {
    if (t > r) return 0;
    // Row-by-row recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1).
    std::vector<BigInt> row(t + 1, 0);
    row[0] = 1;
    for (unsigned n = 1; n <= r; ++n) {
        for (unsigned m = std::min(n, t); m >= 1; --m) row[m] = m * row[m] + row[m - 1];
        row[0] = 0;
    }
    return row[t];
}

BigInt binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void require_probability(const Rational& prob) {
    if (prob < 0 || prob > 1) throw DomainError("binomial parameter P must lie in [0, 1]");
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

Rational binomial_moment_def(u64 h, const Rational& prob, unsigned k) {
    require_probability(prob);
    const Rational q = 1 - prob;
    const Rational mean = Rational(BigInt(h)) * prob;
    Rational sum = 0;
    for (u64 i = 0; i <= h; ++i) {
        sum += Rational(binomial(h, i)) * pow(prob, static_cast<unsigned>(i)) *
               pow(q, static_cast<unsigned>(h - i)) * pow(Rational(BigInt(i)) - mean, k);
    }
    return sum;
}

Rational binomial_moment_stirling(u64 h, const Rational& prob, unsigned k) {
    require_probability(prob);
    const Rational neg_mean = -Rational(BigInt(h)) * prob;
    Rational sum = 0;
    for (unsigned r = 0; r <= k; ++r) {
        Rational inner = 0;
        for (unsigned t = 0; t <= r; ++t) {
            inner += Rational(binomial(h, t) * stirling2(r, t) * factorial(t)) * pow(prob, t);
        }
        sum += Rational(binomial(k, r)) * pow(neg_mean, k - r) * inner;
    }
    return sum;
}

BigInt gaussian_nu(unsigned k) {
    if (k % 2 == 1) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i + 1 <= k; i += 2) r *= i;
    return r;
}

void MomentSpec::validate(u64 p) const {
    if (k < 1) throw UsageError("moment order k must be >= 1");
    if (h < 1) throw UsageError("window length H must be >= 1");
    if (h >= p) throw UsageError("window length H = " + std::to_string(h) + " must be < p (window would overlap itself)");
    if (j.modulus() != p) throw UsageError("interval J modulus differs from curve");
}

Rational empirical_moment(const CurveIndex& idx, const MomentSpec& spec, int threads) {
    const u64 p = idx.p();
    spec.validate(p);
    const auto col = idx.roots().column_counts(spec.j, threads);
    const int shards = resolve_threads(threads);
    // sum_x (p N_x - H N)^k, divided by p^k at the end.
    const BigInt shift = BigInt(spec.h) * spec.j.size();
    std::vector<BigInt> partial(shards, 0);
    sweep_windows(col, spec.h, shards, [&](int s, u64, u64 n) {
        BigInt dev = BigInt(p) * n - shift;
        partial[s] += pow(dev, spec.k);
    });
    BigInt total = 0;
    for (const auto& v : partial) total += v;
    return Rational(total, pow(BigInt(p), spec.k));
}

Rational empirical_moment(const PlaneCurve& c, const MomentSpec& spec, int threads) {
    spec.validate(c.p());
    return empirical_moment(CurveIndex(c, threads), spec, threads);
}

Rational empirical_moment_naive(const CurveIndex& idx, const MomentSpec& spec) {
    const u64 p = idx.p();
    spec.validate(p);
    const Rational mean(BigInt(spec.h) * spec.j.size(), BigInt(p));
    const FiberRoots& fr = idx.roots();
    Rational sum = 0;
    for (u64 x = 0; x < p; ++x) {
        const CyclicInterval window = CyclicInterval::window_after(p, x, spec.h);
        u64 n = 0;
        for (u64 m = 0; m < window.size(); ++m) {
            const u64 col = window.at(m);
            for (int r = 0; r < fr.count(col); ++r) n += spec.j.contains(fr.roots(col)[r]) ? 1 : 0;
        }
        sum += pow(Rational(BigInt(n)) - mean, spec.k);
    }
    return sum;
}

MomentReport moment_report(const CurveIndex& idx, const MomentSpec& spec, bool require_condition_one, int threads) {
    const u64 p = idx.p();
    spec.validate(p);
    MomentReport rep;
    rep.condition_one = check_condition_one(idx.curve(), spec.j, threads).holds;
    if (require_condition_one && !rep.condition_one) {
        throw DomainError("condition (cond1) fails for J = " + spec.j.to_string() +
                          ": some x has two points with y in J");
    }
    rep.m_k = empirical_moment(idx, spec, threads);
    const Rational prob(BigInt(spec.j.size()), BigInt(p));
    rep.model = Rational(BigInt(p)) * binomial_moment_stirling(spec.h, prob, spec.k);
    rep.defect = abs(rep.m_k - rep.model);

    const double d = idx.curve().degree();
    const double k = spec.k;
    const double hd = static_cast<double>(spec.h);
    const double pd = static_cast<double>(p);
    const double logp = std::log(pd);
    rep.thm3_bound = std::pow(d, 2 * k) * std::pow(hd, k) * std::sqrt(pd) * std::pow(logp, k);
    rep.ratio = to_double(rep.defect) / rep.thm3_bound;
    const double hn_over_p = hd * static_cast<double>(spec.j.size()) / pd;
    rep.cor3_bound = pd * std::pow(hn_over_p, k / 2) + hn_over_p + rep.thm3_bound;
    return rep;
}

} // namespace ptcurves
