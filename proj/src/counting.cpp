#include "ptcurves/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace ptcurves {

PatternSpec::PatternSpec(const PrimeModulus& mod, std::vector<u64> a, std::vector<u64> b)
    : mod_(mod), a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty()) throw UsageError("pattern length s must be >= 1");
    if (a_.size() != b_.size()) throw UsageError("pattern vectors a and b differ in length");
    std::unordered_map<u64, std::size_t> seen;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        a_[i] = mod_.reduce(a_[i]);
        b_[i] = mod_.reduce(b_[i]);
        if (a_[i] == 0) {
            throw DomainError("a_" + std::to_string(i + 1) + " is not coprime to p");
        }
        const u64 ratio = mod_.mul(mod_.inv(a_[i]), b_[i]);
        auto [it, inserted] = seen.emplace(ratio, i);
        if (!inserted) {
            throw DomainError("distinctness of a_i^{-1} b_i violated: indices " + std::to_string(it->second + 1) +
                              " and " + std::to_string(i + 1) + " share ratio " + std::to_string(ratio));
        }
    }
}

double ShiftedCurve::degree_bound() const {
    return std::pow(static_cast<double>(base.degree()), static_cast<double>(spec.s()));
}

ShiftedCurve build_shifted_curve(const PlaneCurve& c, const PatternSpec& spec) {
    if (!(spec.modulus() == c.modulus())) throw UsageError("pattern spec modulus differs from curve");
    std::vector<ShiftedPoly> eqs;
    eqs.reserve(spec.s());
    for (std::size_t i = 0; i < spec.s(); ++i) {
        eqs.push_back(shift_substitute(c.poly(), FieldElement(c.modulus(), spec.a()[i]),
                                       FieldElement(c.modulus(), spec.b()[i]), static_cast<int>(i + 1)));
    }
    return ShiftedCurve{c, spec, std::move(eqs)};
}

// ---------------------------------------------------------------------------

CurveIndex::CurveIndex(PlaneCurve c, int threads) : curve_(std::move(c)), roots_(compute_fiber_roots(curve_, threads)) {}

CurveIndex::CurveIndex(PlaneCurve c, FiberRoots roots) : curve_(std::move(c)), roots_(std::move(roots)) {
    if (roots_.p() != curve_.p()) throw UsageError("fiber roots computed for a different modulus");
}

u64 CurveIndex::count_in_rectangle(const Rectangle& b, int threads) const {
    if (b.I.modulus() != p()) throw UsageError("rectangle modulus differs from curve");
    const int nt = resolve_threads(threads);
    const auto n = static_cast<std::int64_t>(b.I.size());
    u64 total = 0;
#pragma omp parallel for num_threads(nt) schedule(static) reduction(+ : total)
    for (std::int64_t k = 0; k < n; ++k) {
        const u64 x = b.I.at(static_cast<u64>(k));
        const u64* r = roots_.roots(x);
        for (int m = 0; m < roots_.count(x); ++m) total += b.J.contains(r[m]) ? 1 : 0;
    }
    return total;
}

u64 CurveIndex::count_patterns(const PatternSpec& spec, const CyclicInterval& i, const CyclicInterval& j,
                               int threads) const {
    if (!(spec.modulus() == curve_.modulus())) throw UsageError("pattern spec modulus differs from curve");
    if (i.modulus() != p() || j.modulus() != p()) throw UsageError("interval modulus differs from curve");
    const std::vector<std::uint32_t> col = roots_.column_counts(j, threads);
    const int nt = resolve_threads(threads);
    const auto n = static_cast<std::int64_t>(i.size());
    const std::size_t s = spec.s();
    u64 total = 0;
#pragma omp parallel for num_threads(nt) schedule(static) reduction(+ : total)
    for (std::int64_t k = 0; k < n; ++k) {
        const u64 x = i.at(static_cast<u64>(k));
        u64 prod = 1;
        for (std::size_t m = 0; m < s && prod != 0; ++m) prod *= col[spec.column(m, x)];
        total += prod;
    }
    return total;
}

u64 count_in_rectangle(const PlaneCurve& c, const Rectangle& b, int threads) {
    if (b.I.empty() || b.J.empty()) return 0;
    return CurveIndex(c, threads).count_in_rectangle(b, threads);
}

u64 count_patterns(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i, const CyclicInterval& j,
                   int threads) {
    return CurveIndex(c, threads).count_patterns(spec, i, j, threads);
}

u64 count_shifted_in_box(const ShiftedCurve& sc, const CyclicInterval& i, std::span<const CyclicInterval> js,
                         int threads) {
    const u64 p = sc.base.p();
    if (js.size() != sc.equations.size()) {
        throw UsageError("box has " + std::to_string(js.size() + 1) + " coordinates, curve lives in A^" +
                         std::to_string(sc.equations.size() + 1));
    }
    if (i.modulus() != p) throw UsageError("interval modulus differs from curve");
    for (const auto& j : js) {
        if (j.modulus() != p) throw UsageError("interval modulus differs from curve");
    }
    const PrimeModulus& mod = sc.base.modulus();
    const int nt = resolve_threads(threads);
    const auto n = static_cast<std::int64_t>(i.size());
    u64 total = 0;
    std::int64_t bad_k = n;
#pragma omp parallel num_threads(nt)
    {
        std::vector<u64> coeffs;
#pragma omp for schedule(dynamic, 256) reduction(+ : total) reduction(min : bad_k)
        for (std::int64_t k = 0; k < n; ++k) {
            const u64 x = i.at(static_cast<u64>(k));
            u64 prod = 1;
            for (std::size_t e = 0; e < sc.equations.size() && prod != 0; ++e) {
                sc.equations[e].poly.specialize_x(x, coeffs);
                UnivariatePoly g(mod, coeffs);
                if (g.is_zero()) {
                    bad_k = std::min(bad_k, k);
                    prod = 0;
                    break;
                }
                u64 hits = 0;
                for (const Root& r : univariate_roots(g)) hits += js[e].contains(r.value) ? 1 : 0;
                prod *= hits;
            }
            total += prod;
        }
    }
    if (bad_k < n) {
        throw DomainError("vertical line component on the shifted curve at x = " +
                          std::to_string(i.at(static_cast<u64>(bad_k))));
    }
    return total;
}

u64 count_shifted_points(const ShiftedCurve& sc, const CyclicInterval& i, const CyclicInterval& j, int threads) {
    std::vector<CyclicInterval> js(sc.equations.size(), j);
    return count_shifted_in_box(sc, i, js, threads);
}

PatternDefect main_term_defect(const CurveIndex& idx, const PatternSpec& spec, const CyclicInterval& i,
                               const CyclicInterval& j, int threads) {
    PatternDefect out;
    const u64 p = idx.p();
    const unsigned s = static_cast<unsigned>(spec.s());
    out.count = idx.count_patterns(spec, i, j, threads);
    out.main_term = Rational(BigInt(i.size())) * pow(Rational(BigInt(j.size()), BigInt(p)), s);
    out.defect = abs(Rational(BigInt(out.count)) - out.main_term);
    const double d = idx.curve().degree();
    const double logp = std::log(static_cast<double>(p));
    const unsigned log_exp = i.is_full() ? s : s + 1;
    out.bound = std::pow(d, 2.0 * s) * std::sqrt(static_cast<double>(p)) * std::pow(logp, log_exp);
    out.ratio = to_double(out.defect) / out.bound;
    return out;
}

PatternDefect main_term_defect(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                               const CyclicInterval& j, int threads) {
    return main_term_defect(CurveIndex(c, threads), spec, i, j, threads);
}

} // namespace ptcurves
