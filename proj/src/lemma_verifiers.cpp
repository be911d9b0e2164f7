#include "ptcurves/lemma_verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptcurves/random_inputs.hpp"

namespace ptcurves {

namespace {

DefectRecord finish_record(u64 count, u64 p, std::span<const CyclicInterval> box, double degree) {
    DefectRecord rec;
    rec.count = count;
    BigInt vol = 1;
    for (const auto& iv : box) {
        vol *= iv.size();
        rec.t += iv.is_full() ? 0 : 1;
    }
    const unsigned r = static_cast<unsigned>(box.size());
    rec.main_term = Rational(BigInt(p) * vol, pow(BigInt(p), r));
    rec.defect = abs(Rational(BigInt(count)) - rec.main_term);
    const double pd = static_cast<double>(p);
    rec.bound = degree * degree * std::sqrt(pd) * std::pow(std::log(pd), rec.t);
    rec.ratio = to_double(rec.defect) / rec.bound;
    return rec;
}

void draw_trial(u64 p, unsigned r, unsigned m_max, u64 seed, u64 trial, std::vector<u64>& xs,
                std::vector<u64>& ms) {
    SeededRng rng(seed, trial);
    auto draw_distinct = [&](std::vector<u64>& out, u64 count) {
        out.clear();
        while (out.size() < count) {
            u64 v = rng.below(p);
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
    };
    draw_distinct(xs, r);
    draw_distinct(ms, rng.between(1, m_max));
    std::sort(ms.begin(), ms.end());
}

} // namespace

DefectRecord weil_defect(const CurveIndex& idx, std::span<const CyclicInterval> box) {
    if (box.size() != 2) {
        throw UsageError("plane curve needs a 2-dimensional box, got " + std::to_string(box.size()));
    }
    const u64 count = idx.count_in_rectangle(Rectangle(box[0], box[1]));
    return finish_record(count, idx.p(), box, idx.curve().degree());
}

DefectRecord weil_defect(const PlaneCurve& c, std::span<const CyclicInterval> box) {
    return weil_defect(CurveIndex(c), box);
}

DefectRecord weil_defect(const ShiftedCurve& sc, std::span<const CyclicInterval> box, int threads) {
    if (box.size() != sc.equations.size() + 1) {
        throw UsageError("shifted curve lives in A^" + std::to_string(sc.equations.size() + 1) + ", got a " +
                         std::to_string(box.size()) + "-dimensional box");
    }
    const u64 count = count_shifted_in_box(sc, box[0], box.subspan(1), threads);
    return finish_record(count, sc.base.p(), box, sc.degree_bound());
}

double percentile(std::vector<double> values, double q) {
    if (values.empty()) throw UsageError("percentile of an empty sample");
    if (!(q > 0 && q <= 1)) throw UsageError("percentile rank must lie in (0, 1]");
    std::sort(values.begin(), values.end());
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    return values[std::max<std::size_t>(rank, 1) - 1];
}

bool some_translate_escapes(u64 p, std::span<const u64> x, std::span<const u64> m) {
    auto in_m = [&](u64 v) { return std::binary_search(m.begin(), m.end(), v); };
    for (std::size_t j = 0; j < x.size(); ++j) {
        bool contained = true;
        for (u64 elem : m) {
            // elem + x_j lies in M + x_i iff elem + x_j - x_i is in M.
            bool covered = false;
            for (std::size_t i = 0; i < x.size() && !covered; ++i) {
                if (i == j) continue;
                covered = in_m((elem + x[j] + p - x[i]) % p);
            }
            if (!covered) {
                contained = false;
                break;
            }
        }
        if (!contained) return true;
    }
    return false;
}

std::vector<TranslateCounterexample> translate_lemma_search(u64 p, unsigned r, unsigned m_max, u64 trials, u64 seed,
                                                            int threads) {
    if (p < 3 || !is_prime(p)) throw UsageError("translate search needs an odd prime p");
    if (r < 2) throw UsageError("translate search needs r >= 2");
    if (r > p) throw UsageError("cannot choose r distinct translates from F_p when r > p");
    if (m_max < 1) throw UsageError("m_max must be >= 1");
    // 4 m_max < p^{1/r}  <=>  (4 m_max)^r < p
    {
        u128 lhs = 1;
        const u128 base = 4 * static_cast<u128>(m_max);
        for (unsigned k = 0; k < r && lhs < p; ++k) lhs *= base;
        if (lhs >= p) {
            throw UsageError("hypothesis 4|M| < p^(1/r) violated: 4*" + std::to_string(m_max) + " >= " +
                             std::to_string(p) + "^(1/" + std::to_string(r) + ")");
        }
    }
    const int nt = resolve_threads(threads);
    std::vector<std::uint8_t> hit(trials, 0);
#pragma omp parallel num_threads(nt)
    {
        std::vector<u64> xs, ms;
#pragma omp for schedule(static)
        for (std::int64_t ti = 0; ti < static_cast<std::int64_t>(trials); ++ti) {
            draw_trial(p, r, m_max, seed, static_cast<u64>(ti), xs, ms);
            hit[ti] = some_translate_escapes(p, xs, ms) ? 0 : 1;
        }
    }
    std::vector<TranslateCounterexample> out;
    for (u64 t = 0; t < trials; ++t) {
        if (!hit[t]) continue;
        TranslateCounterexample ce{t, {}, {}};
        draw_trial(p, r, m_max, seed, t, ce.x, ce.m);
        out.push_back(std::move(ce));
    }
    return out;
}

} // namespace ptcurves
