#pragma once

#include <span>
#include <vector>

#include "ptcurves/counting.hpp"
#include "ptcurves/rational.hpp"

namespace ptcurves {

/// Count of a curve in a box against the uniform main term p * vol(B) / p^r.
struct DefectRecord {
    u64 count = 0;
    Rational main_term;
    Rational defect;
    double bound = 0;  // D^2 sqrt(p) log^t p, D = degree (bound)
    double ratio = 0;
    int t = 0;         // intervals in the box that are not [0, p-1]
};

/// Plane curve; `box` must have exactly two intervals (I, J).
DefectRecord weil_defect(const CurveIndex& idx, std::span<const CyclicInterval> box);
DefectRecord weil_defect(const PlaneCurve& c, std::span<const CyclicInterval> box);

/// Shifted curve in A^{s+1}; `box` is (I, J_1, ..., J_s). The degree in the
/// bound is the recorded upper bound d^s.
DefectRecord weil_defect(const ShiftedCurve& sc, std::span<const CyclicInterval> box, int threads = 0);

/// Nearest-rank percentile, q in (0, 1]. Throws UsageError on empty input.
double percentile(std::vector<double> values, double q);

struct TranslateCounterexample {
    u64 trial;
    std::vector<u64> x;  // distinct translates x_1..x_r
    std::vector<u64> m;  // the set M, ascending
};

/// True when some translate M + x_j escapes the union of the others.
bool some_translate_escapes(u64 p, std::span<const u64> x, std::span<const u64> m);

/// Randomized search over subsets of F_p for a tuple where every M + x_j
/// lies inside the union of the other translates. Trial t draws from
/// stream (seed, t), so the output does not depend on the thread count.
/// Throws UsageError unless r >= 2, r <= p, m_max >= 1 and (4 m_max)^r < p.
std::vector<TranslateCounterexample> translate_lemma_search(u64 p, unsigned r, unsigned m_max, u64 trials, u64 seed,
                                                            int threads = 0);

} // namespace ptcurves
