#pragma once

#include <span>
#include <vector>

#include "ptcurves/curve_analysis.hpp"
#include "ptcurves/fiber_table.hpp"
#include "ptcurves/rational.hpp"

namespace ptcurves {

/// Shift vectors a, b of length s >= 1 with every a_i != 0 and the ratios
/// a_i^{-1} b_i pairwise distinct mod p. Violations throw DomainError.
class PatternSpec {
public:
    PatternSpec(const PrimeModulus& mod, std::vector<u64> a, std::vector<u64> b);

    const PrimeModulus& modulus() const noexcept { return mod_; }
    std::size_t s() const noexcept { return a_.size(); }
    const std::vector<u64>& a() const noexcept { return a_; }
    const std::vector<u64>& b() const noexcept { return b_; }

    /// The pattern x-coordinate a_i x + b_i.
    u64 column(std::size_t i, u64 x) const noexcept { return mod_.add(mod_.mul(a_[i], x), b_[i]); }

    friend bool operator==(const PatternSpec& l, const PatternSpec& r) noexcept {
        return l.mod_ == r.mod_ && l.a_ == r.a_ && l.b_ == r.b_;
    }

private:
    PrimeModulus mod_;
    std::vector<u64> a_;
    std::vector<u64> b_;
};

/// The space curve f(a_i x + b_i, y_i) = 0, i = 1..s, in A^{s+1}.
struct ShiftedCurve {
    PlaneCurve base;
    PatternSpec spec;
    std::vector<ShiftedPoly> equations;  // equations[i] involves x and y_{i+1}

    /// Recorded upper bound d^s on the degree; the exact degree is not computed.
    double degree_bound() const;
};

ShiftedCurve build_shifted_curve(const PlaneCurve& c, const PatternSpec& spec);

/// A curve with every fiber's roots precomputed, for repeated box queries.
class CurveIndex {
public:
    explicit CurveIndex(PlaneCurve c, int threads = 0);
    CurveIndex(PlaneCurve c, FiberRoots roots);

    const PlaneCurve& curve() const noexcept { return curve_; }
    const FiberRoots& roots() const noexcept { return roots_; }
    u64 p() const noexcept { return curve_.p(); }

    u64 count_in_rectangle(const Rectangle& b, int threads = 0) const;
    u64 count_patterns(const PatternSpec& spec, const CyclicInterval& i, const CyclicInterval& j,
                       int threads = 0) const;

private:
    PlaneCurve curve_;
    FiberRoots roots_;
};

/// N_B(C) for B = I x J.
u64 count_in_rectangle(const PlaneCurve& c, const Rectangle& b, int threads = 0);

/// P_{a,b}(C; I, J) = sum over x in I of prod_i #{y in J : f(a_i x + b_i, y) = 0}.
u64 count_patterns(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                   const CyclicInterval& j, int threads = 0);

/// Points of C_{a,b} in I x J^s, found from the shifted equations directly.
u64 count_shifted_points(const ShiftedCurve& sc, const CyclicInterval& i, const CyclicInterval& j,
                         int threads = 0);

/// Points of C_{a,b} in I x J_1 x ... x J_s.
u64 count_shifted_in_box(const ShiftedCurve& sc, const CyclicInterval& i, std::span<const CyclicInterval> js,
                         int threads = 0);

struct PatternDefect {
    u64 count = 0;
    Rational main_term;  // |I| (|J|/p)^s
    Rational defect;     // |count - main_term|
    double bound = 0;    // d^{2s} sqrt(p) log^{s+1} p, log^s p when |I| = p
    double ratio = 0;    // defect / bound
};

PatternDefect main_term_defect(const CurveIndex& idx, const PatternSpec& spec, const CyclicInterval& i,
                               const CyclicInterval& j, int threads = 0);
PatternDefect main_term_defect(const PlaneCurve& c, const PatternSpec& spec, const CyclicInterval& i,
                               const CyclicInterval& j, int threads = 0);

} // namespace ptcurves
