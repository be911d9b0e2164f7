#pragma once

#include "ptcurves/counting.hpp"
#include "ptcurves/rational.hpp"

namespace ptcurves {

/// Partitions of an r-set into t nonempty blocks.
BigInt stirling2(unsigned r, unsigned t);

BigInt binomial(u64 n, u64 k);

/// E[(X - HP)^k] for X ~ Binomial(H, P), summed directly over h = 0..H.
/// Throws DomainError unless 0 <= P <= 1.
Rational binomial_moment_def(u64 h, const Rational& prob, unsigned k);

/// The same moment through the Stirling expansion
/// sum_r C(k,r) (-HP)^{k-r} sum_t C(H,t) S(r,t) t! P^t.
Rational binomial_moment_stirling(u64 h, const Rational& prob, unsigned k);

/// (k-1)!! for even k, 0 for odd k.
BigInt gaussian_nu(unsigned k);

struct MomentSpec {
    unsigned k;
    u64 h;
    CyclicInterval j;

    /// Throws UsageError unless k >= 1 and 1 <= H < p.
    void validate(u64 p) const;
};

/// M_k(H) = sum_x (N_{B_x} - HN/p)^k with B_x = (x, x+H] x J, incremental
/// window sweep sharded over threads.
Rational empirical_moment(const CurveIndex& idx, const MomentSpec& spec, int threads = 0);
Rational empirical_moment(const PlaneCurve& c, const MomentSpec& spec, int threads = 0);

/// Reference: recounts every box from the fiber roots, serially.
Rational empirical_moment_naive(const CurveIndex& idx, const MomentSpec& spec);

struct MomentReport {
    Rational m_k;
    Rational model;  // p * mu_k(H, N/p)
    Rational defect;
    double thm3_bound = 0;  // d^{2k} H^k sqrt(p) log^k p
    double ratio = 0;       // defect / thm3_bound
    double cor3_bound = 0;  // p (HN/p)^{k/2} + HN/p + thm3_bound
    bool condition_one = true;
};

/// Compares M_k(H) against the binomial model. With require_condition_one
/// a curve that has two points over J in some column throws DomainError.
MomentReport moment_report(const CurveIndex& idx, const MomentSpec& spec, bool require_condition_one = true,
                           int threads = 0);

} // namespace ptcurves
