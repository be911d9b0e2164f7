#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ptcurves/counting.hpp"
#include "ptcurves/rational.hpp"

namespace ptcurves {

/// Occurrences of N_{B_x} = h over the p windows B_x = (x, x+H] x J.
struct BoxCountHistogram {
    u64 p = 0;
    u64 h = 0;  // window length H
    u64 n = 0;  // |J|
    /// counts[v] for v = 0..max(H, largest box count); entries past H are
    /// nonzero only for curves with several points over J in one column.
    std::vector<u64> counts;

    u64 total() const noexcept;
    friend bool operator==(const BoxCountHistogram&, const BoxCountHistogram&) = default;
};

/// Incremental sweep with per-shard sub-histograms. Requires 1 <= H < p.
BoxCountHistogram box_count_histogram(const CurveIndex& idx, u64 h, const CyclicInterval& j, int threads = 0);

/// Reference: one window recount per x, serial.
BoxCountHistogram box_count_histogram_naive(const CurveIndex& idx, u64 h, const CyclicInterval& j);

/// Phi(z) = erfc(-z / sqrt 2) / 2. libm's erfc is accurate to a few ulp,
/// far inside the 1e-10 absolute budget.
double normal_cdf(double z);

enum class FitModel {
    kBinomial,  // Binomial(H, N/p)
    kNormal,    // Normal(HN/p, HN/p (1 - N/p)), continuity corrected at v + 1/2
};

/// sup over the lattice v = 0..max(H, top bin) of |F_emp(v) - F_model(v)|.
/// Throws DomainError for the normal model when the variance is zero.
double ks_statistic(const BoxCountHistogram& hist, FitModel model);

/// Central sample moments about HN/p for k = 1..4, i.e. M_k(H) / p.
std::array<Rational, 4> moments_from_histogram(const BoxCountHistogram& hist);

struct DistributionReport {
    Rational mean_model;  // HN/p
    Rational var_model;   // (HN/p)(1 - N/p)
    double ks_binomial = 0;
    std::optional<double> ks_normal;  // absent when var_model = 0
    std::array<Rational, 4> sample_moments;
};

DistributionReport distribution_report(const BoxCountHistogram& hist);

} // namespace ptcurves
