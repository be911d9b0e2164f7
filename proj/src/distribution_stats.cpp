#include "ptcurves/distribution_stats.hpp"

#include <algorithm>
#include <cmath>

#include "ptcurves/window_sweep.hpp"

namespace ptcurves {

namespace {

void validate_window(u64 p, u64 h, const CyclicInterval& j) {
    if (h < 1) throw UsageError("window length H must be >= 1");
    if (h >= p) throw UsageError("window length H = " + std::to_string(h) + " must be < p (window would overlap itself)");
    if (j.modulus() != p) throw UsageError("interval J modulus differs from curve");
}

void trim_histogram(BoxCountHistogram& hist) {
    while (hist.counts.size() > hist.h + 1 && hist.counts.back() == 0) hist.counts.pop_back();
}

// Binomial(H, P) CDF on v = 0..top, in log space for stability.
std::vector<double> binomial_cdf(u64 h, double prob, std::size_t top) {
    std::vector<double> cdf(top + 1, 1.0);
    double acc = 0;
    for (std::size_t v = 0; v <= top; ++v) {
        double pmf = 0;
        if (v <= h) {
            if (prob <= 0) {
                pmf = v == 0 ? 1 : 0;
            } else if (prob >= 1) {
                pmf = v == h ? 1 : 0;
            } else {
                const double hd = static_cast<double>(h), vd = static_cast<double>(v);
                pmf = std::exp(std::lgamma(hd + 1) - std::lgamma(vd + 1) - std::lgamma(hd - vd + 1) +
                               vd * std::log(prob) + (hd - vd) * std::log1p(-prob));
            }
        }
        acc += pmf;
        cdf[v] = std::min(acc, 1.0);
    }
    return cdf;
}

} // namespace

u64 BoxCountHistogram::total() const noexcept {
    u64 t = 0;
    for (u64 c : counts) t += c;
    return t;
}

BoxCountHistogram box_count_histogram(const CurveIndex& idx, u64 h, const CyclicInterval& j, int threads) {
    const u64 p = idx.p();
    validate_window(p, h, j);
    const auto col = idx.roots().column_counts(j, threads);
    const int shards = resolve_threads(threads);
    const std::size_t bins = h * static_cast<u64>(idx.curve().y_degree()) + 1;
    std::vector<std::vector<u64>> partial(shards, std::vector<u64>(bins, 0));
    sweep_windows(col, h, shards, [&](int s, u64, u64 n) { ++partial[s][n]; });
    BoxCountHistogram hist{p, h, j.size(), std::vector<u64>(bins, 0)};
    for (const auto& part : partial) {
        for (std::size_t v = 0; v < bins; ++v) hist.counts[v] += part[v];
    }
    trim_histogram(hist);
    return hist;
}

BoxCountHistogram box_count_histogram_naive(const CurveIndex& idx, u64 h, const CyclicInterval& j) {
    const u64 p = idx.p();
    validate_window(p, h, j);
    BoxCountHistogram hist{p, h, j.size(), std::vector<u64>(h * idx.curve().y_degree() + 1, 0)};
    for (u64 x = 0; x < p; ++x) {
        ++hist.counts[idx.count_in_rectangle(Rectangle(CyclicInterval::window_after(p, x, h), j), 1)];
    }
    trim_histogram(hist);
    return hist;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_statistic(const BoxCountHistogram& hist, FitModel model) {
    const double p = static_cast<double>(hist.p);
    const double prob = static_cast<double>(hist.n) / p;
    const std::size_t top = std::max<std::size_t>(hist.h, hist.counts.empty() ? 0 : hist.counts.size() - 1);
    std::vector<double> model_cdf;
    if (model == FitModel::kBinomial) {
        model_cdf = binomial_cdf(hist.h, prob, top);
    } else {
        const double mean = static_cast<double>(hist.h) * prob;
        const double var = mean * (1 - prob);
        if (!(var > 0)) throw DomainError("normal model has zero variance");
        const double sd = std::sqrt(var);
        model_cdf.resize(top + 1);
        for (std::size_t v = 0; v <= top; ++v) model_cdf[v] = normal_cdf((static_cast<double>(v) + 0.5 - mean) / sd);
    }
    const double total = static_cast<double>(hist.total());
    double emp = 0, sup = 0;
    for (std::size_t v = 0; v <= top; ++v) {
        if (v < hist.counts.size()) emp += static_cast<double>(hist.counts[v]);
        sup = std::max(sup, std::fabs(emp / total - model_cdf[v]));
    }
    return sup;
}

std::array<Rational, 4> moments_from_histogram(const BoxCountHistogram& hist) {
    const BigInt p(hist.p);
    const BigInt shift = BigInt(hist.h) * hist.n;
    std::array<BigInt, 4> sums{};
    for (std::size_t v = 0; v < hist.counts.size(); ++v) {
        if (hist.counts[v] == 0) continue;
        const BigInt dev = p * v - shift;
        BigInt term = hist.counts[v];
        for (auto& s : sums) {
            term *= dev;
            s += term;
        }
    }
    std::array<Rational, 4> out;
    BigInt denom = p;  // M_k / p = sum (pN - HN)^k / p^{k+1}
    for (std::size_t k = 0; k < 4; ++k) {
        denom *= p;
        out[k] = Rational(sums[k], denom);
    }
    return out;
}

DistributionReport distribution_report(const BoxCountHistogram& hist) {
    DistributionReport rep;
    const Rational prob(BigInt(hist.n), BigInt(hist.p));
    rep.mean_model = Rational(BigInt(hist.h)) * prob;
    rep.var_model = rep.mean_model * (1 - prob);
    rep.ks_binomial = ks_statistic(hist, FitModel::kBinomial);
    if (rep.var_model > 0) rep.ks_normal = ks_statistic(hist, FitModel::kNormal);
    rep.sample_moments = moments_from_histogram(hist);
    return rep;
}

} // namespace ptcurves
