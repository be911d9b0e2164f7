#include <doctest.h>

#include "oracles.hpp"
#include "ptcurves/distribution_stats.hpp"
#include "ptcurves/moment_model.hpp"
#include "ptcurves/random_inputs.hpp"

using namespace ptcurves;

namespace {

const PrimeModulus m7(7);

BoxCountHistogram synthetic(u64 p, u64 h, u64 n, std::vector<u64> counts) { return {p, h, n, std::move(counts)}; }

} // namespace

TEST_CASE("box_count_histogram examples") {
    CurveIndex hyp(PlaneCurve::parse(m7, "x*y - 1"));
    const auto full = CyclicInterval::full(7);
    CHECK(box_count_histogram(hyp, 1, full).counts == std::vector<u64>{1, 6});
    CHECK(box_count_histogram(hyp, 6, full).counts == std::vector<u64>{0, 0, 0, 0, 0, 6, 1});
    auto empty = box_count_histogram(hyp, 3, CyclicInterval::empty(7));
    CHECK(empty.counts[0] == 7);
    CHECK(empty.total() == 7);
    CHECK_THROWS_AS(box_count_histogram(hyp, 7, full), UsageError);
}

TEST_CASE("histogram invariants and agreement with the naive sweep") {
    for (u64 p : {u64{31}, u64{101}, u64{1009}}) {
        PrimeModulus m(p);
        for (const char* text : {"x*y - 1", "y^2 - x^3 - x", "y - x^2"}) {
            CurveIndex idx(PlaneCurve::parse(m, text));
            SeededRng rng(p, 61);
            for (int t = 0; t < 4; ++t) {
                const u64 h = rng.between(1, std::min<u64>(p - 1, 25));
                auto j = random_interval(rng, p, 0, p);
                auto hist = box_count_histogram(idx, h, j);
                REQUIRE(hist == box_count_histogram_naive(idx, h, j));
                for (int threads : {1, 3, 8}) REQUIRE(box_count_histogram(idx, h, j, threads) == hist);
                REQUIRE(hist.total() == p);
                const auto col = idx.roots().column_counts(j);
                u64 t_points = 0, weighted = 0;
                for (auto v : col) t_points += v;
                for (std::size_t v = 0; v < hist.counts.size(); ++v) weighted += v * hist.counts[v];
                REQUIRE(weighted == h * t_points);

                auto moments = moments_from_histogram(hist);
                for (unsigned k = 1; k <= 4; ++k) {
                    REQUIRE(moments[k - 1] * Rational(BigInt(p)) == empirical_moment(idx, MomentSpec{k, h, j}));
                }
                REQUIRE(moments[0] == Rational(BigInt(h) * t_points - BigInt(h) * j.size(), BigInt(p)));
            }
        }
    }
}

TEST_CASE("moments of an empty-J histogram vanish") {
    CurveIndex hyp(PlaneCurve::parse(m7, "x*y - 1"));
    auto hist = box_count_histogram(hyp, 2, CyclicInterval::empty(7));
    for (const auto& mk : moments_from_histogram(hist)) CHECK(mk == 0);
}

TEST_CASE("normal_cdf") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double z = -8; z <= 8; z += 0.125) {
        REQUIRE(std::fabs(normal_cdf(-z) - (1 - normal_cdf(z))) <= 1e-10);
    }
    CHECK(std::fabs(normal_cdf(1.959963985) - 0.975) <= 1e-6);
    for (double z = -4; z <= 4; z += 0.01) {
        REQUIRE(std::fabs(normal_cdf(z) - static_cast<double>(oracle::normal_cdf_series(z))) <= 1e-10);
    }
}

TEST_CASE("KS statistic on synthetic histograms") {
    // 3 x the Binomial(4, 1/2) pmf numerators; the statistic does not need p prime.
    auto exact = synthetic(48, 4, 24, {3, 12, 18, 12, 3});
    CHECK(ks_statistic(exact, FitModel::kBinomial) == doctest::Approx(0).epsilon(1e-15));

    auto degenerate = synthetic(7, 3, 0, {7, 0, 0, 0});
    CHECK(ks_statistic(degenerate, FitModel::kBinomial) == 0);
    CHECK_THROWS_AS(ks_statistic(degenerate, FitModel::kNormal), DomainError);

    auto shifted = synthetic(48, 4, 24, {0, 3, 12, 18, 15});
    const double ks = ks_statistic(shifted, FitModel::kBinomial);
    CHECK(ks == doctest::Approx(6.0 / 16.0).epsilon(1e-12));  // at v = 2: 15/48 vs 11/16
    double emp = 0, model = 0, sup = 0;
    const double pmf[] = {1 / 16.0, 4 / 16.0, 6 / 16.0, 4 / 16.0, 1 / 16.0};
    for (int v = 0; v < 5; ++v) {
        emp += shifted.counts[v] / 48.0;
        model += pmf[v];
        sup = std::max(sup, std::fabs(emp - model));
    }
    CHECK(ks == doctest::Approx(sup).epsilon(1e-12));
    CHECK(ks >= 0);
    CHECK(ks <= 1);
}

TEST_CASE("distribution report fields") {
    CurveIndex hyp(PlaneCurve::parse(PrimeModulus(101), "x*y - 1"));
    CyclicInterval j(101, 0, 51);
    auto hist = box_count_histogram(hyp, 5, j);
    auto rep = distribution_report(hist);
    CHECK(rep.mean_model == Rational(5 * 51, 101));
    CHECK(rep.var_model == Rational(5 * 51, 101) * Rational(50, 101));
    REQUIRE(rep.ks_normal.has_value());
    CHECK(*rep.ks_normal >= 0);
    CHECK(*rep.ks_normal <= 1);
    auto full = distribution_report(box_count_histogram(hyp, 5, CyclicInterval::full(101)));
    CHECK_FALSE(full.ks_normal.has_value());
}
