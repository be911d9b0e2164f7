#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ptcurves/lemma_verifiers.hpp"
#include "ptcurves/random_inputs.hpp"

using namespace ptcurves;

namespace {
const PrimeModulus m7(7);
}

TEST_CASE("weil_defect examples") {
    auto hyp = PlaneCurve::parse(m7, "x*y - 1");
    std::vector<CyclicInterval> full{CyclicInterval::full(7), CyclicInterval::full(7)};
    auto r = weil_defect(hyp, full);
    CHECK(r.count == 6);
    CHECK(r.main_term == 7);
    CHECK(r.defect == 1);
    CHECK(r.t == 0);
    CHECK(r.bound == doctest::Approx(4 * std::sqrt(7.0)));

    std::vector<CyclicInterval> small{CyclicInterval(7, 1, 3), CyclicInterval(7, 1, 3)};
    auto r2 = weil_defect(hyp, small);
    CHECK(r2.count == 1);
    CHECK(r2.main_term == Rational(9, 7));
    CHECK(r2.defect == Rational(2, 7));
    CHECK(r2.t == 2);
    CHECK(r2.ratio == doctest::Approx((2.0 / 7) / (4 * std::sqrt(7.0) * std::pow(std::log(7.0), 2))));

    auto sc = build_shifted_curve(hyp, PatternSpec(m7, {1, 1}, {0, 1}));
    std::vector<CyclicInterval> box3(3, CyclicInterval::full(7));
    auto r3 = weil_defect(sc, box3);
    CHECK(r3.count == 5);
    CHECK(r3.main_term == 7);
    CHECK(r3.defect == 2);
    CHECK(r3.t == 0);

    CHECK_THROWS_AS(weil_defect(hyp, box3), UsageError);
    CHECK_THROWS_AS(weil_defect(sc, full), UsageError);
}

TEST_CASE("shifted-curve box counts with per-coordinate intervals match brute force") {
    const u64 p = 11;
    PrimeModulus m(p);
    auto c = PlaneCurve::parse(m, "y^2 - x^3 - x");
    auto pts = oracle::points_by_x(c);
    SeededRng rng(5);
    for (int t = 0; t < 40; ++t) {
        auto spec = random_pattern_spec(rng, m, 2);
        auto sc = build_shifted_curve(c, spec);
        std::vector<CyclicInterval> box{random_interval(rng, p, 0, p), random_interval(rng, p, 0, p),
                                        random_interval(rng, p, 0, p)};
        u64 brute = 0;
        for (u64 x = 0; x < p; ++x) {
            if (!box[0].contains(x)) continue;
            brute += oracle::count_in(pts[spec.column(0, x)], box[1]) * oracle::count_in(pts[spec.column(1, x)], box[2]);
        }
        REQUIRE(weil_defect(sc, box).count == brute);
    }
}

TEST_CASE("translate escape check on hand-made sets") {
    // M = {0, 1}, x = {0, 1}: M + 0 = {0,1}, M + 1 = {1,2}; 2 escapes.
    std::vector<u64> m{0, 1}, x{0, 1};
    CHECK(some_translate_escapes(101, x, m));
    // A full subgroup-like set (all of F_p) is invariant under translation.
    std::vector<u64> all(7);
    for (u64 v = 0; v < 7; ++v) all[v] = v;
    std::vector<u64> x2{0, 3};
    CHECK_FALSE(some_translate_escapes(7, x2, all));
    // Singletons always escape for distinct translates.
    std::vector<u64> single{5}, x3{1, 2, 9};
    CHECK(some_translate_escapes(101, x3, single));
}

TEST_CASE("translate_lemma_search") {
    CHECK(translate_lemma_search(1009, 2, 7, 20000, 42).empty());
    CHECK(translate_lemma_search(1009, 2, 1, 1000, 1).empty());
    CHECK_THROWS_AS(translate_lemma_search(1009, 2, 8, 10, 1), UsageError);  // 32 >= sqrt(1009)
    CHECK_THROWS_AS(translate_lemma_search(1009, 1, 2, 10, 1), UsageError);
    CHECK_THROWS_AS(translate_lemma_search(1000, 2, 2, 10, 1), UsageError);
    CHECK_NOTHROW(translate_lemma_search(100003, 3, 11, 100, 1));  // 44^3 = 85184 < p
    CHECK_THROWS_AS(translate_lemma_search(100003, 3, 12, 100, 1), UsageError);  // 48^3 > p
}

TEST_CASE("nearest-rank percentile") {
    std::vector<double> v{5, 1, 4, 2, 3, 6, 7, 8, 9, 10};
    CHECK(percentile(v, 0.95) == 10);
    CHECK(percentile(v, 0.5) == 5);
    CHECK(percentile(v, 0.1) == 1);
    CHECK_THROWS_AS(percentile({}, 0.5), UsageError);
}
