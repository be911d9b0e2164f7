#include <doctest.h>

#include "ptcurves/random_inputs.hpp"
#include "ptcurves/report_io.hpp"

using namespace ptcurves;

TEST_CASE("seeded generation is deterministic") {
    PrimeModulus m(31);
    SeededRng a(1), b(1);
    for (int t = 0; t < 20; ++t) {
        CHECK(random_pattern_spec(a, m, 3) == random_pattern_spec(b, m, 3));
        CHECK(random_interval(a, 31, 0, 31) == random_interval(b, 31, 0, 31));
        CHECK(random_curve_poly(a, m, 4, 2) == random_curve_poly(b, m, 4, 2));
    }
    CHECK(SeededRng(7, 3).below(1000000) == SeededRng(7, 3).below(1000000));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
}

TEST_CASE("random pattern specs satisfy the hypotheses") {
    PrimeModulus m(31);
    SeededRng rng(1);
    auto spec = random_pattern_spec(rng, m, 2);
    CHECK(spec.s() == 2);
    CHECK_NOTHROW(PatternSpec(m, spec.a(), spec.b()));
    // every ratio taken: s = p
    PrimeModulus m5(5);
    SeededRng r5(3);
    CHECK(random_pattern_spec(r5, m5, 5).s() == 5);
    CHECK_THROWS_AS(random_pattern_spec(r5, m5, 6), UsageError);
}

TEST_CASE("bounded draws stay in range") {
    SeededRng rng(9);
    for (int t = 0; t < 1000; ++t) {
        CHECK(rng.below(3) < 3);
        u64 v = rng.between(5, 9);
        CHECK(v >= 5);
        CHECK(v <= 9);
    }
    CHECK_THROWS_AS(rng.below(0), UsageError);
}

TEST_CASE("rationals serialize and re-parse") {
    for (auto r : {Rational(0), Rational(-2), Rational(9, 7), Rational(-165, 16)}) {
        CHECK(parse_fraction(to_fraction_string(r)) == r);
    }
    CHECK(to_fraction_string(Rational(14, 4)) == "7/2");
    CHECK(to_decimal17(Rational(1, 4)) == "0.25");
    CHECK(to_decimal17(0.1) == "0.10000000000000001");
    CHECK_THROWS_AS(parse_fraction("1/0"), UsageError);
    CHECK_THROWS_AS(parse_fraction("abc"), UsageError);
}

TEST_CASE("CSV rows re-parse into their schemas") {
    PrimeModulus m(7);
    auto hyp = PlaneCurve::parse(m, "x*y - 1");
    CurveIndex idx(hyp);
    const auto full = CyclicInterval::full(7);
    PatternSpec spec(m, {1, 1}, {0, 1});
    auto pd = main_term_defect(idx, spec, full, full);

    auto header = io::split(io::pattern_header(), ',');
    auto row = io::split(io::pattern_row(hyp, spec, full, full, pd), ',');
    REQUIRE(row.size() == header.size());
    CHECK(row[0] == "7");
    CHECK(row[3] == "1;1");
    CHECK(row[4] == "0;1");
    CHECK(row[9] == "5");
    CHECK(parse_fraction(row[10]) == 7);
    CHECK(parse_fraction(row[11]) == 2);
    CHECK(std::stod(row[13]) == doctest::Approx(pd.ratio));

    MomentSpec ms{2, 3, CyclicInterval(7, 0, 3)};
    auto mr = moment_report(idx, ms);
    auto mh = io::split(io::moment_header(), ',');
    auto mrow = io::split(io::moment_row(hyp, ms, mr), ',');
    REQUIRE(mrow.size() == mh.size());
    CHECK(mh[6] == "M_k");
    CHECK(parse_fraction(mrow[6]) == mr.m_k);
    CHECK(parse_fraction(mrow[8]) == mr.model);
    CHECK(std::stod(mrow[7]) == doctest::Approx(to_double(mr.m_k)));

    auto hist = box_count_histogram(idx, 2, full);
    auto dr = distribution_report(hist);
    CHECK(io::split(io::summary_row(hyp, hist, dr), ',').size() == io::split(io::summary_header(), ',').size());
    for (const auto& line : io::histogram_rows(hyp, full, hist)) {
        CHECK(io::split(line, ',').size() == io::split(io::histogram_header(), ',').size());
    }

    std::vector<CyclicInterval> box{CyclicInterval(7, 1, 3), CyclicInterval(7, 1, 3)};
    auto wr = weil_defect(idx, box);
    auto wrow = io::split(io::weil_row(7, "curve", box, wr), ',');
    REQUIRE(wrow.size() == io::split(io::weil_header(), ',').size());
    CHECK(wrow[2] == "1:3x1:3");
    CHECK(parse_fraction(wrow[4]) == Rational(9, 7));
    CHECK(wrow[8] == "2");

    TranslateCounterexample ce{3, {1, 2}, {0, 5}};
    CHECK(io::translate_row(ce) == "3,1;2,0;5");
}

TEST_CASE("JSON output is schema-stable") {
    PrimeModulus m(7);
    auto hyp = PlaneCurve::parse(m, "x*y - 1");
    CurveIndex idx(hyp);
    MomentSpec ms{2, 3, CyclicInterval(7, 0, 3)};
    auto j = io::moment_json(hyp, ms, moment_report(idx, ms));
    for (const char* key : {"p", "curve", "k", "H", "J", "M_k", "model", "defect", "thm3_bound", "defect_over_bound",
                            "cor3_bound"}) {
        CHECK(j.contains(key));
    }
    auto round = nlohmann::json::parse(j.dump());
    CHECK(round == j);
}
