#include <doctest.h>

#include "oracles.hpp"
#include "ptcurves/bivariate_poly.hpp"
#include "ptcurves/random_inputs.hpp"

using namespace ptcurves;

namespace {

const PrimeModulus m7(7);
const PrimeModulus m5(5);

std::vector<Root> roots_of(const PrimeModulus& m, std::vector<u64> c, RootMethod method = RootMethod::kAuto) {
    return univariate_roots(UnivariatePoly(m, std::move(c)), method);
}

} // namespace

TEST_CASE("poly_eval examples") {
    auto hyp = parse_poly(m7, "x*y + 6");
    CHECK(poly_eval(hyp, FieldElement(m7, 3), FieldElement(m7, 5)).value() == 0);
    CHECK(poly_eval(hyp, FieldElement(m7, 0), FieldElement(m7, 0)).value() == 6);
    auto ell = parse_poly(m7, "y^2 + 6*x^3 + 6*x");
    CHECK(poly_eval(ell, FieldElement(m7, 3), FieldElement(m7, 3)).value() == 0);
    CHECK_THROWS_AS(poly_eval(hyp, FieldElement(m5, 1), FieldElement(m7, 1)), UsageError);
}

TEST_CASE("substitute_x examples") {
    auto ell = parse_poly(m7, "y^2 - x^3 - x");
    CHECK(substitute_x(ell, FieldElement(m7, 0)) == UnivariatePoly(m7, {0, 0, 1}));
    CHECK(substitute_x(parse_poly(m7, "x*y - 1"), FieldElement(m7, 2)) == UnivariatePoly(m7, {6, 2}));
    auto g = substitute_x(ell, FieldElement(m7, 1));
    CHECK(g == UnivariatePoly(m7, {5, 0, 1}));
    for (u64 y = 0; y < 7; ++y) CHECK(g.eval(y) == oracle::eval_terms(ell, 1, y));
}

TEST_CASE("substitute_x agrees with evaluation on random polynomials") {
    for (u64 p : {u64{7}, u64{11}, u64{31}}) {
        PrimeModulus m(p);
        SeededRng rng(p, 5);
        for (int t = 0; t < 20; ++t) {
            auto f = random_curve_poly(rng, m, 1 + static_cast<int>(rng.below(4)), 1);
            for (u64 x = 0; x < p; ++x) {
                auto g = substitute_x(f, FieldElement(m, x));
                for (u64 y = 0; y < p; ++y) REQUIRE(g.eval(y) == oracle::eval_terms(f, x, y));
            }
        }
    }
}

TEST_CASE("shift_substitute examples") {
    auto hyp = parse_poly(m7, "x*y - 1");
    auto id = shift_substitute(hyp, FieldElement(m7, 1), FieldElement(m7, 0), 1);
    CHECK(id.poly == hyp);
    CHECK(id.y_index == 1);

    auto s = shift_substitute(hyp, FieldElement(m7, 2), FieldElement(m7, 3), 2);
    CHECK(s.poly == parse_poly(m7, "2*x*y + 3*y - 1"));
    CHECK(s.y_index == 2);

    auto par = parse_poly(m5, "y - x^2");
    CHECK(shift_substitute(par, FieldElement(m5, 1), FieldElement(m5, 1), 1).poly ==
          parse_poly(m5, "y - x^2 - 2*x - 1"));

    CHECK_THROWS_AS(shift_substitute(hyp, FieldElement(m7, 0), FieldElement(m7, 3), 1), DomainError);
}

TEST_CASE("shift_substitute agrees pointwise, exhaustively for p <= 31") {
    for (u64 p : {u64{5}, u64{7}, u64{13}, u64{31}}) {
        PrimeModulus m(p);
        SeededRng rng(p, 9);
        for (int t = 0; t < 4; ++t) {
            auto f = random_curve_poly(rng, m, 3, 1 + static_cast<int>(rng.below(3)));
            const u64 a = rng.between(1, p - 1), b = rng.below(p);
            auto sh = shift_substitute(f, FieldElement(m, a), FieldElement(m, b), 1);
            CHECK(sh.poly.total_degree() <= f.total_degree());
            for (u64 x = 0; x < p; ++x) {
                const u64 ax = m.add(m.mul(a, x), b);
                for (u64 y = 0; y < p; ++y) REQUIRE(sh.poly.eval(x, y) == oracle::eval_terms(f, ax, y));
            }
        }
    }
}

TEST_CASE("univariate_roots examples") {
    CHECK(roots_of(m7, {0, 0, 1}) == std::vector<Root>{{0, 2}});
    CHECK(roots_of(m7, {6, 2}) == std::vector<Root>{{4, 1}});
    CHECK(roots_of(m7, {5, 0, 1}) == std::vector<Root>{{3, 1}, {4, 1}});
    CHECK(roots_of(m7, {3}).empty());
    CHECK_THROWS_WITH_AS(roots_of(m7, {0, 0}), "identically zero fiber", DomainError);
}

TEST_CASE("univariate_roots: scan and fast paths agree with a scan oracle, p <= 101") {
    for (u64 p : {u64{3}, u64{5}, u64{7}, u64{13}, u64{31}, u64{101}}) {
        PrimeModulus m(p);
        SeededRng rng(p, 3);
        for (int t = 0; t < 300; ++t) {
            const int deg = 1 + static_cast<int>(rng.below(6));
            std::vector<u64> c(deg + 1);
            // Plant repeated roots in a third of the cases.
            if (t % 3 == 0) {
                std::vector<u64> acc{1};
                for (int k = 0; k < deg; ++k) acc = upoly::mul(m, acc, {m.neg(rng.below(std::min<u64>(p, 3))), 1});
                c = acc;
            } else {
                for (auto& v : c) v = rng.below(p);
                c.back() = rng.between(1, p - 1);
            }
            UnivariatePoly g(m, c);
            auto scan = univariate_roots(g, RootMethod::kScan);
            auto fast = univariate_roots(g, RootMethod::kFast);
            REQUIRE(scan == fast);
            REQUIRE(distinct_root_count(g) == static_cast<int>(scan.size()));
            int total = 0;
            std::size_t k = 0;
            for (u64 y = 0; y < p; ++y) {
                if (g.eval(y) != 0) continue;
                REQUIRE(k < scan.size());
                REQUIRE(scan[k].value == y);
                // multiplicity: g divisible by (y - r)^m but not ^(m+1)
                std::vector<u64> lin{m.neg(y), 1}, pw{1};
                for (int e = 0; e < scan[k].multiplicity; ++e) pw = upoly::mul(m, pw, lin);
                REQUIRE(upoly::rem(m, g.coeffs(), pw).empty());
                REQUIRE_FALSE(upoly::rem(m, g.coeffs(), upoly::mul(m, pw, lin)).empty());
                total += scan[k].multiplicity;
                ++k;
            }
            REQUIRE(k == scan.size());
            REQUIRE(total <= g.degree());
        }
    }
}

TEST_CASE("fast root finding at large p") {
    PrimeModulus m(1000003);
    // (y - 5)^2 (y - 77)
    auto c = upoly::mul(m, upoly::mul(m, {m.neg(5), 1}, {m.neg(5), 1}), {m.neg(77), 1});
    auto roots = univariate_roots(UnivariatePoly(m, c), RootMethod::kFast);
    CHECK(roots == std::vector<Root>{{5, 2}, {77, 1}});
}

TEST_CASE("polynomial text format") {
    CHECK(parse_poly(m7, "x*y + 6") == parse_poly(m7, "x*y - 1"));
    CHECK(parse_poly(m7, "x") == BivariatePoly(m7, {{{1, 0}, 1}}));
    CHECK(parse_poly(m7, "y^2") == BivariatePoly(m7, {{{0, 2}, 1}}));
    CHECK(parse_poly(m7, "3") == BivariatePoly(m7, {{{0, 0}, 3}}));
    CHECK(parse_poly(m7, "15*x") == BivariatePoly(m7, {{{1, 0}, 1}}));
    CHECK(parse_poly(m7, "x^2*y + 2*x*x*y") == BivariatePoly(m7, {{{2, 1}, 3}}));
    CHECK_THROWS_WITH_AS(parse_poly(m7, "x*y + $"), "polynomial parse error at line 1, column 7: unexpected character '$'",
                         UsageError);
    CHECK_THROWS_AS(parse_poly(m7, "x^"), UsageError);
    CHECK_THROWS_AS(parse_poly(m7, ""), UsageError);
    CHECK_THROWS_AS(parse_poly(m7, "7*x"), UsageError);  // reduces to zero

    SeededRng rng(17);
    for (int t = 0; t < 50; ++t) {
        auto f = random_curve_poly(rng, m7, 4, 2);
        REQUIRE(parse_poly(m7, f.to_text()) == f);
    }
}
