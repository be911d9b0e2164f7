#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ptcurves/prime_field.hpp"
#include "ptcurves/random_inputs.hpp"

using namespace ptcurves;

TEST_CASE("addition examples") {
    PrimeModulus m7(7);
    CHECK(fe_add(FieldElement(m7, 5), FieldElement(m7, 4)).value() == 2);
    CHECK(fe_add(FieldElement(m7, 0), FieldElement(m7, 3)).value() == 3);
    PrimeModulus big(10007);
    CHECK(fe_add(FieldElement(big, 10006), FieldElement(big, 1)).value() == 0);
}

TEST_CASE("multiplication examples") {
    PrimeModulus m7(7);
    CHECK(fe_mul(FieldElement(m7, 3), FieldElement(m7, 5)).value() == 1);
    CHECK(fe_mul(FieldElement(m7, 0), FieldElement(m7, 6)).value() == 0);
    for (u64 p : {u64{7}, u64{10007}, u64{4611686018427387847ULL}}) {
        PrimeModulus m(p);
        CHECK(fe_mul(FieldElement(m, p - 1), FieldElement(m, p - 1)).value() == 1);
    }
}

TEST_CASE("inverse examples and errors") {
    PrimeModulus m7(7);
    CHECK(fe_inv(FieldElement(m7, 3)).value() == 5);
    CHECK(fe_inv(FieldElement(m7, 1)).value() == 1);
    CHECK(fe_inv(FieldElement(m7, 6)).value() == 6);
    CHECK_THROWS_WITH_AS(fe_inv(FieldElement(m7, 0)), "zero has no inverse", DomainError);
}

TEST_CASE("modulus mismatch is a usage error") {
    PrimeModulus m7(7), m11(11);
    CHECK_THROWS_AS(fe_add(FieldElement(m7, 1), FieldElement(m11, 1)), UsageError);
    CHECK_THROWS_AS(fe_mul(FieldElement(m7, 1), FieldElement(m11, 1)), UsageError);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(PrimeModulus(2), UsageError);
    CHECK_THROWS_AS(PrimeModulus(9), UsageError);
    CHECK_THROWS_AS(PrimeModulus(u64{1} << 62), UsageError);
    CHECK_NOTHROW(PrimeModulus(3));
}

TEST_CASE("is_prime against trial division") {
    CHECK(is_prime(7));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(10001));
    CHECK(oracle::is_prime_trial(10007));
    CHECK_FALSE(oracle::is_prime_trial(10001));
    CHECK_THROWS_AS(is_prime(1), UsageError);
    for (u64 n = 2; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
    // Strong pseudoprimes to several small bases.
    CHECK_FALSE(is_prime(3215031751ULL));
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("field axioms on random triples") {
    for (u64 p : {u64{7}, u64{10007}, u64{1000003}, u64{4611686018427387847ULL}}) {
        PrimeModulus m(p);
        SeededRng rng(p);
        for (int t = 0; t < 10000; ++t) {
            FieldElement a(m, rng.below(p)), b(m, rng.below(p)), c(m, rng.below(p));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            if (!a.is_zero()) REQUIRE((a * fe_inv(a)).value() == 1);
        }
    }
}

TEST_CASE("multiplication near 2^62 matches a wide-integer oracle") {
    const u64 p = 4611686018427387847ULL;  // largest prime below 2^62
    PrimeModulus m(p);
    SeededRng rng(99);
    for (int t = 0; t < 10000; ++t) {
        u64 a = p - 1 - rng.below(1000), b = p - 1 - rng.below(1000);
        u128 expect = static_cast<u128>(a) * b % p;
        REQUIRE(m.mul(a, b) == static_cast<u64>(expect));
    }
}

TEST_CASE("Barrett path is bit-identical to the plain path") {
    for (u64 p : {u64{3}, u64{7}, u64{65537}, u64{100003}, u64{4294967291ULL}}) {
        PrimeModulus fast(p), plain(p, Reduction::kPlain);
        CHECK(fast.barrett());
        CHECK_FALSE(plain.barrett());
        SeededRng rng(p, 1);
        for (int t = 0; t < 20000; ++t) {
            u64 a = rng.below(p), b = rng.below(p);
            if (static_cast<u64>(t) < std::min<u64>(4, p)) a = b = p - 1 - static_cast<u64>(t);
            REQUIRE(fast.mul(a, b) == plain.mul(a, b));
        }
    }
    CHECK_FALSE(PrimeModulus(4611686018427387847ULL).barrett());
}

TEST_CASE("signed reduction") {
    PrimeModulus m(7);
    CHECK(m.reduce_signed(-1) == 6);
    CHECK(m.reduce_signed(-14) == 0);
    CHECK(m.reduce_signed(INT64_MIN) == static_cast<u64>((static_cast<__int128>(INT64_MIN) % 7 + 7) % 7));
}
