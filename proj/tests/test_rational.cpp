#include <doctest.h>

#include "lightlike/prng.hpp"
#include "lightlike/rational.hpp"

using lightlike::BigInt;
using lightlike::Rational;
using lightlike::SplitMix64;

TEST_CASE("bigint basic arithmetic and strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK(BigInt::from_decimal("12345678901234567890123456789").to_string() ==
          "12345678901234567890123456789");
    CHECK((BigInt::from_decimal("-987654321") + BigInt::from_decimal("987654321")).is_zero());

    // 30! has 33 digits, well past int64
    BigInt fact(1);
    for (long long k = 2; k <= 30; ++k) fact = fact * BigInt(k);
    CHECK(fact.to_string() == "265252859812191058636308480000000");
    CHECK_FALSE(fact.fits_int64());
    CHECK((fact / fact).to_string() == "1");
    CHECK((fact % (fact + BigInt(1))).to_string() == fact.to_string());
}

TEST_CASE("bigint divmod roundtrip on random wide values") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a(1), b(1);
        int la = 1 + (int)(rng.next() % 5), lb = 1 + (int)(rng.next() % 4);
        for (int i = 0; i < la; ++i) a = a * BigInt((long long)(rng.next() >> 16)) + BigInt((long long)(rng.next() % 1000));
        for (int i = 0; i < lb; ++i) b = b * BigInt((long long)(rng.next() >> 20)) + BigInt((long long)(rng.next() % 1000));
        if (rng.chance(1, 2)) a = -a;
        if (rng.chance(1, 2)) b = -b;
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(BigInt::cmp_abs(r, b) < 0);
        // truncation toward zero: remainder sign matches the dividend
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint matches int64 arithmetic on small values") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        long long a = rng.uniform_int(-1000000, 1000000);
        long long b = rng.uniform_int(-1000000, 1000000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
    }
}

TEST_CASE("rational normalization and formatting") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(3, 7) + Rational(4, 7) == Rational(1));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-5, 2).abs() == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact through overflow promotion") {
    // (2^40 / 3)^4 overflows int64 in both numerator and denominator
    Rational big(1099511627776LL, 3);
    Rational p = big * big * big * big;
    CHECK(p.to_string() ==
          "1461501637330902918203684832716283019655932542976/81");
    // dividing back down demotes to the small representation again
    Rational q = p / big / big / big;
    CHECK(q == big);
    CHECK(q.to_string() == "1099511627776/3");

    // field axioms hold across the promotion boundary
    SplitMix64 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        Rational a(rng.uniform_int(-1000000000LL, 1000000000LL), rng.uniform_int(1, 999983));
        Rational b(rng.uniform_int(-1000000000LL, 1000000000LL), rng.uniform_int(1, 999983));
        Rational c(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        CHECK((a + b) * c == a * c + b * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("rational double conversion") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(-7, 4).to_double() == doctest::Approx(-1.75));
    Rational huge = Rational(1099511627776LL, 3);
    Rational p = huge * huge * huge;
    CHECK(p.to_double() == doctest::Approx(4.923e34).epsilon(0.01));
}
