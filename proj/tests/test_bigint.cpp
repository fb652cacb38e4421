#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scx/bigint.hpp"
#include "scx/rational.hpp"

using namespace scx;

TEST_CASE("small arithmetic and ordering") {
    CHECK(BigInt(7) + BigInt(-9) == BigInt(-2));
    CHECK(BigInt(-7) * BigInt(-9) == BigInt(63));
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(123456789) < BigInt(123456790));
    CHECK(BigInt(-5) < BigInt(3));
    CHECK((BigInt(1) - BigInt(1)).is_zero());
}

TEST_CASE("string round trip") {
    const char* s = "123456789012345678901234567890";
    BigInt a = BigInt::from_string(s);
    CHECK(a.to_string() == s);
    CHECK((-a).to_string() == std::string("-") + s);
    CHECK(BigInt::from_string("-0").to_string() == "0");
}

TEST_CASE("multiword multiply and divide") {
    BigInt a = BigInt::from_string("340282366920938463463374607431768211457");  // 2^128+1
    BigInt b = BigInt::from_string("18446744073709551629");
    BigInt p = a * b;
    BigInt q, r;
    BigInt::divmod(p, a, q, r);
    CHECK(q == b);
    CHECK(r.is_zero());
    BigInt::divmod(p + BigInt(5), b, q, r);
    CHECK(q == a);
    CHECK(r == BigInt(5));
}

TEST_CASE("randomized agreement with __int128") {
    std::mt19937_64 rng(20260808);
    for (int i = 0; i < 4000; ++i) {
        long long x = static_cast<long long>(rng()) >> (rng() % 40);
        long long y = static_cast<long long>(rng()) >> (rng() % 40);
        if (y == 0) y = 1;
        __int128 gm = static_cast<__int128>(x) * y;
        BigInt pm = BigInt(x) * BigInt(y);
        __int128 check = 0;
        bool neg = gm < 0;
        BigInt back = BigInt::from_string(pm.to_string());
        CHECK(back == pm);
        // reconstruct magnitude from decimal string
        for (char ch : pm.to_string())
            if (ch != '-') check = check * 10 + (ch - '0');
        CHECK((neg ? -check : check) == gm);

        BigInt q, r;
        BigInt::divmod(BigInt(x), BigInt(y), q, r);
        CHECK(q == BigInt(x / y));
        CHECK(r == BigInt(x % y));
        long long g1 = std::abs(x), g2 = std::abs(y);
        while (g2) { long long t = g1 % g2; g1 = g2; g2 = t; }
        CHECK(gcd(BigInt(x), BigInt(y)) == BigInt(g1));
    }
}

TEST_CASE("rational canonical form") {
    Rational a(6, -4);
    CHECK(a.num() == BigInt(-3));
    CHECK(a.den() == BigInt(2));
    CHECK(a + Rational(3, 2) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 2) * Rational(2, 7) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-9, 4).floor() == BigInt(-3));
    CHECK(Rational(9, 4).ceil() == BigInt(3));
    CHECK(Rational(5, 3).to_string() == "5/3");
}

TEST_CASE("gamma values") {
    GammaValue inf = GammaValue::infinity();
    CHECK(inf.is_infinite());
    CHECK(GammaValue(Rational(1, 3)) < inf);
    CHECK(inf.to_string() == "inf");
    CHECK(GammaValue(Rational(14, 15)).to_string() == "14/15");
}

TEST_CASE("division stress with multiword operands") {
    std::mt19937_64 rng(424242);
    auto random_big = [&](int words) {
        BigInt x(1);
        for (int i = 0; i < words; ++i)
            x = x * BigInt(static_cast<long long>(rng() | 1)) + BigInt(static_cast<long long>(rng() % 1000));
        return x;
    };
    for (int iter = 0; iter < 400; ++iter) {
        BigInt a = random_big(1 + iter % 5), b = random_big(1 + iter % 3);
        if (b.is_zero()) continue;
        if (iter % 2) a = -a;
        if (iter % 3 == 0) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        // exact multiples divide exactly
        BigInt m = a * b;
        BigInt::divmod(m, b, q, r);
        CHECK(r.is_zero());
        CHECK(q == a);
    }
}
