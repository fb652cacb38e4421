#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scx/linalg.hpp"

using namespace scx;

namespace {
using RF = RationalFunction;

ExactMatrix<RF> rf_matrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    ExactMatrix<RF> m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const auto& e : row) m.set(i, j++, RF(e));
        ++i;
    }
    return m;
}

std::vector<std::vector<BigInt>> zmat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<BigInt>> m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (long long v : r) m.back().emplace_back(v);
    }
    return m;
}
}  // namespace

TEST_CASE("kernel of [eps] is empty in the generic field") {
    auto m = rf_matrix({{LaurentPoly::epsilon()}});
    CHECK(field_kernel(m).empty());
    CHECK(field_rank(m) == 1);
}

TEST_CASE("kernel of [eps, -eps]") {
    auto m = rf_matrix({{LaurentPoly::epsilon(), -LaurentPoly::epsilon()}});
    auto k = field_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == RF(1));
    CHECK(k[0][1] == RF(1));
}

TEST_CASE("kernel of [[T,1],[T^2,T]]") {
    LaurentPoly t = LaurentPoly::t_power(1);
    auto m = rf_matrix({{t, LaurentPoly(1)}, {t * t, t}});
    auto k = field_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == RF(1));
    CHECK(k[0][1] == RF(-t));
    // verify by substitution
    for (int r = 0; r < 2; ++r) {
        RF acc;
        for (int c = 0; c < 2; ++c) acc += m.get(r, c) * k[0][c];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("rank plus nullity and exact annihilation on random matrices") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        int R = 1 + static_cast<int>(rng() % 4), C = 1 + static_cast<int>(rng() % 4);
        ExactMatrix<RF> m(R, C);
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c)
                if (rng() % 2) {
                    LaurentPoly p;
                    p.set_coeff(static_cast<std::int64_t>(rng() % 5) - 2,
                                BigInt(static_cast<long long>(rng() % 7) - 3));
                    m.set(r, c, RF(p));
                }
        auto k = field_kernel(m);
        CHECK(static_cast<int>(k.size()) == C - field_rank(m));
        for (const auto& v : k)
            for (int r = 0; r < R; ++r) {
                RF acc;
                for (int c = 0; c < C; ++c) acc += m.get(r, c) * v[c];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("smith normal form basics") {
    CHECK(smith_invariants(zmat({{1, 0}, {0, 1}})) == std::vector<BigInt>{BigInt(1), BigInt(1)});
    CHECK(smith_invariants(zmat({{2, 0}, {0, 3}})) == std::vector<BigInt>{BigInt(1), BigInt(6)});
    CHECK(smith_invariants(zmat({{0}})) == std::vector<BigInt>{BigInt(0)});
}

TEST_CASE("smith divisibility and product of minors on random input") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
        for (auto& row : a)
            for (auto& v : row) v = BigInt(static_cast<long long>(rng() % 9) - 4);
        auto d = smith_invariants(a);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= BigInt(0));
            if (!d[i].is_zero() && !d[i + 1].is_zero()) CHECK((d[i + 1] % d[i]).is_zero());
            if (d[i].is_zero()) CHECK(d[i + 1].is_zero());
        }
        // 2x2: determinant equals product of invariants up to sign
        if (n == 2) {
            BigInt det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            CHECK(d[0] * d[1] == det.abs());
        }
    }
}

TEST_CASE("integer kernel lattice") {
    auto ker = integer_kernel(zmat({{2, -4}}));
    REQUIRE(ker.size() == 1);
    // saturated: (2,1), not (4,2)
    CHECK((ker[0][0] * BigInt(2) - ker[0][1] * BigInt(4)).is_zero());
    CHECK(gcd(ker[0][0], ker[0][1]).is_one());
}

TEST_CASE("symmetric signature") {
    std::vector<std::vector<Rational>> tref = {{Rational(-2), Rational(1)},
                                               {Rational(1), Rational(-2)}};
    CHECK(symmetric_signature(tref) == -2);
    std::vector<std::vector<Rational>> hyp = {{Rational(0), Rational(1)},
                                              {Rational(1), Rational(0)}};
    CHECK(symmetric_signature(hyp) == 0);
    std::vector<std::vector<Rational>> fig8 = {{Rational(-2), Rational(1)},
                                               {Rational(1), Rational(2)}};
    CHECK(symmetric_signature(fig8) == 0);
}

TEST_CASE("watched-row eliminator") {
    // C = [1 1], watched row r = [0 1]: alpha=(1,-1) has C a=0, r a=-1 != 0
    Eliminator<Rational> e(2, 1);
    e.add_column({Rational(1), Rational(0)});
    CHECK(!e.watched_pivot());
    e.add_column({Rational(1), Rational(1)});
    CHECK(e.watched_pivot());
}

TEST_CASE("xpoly smith over Q(T)[x]") {
    using P = XPoly<RationalFunction>;
    std::vector<std::vector<P>> m(2, std::vector<P>(2));
    m[0][0] = P::x();
    m[1][1] = P::x() * P::x();
    auto div = xpoly_smith(m);
    REQUIRE(div.size() == 2);
    CHECK(div[0] == P::x());
    CHECK(div[1] == P::x() * P::x());
    // unimodular-ish example: [[x,1],[0,x]] has invariants 1, x^2
    std::vector<std::vector<P>> m2(2, std::vector<P>(2));
    m2[0][0] = P::x();
    m2[0][1] = P(RationalFunction(1));
    m2[1][1] = P::x();
    auto d2 = xpoly_smith(m2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == P(RationalFunction(1)));
    CHECK(d2[1] == P::x() * P::x());
}
