#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "scx/scomplex.hpp"

using namespace scx;

TEST_CASE("atom complex validates") {
    SComplex a = atom(Rational(1, 3));
    CHECK(validate(a).empty());
    CHECK(a.rank() == 1);
    CHECK(a.zgrade(0) == 1);
    CHECK(a.idegree(0) == Rational(1, 3));
    CHECK(euler_characteristic(a) == -1);
    CHECK_THROWS(atom(Rational(0)));
    CHECK_THROWS(atom(Rational(-1, 3)));
}

TEST_CASE("corrupted complex fails with identity name") {
    SComplex b2(2);
    b2.generators.push_back({"z", {1, Rational(1, 3)}});
    b2.generators.push_back({"w", {2, Rational(2, 3)}});
    b2.delta1.set(0, 0, LaurentPoly::epsilon());
    b2.d.set(0, 1, LaurentPoly::epsilon());
    auto viol = validate(b2);
    CHECK(!viol.empty());
    bool named = false;
    for (const auto& s : viol)
        if (s.find("delta1.d") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("tensor of atoms has rank (3^2-1)/2 = 4 and validates") {
    SComplex a = atom(Rational(1, 3));
    SComplex t = tensor(a, a);
    CHECK(t.rank() == 4);
    CHECK(validate(t).empty());
    CHECK(euler_characteristic(t) == -2);
}

TEST_CASE("unknot complex is the tensor unit") {
    SComplex u = unknot_complex();
    SComplex b = atom(Rational(3, 5));
    SComplex t = tensor(u, b);
    REQUIRE(t.rank() == b.rank());
    CHECK(t.bigrading(0) == b.bigrading(0));
    CHECK(t.delta1.get(0, 0) == b.delta1.get(0, 0));
    CHECK(validate(t).empty());
    SComplex t2 = tensor(b, u);
    CHECK(t2.rank() == 1);
    CHECK(t2.bigrading(0) == b.bigrading(0));
    CHECK(euler_characteristic(u) == 0);
}

TEST_CASE("dual of the atom") {
    SComplex a = atom(Rational(1, 3));
    SComplex da = dual(a);
    CHECK(validate(da).empty());
    REQUIRE(da.rank() == 1);
    // negated bigrading with the chi shift: (-2, -1/3)
    CHECK(da.zgrade(0) == -2);
    CHECK(da.idegree(0) == Rational(-1, 3));
    CHECK(da.delta1.get(0, 0).is_zero());
    CHECK(da.delta2.get(0, 0) == LaurentPoly::epsilon());
    CHECK(euler_characteristic(da) == 1);
}

TEST_CASE("dual is an involution") {
    SComplex a = atom(Rational(9, 15));
    SComplex t = tensor(a, dual(a));
    SComplex dd = dual(dual(t));
    REQUIRE(dd.rank() == t.rank());
    for (int i = 0; i < t.rank(); ++i) CHECK(dd.bigrading(i) == t.bigrading(i));
    CHECK(dd.d == t.d);
    CHECK(dd.v == t.v);
    CHECK(dd.delta1 == t.delta1);
    CHECK(dd.delta2 == t.delta2);
}

TEST_CASE("tensor is associative on bigrading multisets and validates") {
    SComplex a = atom(Rational(1, 3));
    SComplex b = atom(Rational(3, 5));
    SComplex c = dual(atom(Rational(5, 11)));
    SComplex lhs = tensor(tensor(a, b), c);
    SComplex rhs = tensor(a, tensor(b, c));
    CHECK(validate(lhs).empty());
    CHECK(validate(rhs).empty());
    auto key = [](const SComplex& s) {
        std::vector<std::string> v;
        for (const auto& g : s.generators) v.push_back(g.bigrading.to_string());
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(key(lhs) == key(rhs));
    CHECK(euler_characteristic(lhs) == euler_characteristic(rhs));
}

TEST_CASE("euler characteristic of tensor adds") {
    SComplex a = atom(Rational(1, 3));
    SComplex b = tensor(a, a);
    SComplex c = tensor(b, dual(a));
    CHECK(euler_characteristic(c) == euler_characteristic(b) + euler_characteristic(dual(a)));
    CHECK(euler_characteristic(b) == 2 * euler_characteristic(a));
}

TEST_CASE("eps uniformity detection") {
    SComplex a = atom(Rational(1, 3));
    CHECK(is_eps_uniform(a));
    CHECK(is_eps_uniform(tensor(a, a)));
    auto n = eps_multiple(LaurentPoly::epsilon() * LaurentPoly(3));
    REQUIRE(n.has_value());
    CHECK(*n == BigInt(3));
    CHECK(!eps_multiple(LaurentPoly::t_power(2)).has_value());
    CHECK(eps_multiple(LaurentPoly()).has_value());
}

TEST_CASE("random tensor dual compositions validate") {
    std::mt19937_64 rng(20260808);
    std::vector<Rational> ts = {Rational(1, 3), Rational(3, 5), Rational(5, 11), Rational(9, 15)};
    for (int iter = 0; iter < 40; ++iter) {
        SComplex c = atom(ts[rng() % ts.size()]);
        int steps = 1 + static_cast<int>(rng() % 2);
        for (int s = 0; s < steps; ++s) {
            switch (rng() % 3) {
                case 0: c = dual(c); break;
                case 1: c = tensor(c, atom(ts[rng() % ts.size()])); break;
                case 2: c = tensor(c, dual(atom(ts[rng() % ts.size()]))); break;
            }
        }
        CHECK(validate(c).empty());
    }
}

TEST_CASE("tensor refuses mismatched rings") {
    SComplex a = atom(Rational(1, 3));
    SComplex b = atom(Rational(1, 3), RingSpec::Char2);
    CHECK_THROWS(tensor(a, b));
}
