#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scx/invariants.hpp"

using namespace scx;

namespace {
SComplex atom_power(const Rational& t, int k) {
    SComplex c = unknot_complex();
    for (int i = 0; i < k; ++i) c = tensor(c, atom(t));
    return c;
}
GammaValue inf() { return GammaValue::infinity(); }
}  // namespace

TEST_CASE("gamma of the atom") {
    SComplex a = atom(Rational(1, 3));
    CHECK(gamma(a, 1) == GammaValue(Rational(1, 3)));
    CHECK(gamma(a, 0) == GammaValue(Rational(0)));
    CHECK(gamma(a, -1) == GammaValue(Rational(0)));
    CHECK(gamma(a, 2) == inf());
}

TEST_CASE("gamma of 2-strand torus knots matches i^2/(2k+1)") {
    for (int k = 1; k <= 6; ++k) {
        long long p = 2 * k + 1;
        SComplex c = build_two_bridge_complex(p, p - 1);
        for (int i = -2; i <= 0; ++i) CHECK(gamma(c, i) == GammaValue(Rational(0)));
        for (int i = 1; i <= k; ++i)
            CHECK(gamma(c, i) == GammaValue(Rational(static_cast<long long>(i) * i, p)));
        for (int i = k + 1; i <= k + 2; ++i) CHECK(gamma(c, i) == inf());
    }
}

TEST_CASE("gamma of atom tensor powers") {
    SComplex c3 = atom_power(Rational(1, 3), 3);
    for (int i = 1; i <= 3; ++i) CHECK(gamma(c3, i) == GammaValue(Rational(i, 3)));
    CHECK(gamma(c3, 4) == inf());
    CHECK(gamma(c3, 0) == GammaValue(Rational(0)));
    // c~(9/15)^(x)2 has Gamma(2) = 6/5
    SComplex c2 = atom_power(Rational(9, 15), 2);
    CHECK(gamma(c2, 2) == GammaValue(Rational(6, 5)));
}

TEST_CASE("gamma closed form for atoms") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Rational> ts(n, Rational(3, 5));
        for (int i = 1; i <= n; ++i)
            CHECK(gamma_closed_form_atoms(ts, i) == GammaValue(Rational(3 * i, 5)));
        CHECK(gamma_closed_form_atoms(ts, n + 1) == inf());
    }
    CHECK(gamma_closed_form_atoms({Rational(1, 3), Rational(9, 15)}, 2) ==
          GammaValue(Rational(14, 15)));
    CHECK(gamma_closed_form_atoms({}, 1) == inf());
    CHECK(gamma_closed_form_atoms({}, 0) == GammaValue(Rational(0)));
}

TEST_CASE("closed form agrees with the tensor path") {
    std::vector<Rational> ts = {Rational(1, 3), Rational(9, 15), Rational(3, 5), Rational(5, 11)};
    SComplex c = unknot_complex();
    std::vector<Rational> used;
    for (const auto& t : ts) {
        c = tensor(c, atom(t));
        used.push_back(t);
    }
    for (int k = -1; k <= 5; ++k) CHECK(gamma(c, k) == gamma_closed_form_atoms(used, k));
}

TEST_CASE("froyshov invariant of small complexes") {
    CHECK(h_field(atom(Rational(1, 3))) == 1);
    CHECK(h_field(atom(Rational(9, 15))) == 1);
    CHECK(h_field(dual(atom(Rational(1, 3)))) == -1);
    CHECK(h_field(unknot_complex()) == 0);
    CHECK(h_field(atom(Rational(1, 3)), RingSpec::Char2) == 1);
    // T4 = 1 kills the atom
    SComplex a4 = atom(Rational(1, 3), RingSpec::T4Quotient);
    CHECK(h_field(a4, RingSpec::T4Quotient) == 0);
}

TEST_CASE("froyshov on two-bridge complexes equals minus half the signature") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{
             {15, 4}, {51, 16}, {57, 10}, {61, 42}, {97, 26}, {5, 2}, {7, 4}, {9, 2}, {3, 1}}) {
        SComplex c = build_two_bridge_complex(p, q);
        CHECK(h_field(c) == -signature_two_bridge(p, q) / 2);
    }
    for (int k = 1; k <= 6; ++k)
        CHECK(h_field(build_two_bridge_complex(2 * k + 1, 2 * k)) == k);
}

TEST_CASE("h is additive, dual-negated, and detects gamma infinity") {
    SComplex a = atom(Rational(1, 3));
    SComplex b = atom_power(Rational(3, 5), 2);
    CHECK(h_field(tensor(a, b)) == 3);
    CHECK(h_field(dual(tensor(a, b))) == -3);
    CHECK(h_field(tensor(a, dual(a))) == 0);
    SComplex t5 = build_two_bridge_complex(5, 4);
    CHECK(h_field(tensor(t5, dual(t5))) == 0);
    // gamma infinite exactly above h
    for (const SComplex& c : {a, b, tensor(a, b)}) {
        int h = h_field(c);
        CHECK(!gamma(c, h).is_infinite());
        CHECK(gamma(c, h + 1).is_infinite());
    }
}

TEST_CASE("gamma is monotone where finite") {
    for (const SComplex& c :
         {atom_power(Rational(1, 3), 3), build_two_bridge_complex(9, 8),
          tensor(atom(Rational(1, 3)), atom(Rational(9, 15)))}) {
        GammaValue prev(Rational(0));
        for (int k = 0; k <= h_field(c); ++k) {
            GammaValue g = gamma(c, k);
            CHECK(prev <= g);
            prev = g;
        }
    }
}

TEST_CASE("gamma on a mixed tensor with a dual factor") {
    // exercise the delta2 side: atom (x) dual(atom) has h = 0, Gamma(0) = 0
    SComplex c = tensor(atom(Rational(1, 3)), dual(atom(Rational(1, 3))));
    CHECK(gamma(c, 0) == GammaValue(Rational(0)));
    CHECK(gamma(c, 1).is_infinite());
}

TEST_CASE("h_t4 values") {
    CHECK(h_t4(KnotSpec::torus(3, 4)) == 1);
    CHECK(h_t4(KnotSpec::torus(2, 3)) == 0);
    CHECK(h_t4(KnotSpec::torus(2, 7)) == 0);
    CHECK(h_t4(KnotSpec::two_bridge(15, 4)) == 0);
    CHECK(h_t4(KnotSpec::double_twist(3, 2)) == 0);
    CHECK(h_t4(KnotSpec::mirror(KnotSpec::torus(3, 4))) == -1);
    KnotSpec s = KnotSpec::torus(3, 4);
    for (int k = 2; k <= 5; ++k) {
        s = KnotSpec::sum(s, KnotSpec::torus(3, 4));
        CHECK(h_t4(s) == k);
    }
    // torus recursion consistency: phi(p, q+p) = phi(p, q) - floor(p^2/4)
    for (long long pp : {2, 3, 4, 5})
        for (long long qq = pp + 1; qq < pp + 8; ++qq) {
            if (std::gcd(pp, qq) != 1) continue;
            long long lhs = h_t4(KnotSpec::torus(pp, qq + pp)) +
                            signature_torus(pp, qq + pp) / 2;
            long long rhs = h_t4(KnotSpec::torus(pp, qq)) + signature_torus(pp, qq) / 2 -
                            (pp * pp) / 4;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("gamma refuses what it cannot compute") {
    SComplex c = build_two_bridge_complex(15, 4);  // v undetermined
    CHECK_THROWS(gamma(c, 1));
    CHECK_THROWS(gamma(atom(Rational(1, 3)), 1, RingSpec::T4Quotient));
}

TEST_CASE("gamma over the characteristic-two field") {
    // the torus complexes have unit entries mod 2, so char 2 agrees with Q
    for (int k = 1; k <= 4; ++k) {
        SComplex c = build_two_bridge_complex(2 * k + 1, 2 * k);
        for (int i = 0; i <= k + 1; ++i)
            CHECK(gamma(c, i, RingSpec::Char2) == gamma(c, i, RingSpec::Generic));
        CHECK(h_field(c, RingSpec::Char2) == k);
    }
    SComplex t = tensor(atom(Rational(1, 3)), atom(Rational(3, 5)));
    CHECK(h_field(t, RingSpec::Char2) == 2);
    CHECK(gamma(t, 2, RingSpec::Char2) == GammaValue(Rational(14, 15)));
}

TEST_CASE("torus recursion and quasi-alternating rule agree on 2-strand knots") {
    for (int k = 1; k <= 8; ++k) {
        CHECK(h_t4(KnotSpec::torus(2, 2 * k + 1)) == 0);
        CHECK(h_t4(KnotSpec::two_bridge(2 * k + 1, 2 * k)) == 0);
    }
}

TEST_CASE("invalid complexes are refused") {
    SComplex bad(2);
    bad.generators.push_back({"a", {1, Rational(1, 3)}});
    bad.generators.push_back({"b", {2, Rational(2, 3)}});
    bad.delta1.set(0, 0, LaurentPoly::epsilon());
    bad.d.set(0, 1, LaurentPoly::epsilon());  // breaks delta1.d = 0
    CHECK_THROWS(gamma(bad, 1));
    CHECK_THROWS(h_field(bad));
}
