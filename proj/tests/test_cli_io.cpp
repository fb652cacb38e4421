#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scx/json_io.hpp"
#include "scx/knotexpr.hpp"

using namespace scx;

TEST_CASE("knot expression grammar") {
    KnotSpec t = parse_knot_expr("torus:2,7");
    CHECK(t.kind == KnotSpec::Kind::Torus);
    CHECK(t.p == 2);
    CHECK(t.q == 7);

    KnotSpec five = parse_knot_expr("5x(dtwist:2,2)");
    int leaves = 0;
    auto count = [&](const KnotSpec& k, auto&& self) -> void {
        if (k.kind == KnotSpec::Kind::Sum) {
            self(k.children[0], self);
            self(k.children[1], self);
        } else {
            ++leaves;
            CHECK(k.kind == KnotSpec::Kind::DoubleTwist);
        }
    };
    count(five, count);
    CHECK(leaves == 5);

    KnotSpec m = parse_knot_expr("mirror:twobridge:15,4");
    CHECK(m.kind == KnotSpec::Kind::Mirror);
    CHECK(m.children[0].kind == KnotSpec::Kind::TwoBridge);
    CHECK(m.children[0].q == 4);

    KnotSpec nested = parse_knot_expr("sum:sum:unknot+torus:2,3+mirror:unknot");
    CHECK(nested.kind == KnotSpec::Kind::Sum);

    CHECK(parse_knot_expr("twobridge:15,19").q == 4);  // reduced mod p
    CHECK(parse_knot_expr("0x(torus:2,3)").kind == KnotSpec::Kind::Unknot);
}

TEST_CASE("parse errors carry a column") {
    try {
        parse_knot_expr("torus:2;7");
        CHECK(false);
    } catch (const KnotParseError& e) {
        CHECK(e.column == 7);
    }
    CHECK_THROWS_AS(parse_knot_expr("twobridge:15,5"), KnotParseError);   // not coprime
    CHECK_THROWS_AS(parse_knot_expr("twobridge:14,3"), KnotParseError);   // even p
    CHECK_THROWS_AS(parse_knot_expr("snum:unknot+unknot"), KnotParseError);
    CHECK_THROWS_AS(parse_knot_expr("unknot trailing"), KnotParseError);
}

TEST_CASE("laurent polynomial json round trip") {
    LaurentPoly p = LaurentPoly::epsilon() * LaurentPoly(3) + LaurentPoly::t_power(7);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(poly_to_json(LaurentPoly())) == LaurentPoly());
}

TEST_CASE("s-complex json round trip is the identity") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{{15, 4}, {9, 8}, {3, 1}}) {
        SComplex c = build_two_bridge_complex(p, q);
        SComplex back = scomplex_from_json(scomplex_to_json(c));
        REQUIRE(back.rank() == c.rank());
        for (int i = 0; i < c.rank(); ++i) {
            CHECK(back.generators[i].name == c.generators[i].name);
            CHECK(back.bigrading(i) == c.bigrading(i));
        }
        CHECK(back.d == c.d);
        CHECK(back.v == c.v);
        CHECK(back.delta1 == c.delta1);
        CHECK(back.delta2 == c.delta2);
        CHECK(back.v_complete == c.v_complete);
        REQUIRE(back.v_support.size() == c.v_support.size());
        for (std::size_t s = 0; s < c.v_support.size(); ++s) {
            CHECK(back.v_support[s].from == c.v_support[s].from);
            CHECK(back.v_support[s].to == c.v_support[s].to);
            CHECK(back.v_support[s].odd == c.v_support[s].odd);
        }
        // byte-identical re-serialization
        CHECK(scomplex_to_json(back).dump() == scomplex_to_json(c).dump());
    }
    // tensor with nontrivial v
    SComplex t = tensor(atom(Rational(1, 3)), atom(Rational(3, 5)));
    SComplex back = scomplex_from_json(scomplex_to_json(t));
    CHECK(back.v == t.v);
    CHECK(validate(back).empty());
}

TEST_CASE("ideal json round trip") {
    PolyIdeal ik = ideal_Ik(3);
    PolyIdeal back = ideal_from_json(ideal_to_json(ik));
    CHECK(back == ik);
    PolyIdeal bn = basechange_BN(ideal_mod2(ideal_Ik(1)));
    CHECK(ideal_from_json(ideal_to_json(bn)) == bn);
}

TEST_CASE("bound record json shape") {
    auto recs = concordance_bounds(KnotSpec::double_twist(2, 2), 2);
    REQUIRE(!recs.empty());
    json j = bound_to_json(recs.front());
    CHECK(j.contains("kind"));
    CHECK(j.contains("statement"));
    CHECK(j.contains("value"));
    CHECK(j.contains("inputs"));
    CHECK(j["inputs"].is_array());
}
