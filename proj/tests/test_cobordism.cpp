#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "scx/cobordism.hpp"

using namespace scx;

namespace {
std::set<long long> as_set(const std::vector<long long>& v) { return {v.begin(), v.end()}; }
}

TEST_CASE("reducibles of the degree-2 disk in the punctured blow-up") {
    // boundary T_{2,3}: kappa_min 1/4, raw nu {0,4}, boundary nu {-2,2}, eta 1-T^4
    CobordismData d = CobordismData::filling({2}, {}, 0, -2);
    ReducibleSummary rs = reducible_summary(d);
    CHECK(rs.kappa_min == Rational(1, 4));
    REQUIRE(rs.minimizers.size() == 2);
    CHECK(as_set(rs.nu_values) == std::set<long long>{0, 4});
    std::set<std::string> nb;
    for (const auto& r : rs.nu_boundary) nb.insert(r.to_string());
    CHECK(nb == std::set<std::string>{"-2", "2"});
    LaurentPoly expect(1);
    expect.set_coeff(4, BigInt(-1));
    CHECK(rs.eta == expect);
    CHECK(rs.index == Rational(1));
    REQUIRE(rs.level.has_value());
    CHECK(*rs.level == 1);
}

TEST_CASE("odd-degree disks have kappa_min 1/16 with a unique minimizer") {
    for (long long m = 3; m <= 9; m += 2) {
        CobordismData d = CobordismData::filling({m}, {}, 0,
                                                 static_cast<int>(-(m - 1) * (m + 3) / 2));
        ReducibleSummary rs = reducible_summary(d);
        CHECK(rs.kappa_min == Rational(1, 16));
        CHECK(rs.minimizers.size() == 1);
        CHECK(!rs.eta.is_zero_in(RingSpec::T4Quotient));
    }
}

TEST_CASE("twist-move conic in the closed blow-up") {
    CobordismData d;
    d.lattice_rank = 1;
    d.surface = {2};
    d.c_class = {0};
    d.relative = false;
    d.chi_w = 3;   // closed blow-up
    d.sigma_w = -1;
    d.chi_s = 2;
    ReducibleSummary rs = reducible_summary(d);
    CHECK(rs.kappa_min == Rational(1, 4));
    CHECK(as_set(rs.nu_values) == std::set<long long>{0, 4});
    CHECK(rs.nu_boundary.empty());
    LaurentPoly expect(1);
    expect.set_coeff(4, BigInt(-1));
    CHECK(rs.eta == expect);
    // minimizers 0 and -e
    std::set<long long> zs;
    for (const auto& z : rs.minimizers) zs.insert(z[0]);
    CHECK(zs == std::set<long long>{0, -1});
}

TEST_CASE("blow-up laws") {
    std::mt19937_64 rng(33);
    for (int iter = 0; iter < 40; ++iter) {
        int n = static_cast<int>(rng() % 3);
        std::vector<long long> S, c;
        for (int i = 0; i < n; ++i) {
            S.push_back(static_cast<long long>(rng() % 7) - 3);
            c.push_back(static_cast<long long>(rng() % 3) - 1);
        }
        CobordismData base = CobordismData::product(S, c, 0, 0, 0);
        for (long long sp = 0; sp <= 4; ++sp) {
            CobordismData imm = base;
            imm.s_plus = sp;
            imm.s_minus = (iter % 3 == 0) ? 1 : 0;
            // generic ring: eta multiplies by (1 - T^4)^{s+}, kappa grows by s+/4
            CobordismData blown = blow_up(imm, RingSpec::Generic);
            ReducibleSummary rb = reducible_summary(blown);
            ReducibleSummary r0 = reducible_summary(base);
            LaurentPoly law(1);
            law.set_coeff(4, BigInt(-1));
            CHECK(rb.eta == r0.eta * law.pow(static_cast<unsigned>(sp)));
            CHECK(rb.kappa_min == r0.kappa_min + Rational(sp, 4));
            // T4 ring with the shifted class: kappa unchanged, eta a unit times the base
            CobordismData blown4 = blow_up(imm, RingSpec::T4Quotient);
            ReducibleSummary rb4 = reducible_summary(blown4, RingSpec::Generic);
            CHECK(rb4.kappa_min == r0.kappa_min);
            CHECK(rb4.eta == r0.eta * LaurentPoly::t_power(2 * sp));
        }
    }
}

TEST_CASE("index parity on random diagonal inputs") {
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 300; ++iter) {
        int n = static_cast<int>(rng() % 4);
        std::vector<long long> S, c;
        for (int i = 0; i < n; ++i) {
            S.push_back(static_cast<long long>(rng() % 9) - 4);
            c.push_back(static_cast<long long>(rng() % 5) - 2);
        }
        CobordismData d = CobordismData::product(S, c, rng() % 3,
                                                 2 * static_cast<int>(rng() % 5) - 4,
                                                 2 * static_cast<int>(rng() % 5) - 4);
        ReducibleSummary rs = reducible_summary(d);
        Rational parity_src = Rational(d.chi_s) + Rational(d.self_int(), 2) +
                              Rational(d.sigma_in - d.sigma_out);
        if (parity_src.is_integer() && parity_src.num().even()) {
            REQUIRE(rs.index.is_integer());
            CHECK(!rs.index.num().even());
            CHECK(rs.level.has_value());
        } else if (rs.index.is_integer() && rs.index.num().even()) {
            CHECK(!rs.level.has_value());
        }
    }
}

TEST_CASE("h-shift bound: odd torus disks") {
    for (long long m = 3; m <= 9; m += 2) {
        int sig = static_cast<int>(-(m - 1) * (m + 3) / 2);
        CobordismData d = CobordismData::filling({m}, {}, 0, sig);
        BoundRecord r = h_shift_bound(d);
        CHECK(r.value == Rational((m - 1), 2));
    }
}

TEST_CASE("h-shift bound: product cylinder and full twists") {
    CobordismData cyl = CobordismData::product({}, {}, 0, -4, -4);
    CHECK(h_shift_bound(cyl).value == Rational(0));
    // full twist of linking number d over the T4 quotient: -floor(d^2/4) - dsigma/2
    for (long long deg = 1; deg <= 6; ++deg) {
        CobordismData tw = CobordismData::twist(deg, 0, -2);
        BoundRecord r = h_shift_bound(tw, RingSpec::T4Quotient);
        CHECK(r.value == Rational(-(deg * deg / 4)) - Rational(-2 - 0, 2));
    }
}

TEST_CASE("eta vanishing refuses the bound") {
    // positive double point, T4 ring, c unshifted: blow-up kills eta only
    // when c is not moved; with the shifted class the bound survives
    CobordismData imm = CobordismData::product({}, {}, 0, 0, -2);
    imm.s_plus = 1;
    CHECK(h_shift_bound(imm, RingSpec::T4Quotient).value == Rational(0 - 1 + 1));
    // force the unshifted class: rebuild by hand
    CobordismData raw = CobordismData::product({-2}, {0}, 0, 0, -2);
    ReducibleSummary rs = reducible_summary(raw, RingSpec::T4Quotient);
    CHECK(rs.eta.is_zero());
}

TEST_CASE("gamma-shift bound: the blown-up product table") {
    // degree-2 annulus to the (15,4) knot: i = 1, add-on 1/2
    CobordismData tw = CobordismData::twist(2, 0, -2);
    BoundRecord r = gamma_shift_bound(tw, 0);
    CHECK(r.value == Rational(1, 2));
    CHECK(r.statement.find("Gamma_out(1)") != std::string::npos);
    // the table itself
    CHECK(epsilon_r_table(RingSpec::Generic, 2, 3) == Rational(4));
    CHECK(epsilon_r_table(RingSpec::Generic, 0, 3) == Rational(3));
    CHECK(epsilon_r_table(RingSpec::Generic, 5, 3) == Rational(13, 4));
    CHECK(epsilon_r_table(RingSpec::T4Quotient, 2, 3) == Rational(0));
    CHECK(epsilon_r_table(RingSpec::T4Quotient, 5, 3) == Rational(1, 4));
    // the slice obstruction: Gamma_{7_4}(1) = 3/5 > 1/2
    auto [g, exact] = gamma_of_knot(KnotSpec::double_twist(2, 2), 1);
    CHECK(exact);
    CHECK(g == GammaValue(Rational(3, 5)));
    CHECK(r.value < g.value());
    // negative level refuses
    CobordismData bad = CobordismData::twist(2, -2, 0);
    CHECK_THROWS(gamma_shift_bound(bad, 0));
}

TEST_CASE("gamma-shift bound: product immersed cobordisms") {
    // the clasp inequality shape: genus 0, s+ double points, sigma drop
    CobordismData d = CobordismData::product({}, {}, 0, 0, -2);
    d.s_plus = 2;
    BoundRecord r = gamma_shift_bound(d, 0);
    CHECK(r.value == Rational(1));  // s+/2
    CHECK(r.statement.find("Gamma_out(1)") != std::string::npos);
}

TEST_CASE("concordance bounds for connected sums of 7_4") {
    KnotSpec k = KnotSpec::double_twist(2, 2);
    KnotSpec kn = k;
    for (int n = 1; n <= 10; ++n) {
        if (n > 1) kn = KnotSpec::sum(kn, k);
        auto recs = concordance_bounds(kn);
        bool found_clasp = false;
        for (const auto& r : recs)
            if (r.kind == BoundRecord::Kind::ClaspPlus) {
                found_clasp = true;
                CHECK(r.value == Rational((6 * n + 4) / 5));  // ceil(6n/5)
            }
        CHECK(found_clasp);
    }
}

TEST_CASE("unknotting certificates for the 11-crossing knots") {
    struct Row {
        long long p, q, upper;
    };
    for (const Row& row : {Row{97, 26, 3}, Row{61, 42, 3}, Row{57, 10, 3}, Row{51, 16, 4}}) {
        auto recs = concordance_bounds(KnotSpec::two_bridge(row.p, row.q), row.upper);
        bool cert = false;
        for (const auto& r : recs)
            if (r.kind == BoundRecord::Kind::Unknotting &&
                r.statement.find("=") != std::string::npos &&
                r.statement.find(">=") == std::string::npos) {
                cert = true;
                CHECK(r.value == Rational(row.upper));
            }
        CHECK(cert);
    }
}

TEST_CASE("crosscap bounds via h over the T4 quotient") {
    KnotSpec t34 = KnotSpec::torus(3, 4);
    KnotSpec s = t34;
    for (int k = 1; k <= 5; ++k) {
        if (k > 1) s = KnotSpec::sum(s, t34);
        auto recs = concordance_bounds(s);
        bool found = false;
        for (const auto& r : recs)
            if (r.kind == BoundRecord::Kind::Crosscap) {
                found = true;
                CHECK(r.value == Rational(k));
            }
        CHECK(found);
    }
}

TEST_CASE("embedded surface of matching genus gives the trivial shift") {
    // genus -sigma/2 embedded cobordism from the unknot: i = 0 and the bound
    // reads Gamma_K(0) <= Gamma_U(0) = 0
    CobordismData d = CobordismData::product({}, {}, 1, 0, -2);
    BoundRecord r = gamma_shift_bound(d, 0);
    CHECK(r.value == Rational(0));
    CHECK(r.statement.find("Gamma_out(0)") != std::string::npos);
}

TEST_CASE("bounds fall back to h when gamma is unavailable") {
    // sums of v-incomplete complexes have no exact or lower-bound route
    KnotSpec k = KnotSpec::sum(KnotSpec::two_bridge(51, 16), KnotSpec::two_bridge(51, 16));
    auto recs = concordance_bounds(k);
    bool any_gamma = false, any_crosscap = false;
    for (const auto& r : recs) {
        if (r.kind == BoundRecord::Kind::ClaspPlus) any_gamma = true;
        if (r.kind == BoundRecord::Kind::Crosscap) any_crosscap = true;
    }
    CHECK(!any_gamma);
    CHECK(any_crosscap);
}
