#include "a2w/connection.hpp"
#include "a2w/errors.hpp"
#include "a2w/rng.hpp"
#include "a2w/surface.hpp"

#include <doctest.h>

using namespace a2w;

namespace {

ParamVector fixture() {
    ParamVector nu;
    nu(0, 0) = Rat(1, 5); nu(0, 1) = Rat(2, 5); nu(0, 2) = Rat(-3, 5);
    nu(1, 0) = Rat(1, 7); nu(1, 1) = Rat(2, 7); nu(1, 2) = Rat(-3, 7);
    nu(2, 0) = Rat(1, 2); nu(2, 1) = Rat(5, 6); nu(2, 2) = Rat(2, 3);
    return nu;
}

std::array<Rat, 3> row(const ParamVector& nu, int i) { return {nu(i, 0), nu(i, 1), nu(i, 2)}; }

}  // namespace

TEST_CASE("normal form entries and residue exponents") {
    ParamVector nu = fixture();
    Rat q = 2, p = 3;
    ConnectionForm conn = build_normal_form(q, p, nu, Chart::U0);
    // a12(0) = -p^2 - e2(nu_0) = -9 - e2.
    Rat e2_0 = nu(0, 0) * nu(0, 1) + nu(0, 1) * nu(0, 2) + nu(0, 2) * nu(0, 0);
    CHECK(conn.A(0, 1).eval(0) == -9 - e2_0);
    // Shape pieces.
    CHECK(conn.A(1, 0) == Poly(Rat(1)));
    CHECK(conn.A(1, 1) == Poly(-p));
    CHECK(conn.A(2, 1) == Poly({-q, Rat(1)}));
    check_degree_bounds(conn);
    // Residues carry the nu rows at 0, 1, inf.
    CHECK(char_poly_matches(residue_at_pole(conn, Pole::Zero), row(nu, 0)));
    CHECK(char_poly_matches(residue_at_pole(conn, Pole::One), row(nu, 1)));
    CHECK(char_poly_matches(residue_at_pole(conn, Pole::Infinity), row(nu, 2)));
    // q a13(0) = (p + nu00)(p + nu01)(p + nu02).
    CHECK(q * conn.A(0, 2).eval(0) ==
          (p + nu(0, 0)) * (p + nu(0, 1)) * (p + nu(0, 2)));
    // Leading coefficients: a12 has z^2 coefficient 1 - e2(nu_inf), a13 has
    // prod(1 - nu_inf_j).
    Rat e2_inf = nu(2, 0) * nu(2, 1) + nu(2, 1) * nu(2, 2) + nu(2, 2) * nu(2, 0);
    CHECK(conn.A(0, 1).coeff(2) == 1 - e2_inf);
    CHECK(conn.A(0, 2).coeff(2) == (1 - nu(2, 0)) * (1 - nu(2, 1)) * (1 - nu(2, 2)));
    // Chart boundary rejected.
    CHECK_THROWS_AS(build_normal_form(Rat(0), p, nu, Chart::U0), ChartUnavailable);
    CHECK_THROWS_AS(build_normal_form(Rat(1), p, nu, Chart::U0), ChartUnavailable);
}

TEST_CASE("both charts agree on exponent data") {
    Rng rng(307);
    for (int t = 0; t < 100; ++t) {
        ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N0);
        auto [q, p] = random_qp(rng);
        MPoint pt(q, p);
        NormalFormPair pair = build_normal_form(pt, nu);
        for (Pole pole : {Pole::Zero, Pole::One, Pole::Infinity}) {
            int i = pole == Pole::Zero ? 0 : pole == Pole::One ? 1 : 2;
            CHECK(char_poly_matches(residue_at_pole(pair.u0, pole), row(nu, i)));
            CHECK(char_poly_matches(residue_at_pole(pair.uinf, pole), row(nu, i)));
        }
        // Transfer of the U0 form normalizes to the UInf template exactly.
        ConnectionForm moved = chart_transfer(pair.u0);
        CHECK(moved.chart == Chart::UInf);
        CHECK(normalize_split_frame(moved).normal.A == pair.uinf.A);
        // And back.
        ConnectionForm back = chart_transfer(pair.uinf);
        CHECK(back.chart == Chart::U0);
        CHECK(normalize_split_frame(back).normal.A == pair.u0.A);
    }
}

TEST_CASE("apparent_pair roundtrip and shape mismatches") {
    Rng rng(311);
    for (int t = 0; t < 100; ++t) {
        ParamVector nu = random_nu(rng, Membership::N0);
        auto [q, p] = random_qp(rng);
        ConnectionForm conn = build_normal_form(q, p, nu, Chart::U0);
        auto [q2, p2] = apparent_pair(conn);
        CHECK(q2 == q);
        CHECK(p2 == p);
    }
    // Shape template directly: (3,2) = z - 7, (3,3) = 4.
    ConnectionForm direct;
    direct.A(1, 0) = Poly(Rat(1));
    direct.A(1, 1) = Poly(Rat(-4));
    direct.A(2, 1) = Poly({Rat(-7), Rat(1)});
    direct.A(2, 2) = Poly(Rat(4));
    auto [q3, p3] = apparent_pair(direct);
    CHECK(q3 == 7);
    CHECK(p3 == 4);
    // Violations are named.
    ConnectionForm bad = direct;
    bad.A(1, 2) = Poly(Rat(5));
    CHECK_THROWS_AS(apparent_pair(bad), ShapeMismatch);
    try {
        apparent_pair(bad);
    } catch (const ShapeMismatch& e) {
        CHECK(e.entry == "(2,3)");
    }
}

TEST_CASE("normalize_split_frame: identity on normal input, gauge roundtrip") {
    ParamVector nu = fixture();
    ConnectionForm conn = build_normal_form(Rat(2), Rat(3), nu, Chart::U0);
    NormalizeResult res = normalize_split_frame(conn);
    CHECK(res.normal.A == conn.A);
    CHECK(res.gauge == MatP::identity());

    Rng rng(313);
    for (int t = 0; t < 50; ++t) {
        ParamVector v = random_nu(rng, Membership::N0);
        auto [q, p] = random_qp(rng);
        ConnectionForm base = build_normal_form(q, p, v, Chart::U0);
        // Random admissible gauge: [[u, lin, lin], [0, c, c], [0, c, c]].
        MatP g = MatP::identity();
        g(0, 0) = Poly(rng.nonzero_rat());
        g(0, 1) = Poly({rng.rat(), rng.rat()});
        g(0, 2) = Poly({rng.rat(), rng.rat()});
        Rat c11, c12, c21, c22;
        do {
            c11 = rng.rat(); c12 = rng.rat(); c21 = rng.rat(); c22 = rng.rat();
        } while (c11 * c22 - c12 * c21 == 0);
        g(1, 1) = Poly(c11); g(1, 2) = Poly(c12); g(2, 1) = Poly(c21); g(2, 2) = Poly(c22);
        ConnectionForm scrambled = base;
        scrambled.A = gauge_transform(base.A, g);
        CHECK(normalize_split_frame(scrambled).normal.A == base.A);
    }

    // A reducible input (nabla preserves the O summand) has no gauge.
    ConnectionForm red;
    red.A(0, 0) = Poly(Rat(1));
    red.A(1, 1) = Poly(Rat(2));
    red.A(2, 2) = Poly(Rat(-3));
    CHECK_THROWS_AS(normalize_split_frame(red), NoGauge);
}

TEST_CASE("sigma realizations at the connection level") {
    Rng rng(317);
    for (int t = 0; t < 50; ++t) {
        ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N0);
        auto [q, p] = random_qp(rng);
        ConnectionForm conn = build_normal_form(q, p, nu, Chart::U0);

        ConnectionForm s1 = realize_sigma(Generator::S1, conn);
        auto [q1, p1] = apparent_pair(s1);
        CHECK(q1 == 1 - q);
        CHECK(p1 == -p);
        if (q != Rat(1, 2)) {
            CHECK(s1.A == build_normal_form(1 - q, -p, act_nu(Generator::S1, nu), Chart::U0).A);
            CHECK(realize_sigma(Generator::S1, s1).A == conn.A);
        }

        // s2 agrees with the calibrated plane map phi_s2.
        PPoint img = eval_map(phi_generator(Generator::S2, nu), PPoint(q, p, 1));
        auto ch = img.chart1();
        REQUIRE(ch);
        if (ch->first != 0 && ch->first != 1) {
            ConnectionForm s2 = realize_sigma(Generator::S2, conn);
            auto [q2, p2] = apparent_pair(s2);
            CHECK(q2 == ch->first);
            CHECK(p2 == ch->second);
            CHECK(s2.A == build_normal_form(q2, p2, act_nu(Generator::S2, nu), Chart::U0).A);
        }
    }
}

TEST_CASE("fuchs_sum") {
    ParamVector nu = fixture();
    CHECK(fuchs_sum(nu, -2) == 0);
    CHECK(fuchs_sum(act_nu(Generator::W3, nu), -2) == 0);
    // G = E (x) O(1): infinity exponents shift by -1 each, degree by +3.
    ParamVector gexp = nu;
    for (int j = 0; j < 3; ++j) gexp(2, j) -= 1;
    CHECK(fuchs_sum(gexp, 1) == 0);
    CHECK(fuchs_sum(nu, 0) == 2);
}

TEST_CASE("tensor twist bookkeeping") {
    ParamVector nu = fixture();
    ConnectionForm conn = build_normal_form(Rat(2), Rat(3), nu, Chart::U0);
    ConnectionForm g = tensor_twist(conn, +1);
    CHECK(g.split_degrees == std::array<int, 3>{1, 0, 0});
    CHECK(g.degree() == 1);
    CHECK(g.A == conn.A);
    // Infinity exponents move by -1 each.
    std::array<Rat, 3> shifted = {nu(2, 0) - 1, nu(2, 1) - 1, nu(2, 2) - 1};
    CHECK(char_poly_matches(residue_at_pole(g, Pole::Infinity), shifted));
    CHECK(char_poly_matches(residue_at_pole(g, Pole::Zero), {nu(0, 0), nu(0, 1), nu(0, 2)}));
    CHECK(tensor_twist(g, -1) == conn);
}
