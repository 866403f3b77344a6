#include "a2w/errors.hpp"
#include "a2w/mat3.hpp"
#include "a2w/poly.hpp"
#include "a2w/ppoint.hpp"
#include "a2w/rat.hpp"
#include "a2w/rng.hpp"

#include <doctest.h>

using namespace a2w;

TEST_CASE("rational text format roundtrip") {
    CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(4, 2)) == "2");
    CHECK(parse_rat("-3/7") == Rat(-3, 7));
    CHECK(parse_rat("+2/4") == Rat(1, 2));
    CHECK(parse_rat("0") == Rat(0));
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rat("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rat("1 / 2"), ParseError);
    CHECK_THROWS_AS(parse_rat("3.5"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    Rng rng(42);
    for (int t = 0; t < 10000; ++t) {
        Rat a = rng.rat(50, 50), b = rng.nonzero_rat(50, 50);
        CHECK((a / b) * b == a);
        CHECK((a + b) - b == a);
    }
    // Canonical form: positive denominator, lowest terms.
    Rat r = make_rat(-6, -8);
    CHECK(numerator(r) == 3);
    CHECK(denominator(r) == 4);
    CHECK(make_rat(6, -8) == Rat(-3, 4));
    CHECK_THROWS_AS(make_rat(1, 0), InvalidParameter);
}

TEST_CASE("interpolate_quadratic meets its three conditions") {
    // (1, 2, 3) -> 3z^2 - 2z + 1.
    Poly p = interpolate_quadratic(1, 2, 3);
    CHECK(p == Poly({Rat(1), Rat(-2), Rat(3)}));
    CHECK(interpolate_quadratic(0, 0, 0).is_zero());
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Rat v0 = rng.rat(), v1 = rng.rat(), vl = rng.rat();
        Poly q = interpolate_quadratic(v0, v1, vl);
        CHECK(q.eval(0) == v0);
        CHECK(q.eval(1) == v1);
        CHECK(q.coeff(2) == vl);
        CHECK(q.degree() <= 2);
    }
}

TEST_CASE("polynomial basics") {
    Poly z = Poly::variable();
    Poly p = z * z - 2 * Rat(1) * z + Poly(Rat(1));
    CHECK(p.eval(1) == 0);
    CHECK(p.degree() == 2);
    CHECK(p.derivative() == Poly({Rat(-2), Rat(2)}));
    // Canonical degree: trailing zeros dropped.
    CHECK(Poly({Rat(1), Rat(0), Rat(0)}).degree() == 0);
    CHECK((p - p).is_zero());
    // Composition with 1 - z.
    Poly one_minus_z({Rat(1), Rat(-1)});
    CHECK(p.compose(one_minus_z).eval(0) == p.eval(1));
    CHECK(p.compose(one_minus_z).eval(Rat(1, 3)) == p.eval(Rat(2, 3)));
}

TEST_CASE("residue_of_form") {
    MatP id = MatP::identity();
    CHECK(residue_of_form(id, 0) == MatQ::identity().scaled(-1));
    CHECK(residue_of_form(id, 1) == MatQ::identity());
    // residue(A,0) + residue(A,1) = A(1) - A(0) coefficientwise.
    Rng rng(3);
    MatP A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = Poly({rng.rat(), rng.rat(), rng.rat()});
    MatQ sum = residue_of_form(A, 0) + residue_of_form(A, 1);
    CHECK(sum == A.eval(1) - A.eval(0));
}

TEST_CASE("char_poly_matches") {
    MatQ d;
    d(0, 0) = 1; d(1, 1) = 2; d(2, 2) = 3;
    CHECK(char_poly_matches(d, {Rat(1), Rat(2), Rat(3)}));
    CHECK(char_poly_matches(d, {Rat(3), Rat(1), Rat(2)}));  // multiset order irrelevant
    CHECK_FALSE(char_poly_matches(d, {Rat(1), Rat(1), Rat(3)}));
    // Non-diagonalizable matrix with the right char poly still matches.
    MatQ n;
    n(0, 0) = 1; n(0, 1) = 1; n(1, 1) = 1; n(2, 2) = 2;
    CHECK(char_poly_matches(n, {Rat(1), Rat(1), Rat(2)}));
}

TEST_CASE("matrix inverse and gauge transform") {
    Rng rng(11);
    MatQ m;
    do {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = rng.rat();
    } while (m.det() == 0);
    CHECK(m * m.inverse() == MatQ::identity());
    // Constant gauges reduce to plain conjugation.
    MatP A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = Poly({rng.rat(), rng.rat()});
    MatP g = MatP::from_const(m);
    MatP conj = gauge_transform(A, g);
    MatP expect = MatP::from_const(m.inverse()) * A * g;
    CHECK(conj == expect);
    // Non-constant determinant rejected.
    MatP bad = MatP::identity();
    bad(0, 0) = Poly::variable();
    CHECK_THROWS_AS(gauge_transform(A, bad), InvalidParameter);
}

TEST_CASE("projective point canonicalization") {
    PPoint p(Rat(2), Rat(4), Rat(6));
    CHECK(p[0] == 1);
    CHECK(p[1] == 2);
    CHECK(p[2] == 3);
    // Idempotent and scale-invariant.
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        if (a == 0 && b == 0 && c == 0) continue;
        Rat s = rng.nonzero_rat();
        CHECK(PPoint(a, b, c) == PPoint(s * a, s * b, s * c));
        PPoint q(a, b, c);
        CHECK(PPoint(q[0], q[1], q[2]) == q);
    }
    CHECK_THROWS_AS(PPoint(Rat(0), Rat(0), Rat(0)), InvalidParameter);
    // Chart relation q' = 1/q, p' = p/q off the triangle.
    MPoint m(Rat(2), Rat(3));
    auto [q, pp] = m.chart1();
    auto [q2, p2] = m.chart2();
    CHECK(q2 == 1 / q);
    CHECK(p2 == pp / q);
    CHECK_THROWS_AS(MPoint(Rat(1), Rat(5)), InvalidParameter);  // q = 1 is on the triangle
}

TEST_CASE("MatX rref, nullspace, solve") {
    MatX m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    CHECK(m.rank() == 1);
    CHECK(m.nullspace().size() == 2);
    MatX s(2, 2);
    s(0, 0) = 1; s(0, 1) = 1; s(1, 0) = 1; s(1, 1) = -1;
    auto x = s.solve({Rat(3), Rat(1)});
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);
    MatX sing(2, 2);
    sing(0, 0) = 1; sing(0, 1) = 1; sing(1, 0) = 2; sing(1, 1) = 2;
    CHECK_THROWS_AS(sing.solve({Rat(1), Rat(3)}), SingularSystem);
}
