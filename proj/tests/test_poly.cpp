#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quomap/factor.hpp"
#include "quomap/poly.hpp"
#include "quomap/quotient.hpp"
#include "quomap/rng.hpp"
#include "quomap/text.hpp"
#include "test_util.hpp"

using namespace quomap;

TEST_CASE("ring operations") {
    Field f2 = make_field(2, 1);
    Poly xp1 = parse_poly(f2, "x+1");
    CHECK(xp1 * xp1 == parse_poly(f2, "x^2+1"));

    auto [q, r] = divrem(Poly::monomial(f2, 1, 3), Poly::monomial(f2, 1, 2));
    CHECK(q == Poly::x(f2));
    CHECK(r.is_zero());

    Field f3 = make_field(3, 1);
    CHECK(parse_poly(f3, "x^2+1") + parse_poly(f3, "x^2+2") == parse_poly(f3, "2*x^2"));
}

TEST_CASE("ring axioms and divrem round-trip") {
    Rng rng(5150);
    for (Field f : {make_field(2, 1), make_field(3, 1), make_field(2, 2), make_field(5, 1)}) {
        for (int trial = 0; trial < 150; ++trial) {
            Poly a = testutil::random_poly(f, 6, rng);
            Poly b = testutil::random_poly(f, 6, rng);
            Poly c = testutil::random_poly(f, 6, rng);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            if (!b.is_zero()) {
                auto [q, r] = divrem(a, b);
                CHECK(q * b + r == a);
                if (!r.is_zero()) CHECK(r.degree() < b.degree());
            }
        }
    }
}

TEST_CASE("gcd") {
    Field f5 = make_field(5, 1);
    CHECK(gcd_monic(parse_poly(f5, "x^2+4"), parse_poly(f5, "x+4")) == parse_poly(f5, "x+4"));
    Field f3 = make_field(3, 1);
    CHECK(gcd_monic(parse_poly(f3, "x^2+1"), Poly::x(f3)).is_one());
    Poly f = parse_poly(f3, "2*x^3+x+1");
    CHECK(gcd_monic(f, f) == f.monic());
    CHECK(gcd_monic(f, Poly::zero(f3)) == f.monic());
    CHECK_THROWS_AS(gcd_monic(Poly::zero(f3), Poly::zero(f3)), Error);

    Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = testutil::random_poly(f5, 5, rng);
        Poly b = testutil::random_poly(f5, 5, rng);
        Poly w = testutil::random_monic(f5, 1 + rng.below(3), rng);
        if (a.is_zero() && b.is_zero()) continue;
        CHECK(gcd_monic(a * w, b * w) == w * gcd_monic(a, b));
    }
}

TEST_CASE("evaluation with the infinity convention") {
    Field f3 = make_field(3, 1);
    Poly f = parse_poly(f3, "x^2+1");
    CHECK(eval_p1(f, P1Value::infinity(f3)).is_infinity());
    CHECK(eval_p1(Poly::constant(FieldElement(f3, 2)), P1Value::infinity(f3)) ==
          P1Value::of(FieldElement(f3, 2)));
    CHECK(eval_p1(f, P1Value::of(FieldElement(f3, 1))) == P1Value::of(FieldElement(f3, 2)));
}

TEST_CASE("derivative and squarefree part") {
    Field f3 = make_field(3, 1);
    CHECK(derivative(Poly::monomial(f3, 1, 3)).is_zero());
    CHECK(derivative_squarefree(parse_poly(f3, "x^2+2*x+1")).second == parse_poly(f3, "x+1"));

    Field f2 = make_field(2, 1);
    CHECK(derivative_squarefree(parse_poly(f2, "x^4+x^2")).second == parse_poly(f2, "x^2+x"));

    Rng rng(88);
    for (Field f : {make_field(2, 1), make_field(3, 1), make_field(2, 2)}) {
        for (int trial = 0; trial < 80; ++trial) {
            Poly g = testutil::random_monic(f, 1 + rng.below(5), rng);
            auto [deriv, sq] = derivative_squarefree(g);
            if (!deriv.is_zero() && gcd_monic(g, deriv).is_one()) CHECK(sq == g);
            if (sq == g) {
                // g squarefree: the squarefree part of g^2 is g again
                CHECK(derivative_squarefree(g * g).second == g);
            }
        }
    }
}

TEST_CASE("squarefree decomposition reassembles") {
    Rng rng(1312);
    for (Field f : {make_field(2, 1), make_field(3, 1), make_field(5, 1)}) {
        for (int trial = 0; trial < 60; ++trial) {
            Poly a = testutil::random_monic(f, 1 + rng.below(3), rng);
            Poly b = testutil::random_monic(f, 1 + rng.below(2), rng);
            Poly g = a * a * b;
            Poly acc = Poly::one(f);
            for (auto& [part, mult] : squarefree_decomposition(g)) {
                acc = acc * poly_pow(part, mult);
                CHECK(derivative_squarefree(part).second == part);
            }
            CHECK(acc == g.monic());
        }
    }
}

TEST_CASE("reciprocal") {
    Field f3 = make_field(3, 1);
    CHECK(reciprocal(parse_poly(f3, "x^2+1")) == parse_poly(f3, "x^2+1"));
    Field f5 = make_field(5, 1);
    CHECK(reciprocal(parse_poly(f5, "2*x+1")) == parse_poly(f5, "x+2"));
    CHECK_THROWS_AS(reciprocal(Poly::x(f5)), Error);
}

TEST_CASE("poly_less matches the canonical listing order") {
    Field f2 = make_field(2, 1);
    CHECK(poly_less(parse_poly(f2, "x^3+x+1"), parse_poly(f2, "x^3+x^2+1")));
    CHECK(poly_less(parse_poly(f2, "x+1"), parse_poly(f2, "x^2+1")));
    CHECK(!poly_less(parse_poly(f2, "x^3+x+1"), parse_poly(f2, "x^3+x+1")));
}

TEST_CASE("resultant: degree-1 input is evaluation") {
    Field f7 = make_field(7, 1);
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElement a = testutil::random_element(f7, rng);
        Poly g = testutil::random_poly(f7, 4, rng);
        Poly h = testutil::random_monic(f7, 1 + rng.below(3), rng);
        if (g.is_zero() || !gcd_monic(g, h).is_one()) continue;
        if (h.eval(a).is_zero()) continue;
        Poly r = Poly::linear_root(a);
        Poly res = resultant_in_y(r, g, h);
        // root at y = g(a)/h(a)
        REQUIRE(!res.is_zero());
        CHECK(res.degree() == 1);
        CHECK(res.monic() == Poly::linear_root(g.eval(a) / h.eval(a)));
    }
}

TEST_CASE("resultant: frozen example over F_3") {
    Field f3 = make_field(3, 1);
    Poly r = parse_poly(f3, "x^2+1");
    Poly res = resultant_in_y(r, parse_poly(f3, "x^2+1"), Poly::x(f3));
    // Q(v) = (v^2+1)/v vanishes at both roots of x^2+1, so res ~ y^2
    CHECK(res.monic() == parse_poly(f3, "x^2"));
}

TEST_CASE("resultant against the splitting-field oracle") {
    // brute force: embed r into GF(q^deg r), enumerate its roots there, and
    // multiply (y - g(v)/h(v)) directly
    Rng rng(31337);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        Field base = make_field(p, 1);
        for (unsigned d = 1; d <= 3; ++d) {
            Field ext = make_field(p, d);
            for (const Poly& r : irreducibles_of_degree(base, d)) {
                Poly g = testutil::random_poly(base, 4, rng);
                Poly h = testutil::random_monic(base, rng.below(3), rng);
                if (g.is_zero() || !gcd_monic(g, h).is_one()) continue;
                if (!h.is_constant() && !gcd_monic(r, h).is_one()) continue;

                Poly re = embed_poly(r, ext);
                Poly ge = embed_poly(g, ext);
                Poly he = embed_poly(h, ext);
                Poly expected = Poly::one(ext);
                std::size_t nroots = 0;
                for (std::uint64_t c = 0; c < ext->q(); ++c) {
                    FieldElement v(ext, c);
                    if (!re.eval(v).is_zero()) continue;
                    ++nroots;
                    expected = expected * Poly::linear_root(ge.eval(v) / he.eval(v));
                }
                REQUIRE(nroots == d);
                Poly res = resultant_in_y(r, g, h);
                REQUIRE(!res.is_zero());
                CHECK(embed_poly(res.monic(), ext) == expected);
            }
        }
    }
}

TEST_CASE("resultant rejects shared roots") {
    Field f3 = make_field(3, 1);
    CHECK_THROWS_AS(resultant_in_y(Poly::x(f3), parse_poly(f3, "x^2+1"), Poly::x(f3)), Error);
    CHECK_THROWS_AS(resultant_in_y(parse_poly(f3, "x+1"), parse_poly(f3, "x^2+2*x"), parse_poly(f3, "x")),
                    Error);
}

TEST_CASE("text round-trips") {
    Field f9 = make_field(3, 2);
    for (const char* s : {"x^3+2*x", "(1,2)*x^2+(0,1)", "x", "2", "0", "x^2+x+1"}) {
        Poly f = parse_poly(f9, s);
        CHECK(parse_poly(f9, to_string(f)) == f);
    }
    Field f3 = make_field(3, 1);
    CHECK(to_string(parse_poly(f3, "2x^2 + x")) == "2*x^2+x");
    CHECK(to_string(parse_poly(f3, "x^3 - x")) == "x^3+2*x");
    CHECK_THROWS_AS(parse_poly(f3, "x^^2"), ParseFailure);
    CHECK_THROWS_AS(parse_poly(f3, "y+1"), ParseFailure);
}
