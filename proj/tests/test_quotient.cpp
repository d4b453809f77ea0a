#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quomap/factor.hpp"
#include "quomap/quotient.hpp"
#include "quomap/rng.hpp"
#include "quomap/text.hpp"
#include "test_util.hpp"

using namespace quomap;

namespace {

Subgroup swap_group(const Field& f) { return closure({parse_matrix(f, "[[0,1],[1,0]]")}); }

}  // namespace

TEST_CASE("verify_generator") {
    Field f3 = make_field(3, 1);
    Subgroup g1 = swap_group(f3);
    CHECK(verify_generator(parse_rf(f3, "(x^2+1)/x"), g1));
    CHECK(!verify_generator(parse_rf(f3, "x^2+1"), g1));  // not swap invariant

    Field f2 = make_field(2, 1);
    Subgroup transl = build_translations(f2, {FieldElement(f2, 1)});
    CHECK(!verify_generator(parse_rf(f2, "x^2"), transl));
    CHECK(verify_generator(parse_rf(f2, "x^2+x"), transl));

    Subgroup trivial = closure({ProjElement::identity(f3)});
    CHECK(verify_generator(parse_rf(f3, "x"), trivial));
}

TEST_CASE("normalization") {
    Field f3 = make_field(3, 1);
    Subgroup g1 = swap_group(f3);
    SUBCASE("finite value at infinity flips the fraction") {
        QuotientMap q = normalize_to_quotient_map(parse_rf(f3, "x/(x^2+1)"), g1);
        CHECK(q.rf() == parse_rf(f3, "(x^2+1)/x"));
    }
    SUBCASE("idempotence") {
        QuotientMap q = normalize_to_quotient_map(parse_rf(f3, "(x^2+1)/x"), g1);
        CHECK(q.rf() == parse_rf(f3, "(x^2+1)/x"));
        QuotientMap again = normalize_to_quotient_map(q.rf(), g1);
        CHECK(again.rf() == q.rf());
    }
    SUBCASE("monic rescale keeps the additive constant") {
        Field f5 = make_field(5, 1);
        Subgroup g = closure({parse_matrix(f5, "[[4,0],[0,1]]")});  // order 2: x -> -x
        REQUIRE(g.size() == 2);
        QuotientMap q = normalize_to_quotient_map(parse_rf(f5, "3*x^2+1"), g);
        CHECK(q.num() == parse_poly(f5, "x^2+2"));
        CHECK(affine_equivalent(q.rf(), parse_rf(f5, "x^2+2")));
    }
    SUBCASE("rejects non-generators") {
        CHECK_THROWS_AS(normalize_to_quotient_map(parse_rf(f3, "x"), g1), Error);       // degree 1 != 2
        CHECK_THROWS_AS(normalize_to_quotient_map(parse_rf(f3, "x^2+1"), g1), Error);  // not invariant
    }
}

TEST_CASE("coefficient method reproduces the worked examples") {
    SUBCASE("translations give x^p - x up to affine") {
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
            Field f = make_field(p, 1);
            Subgroup g = build_translations(f, {FieldElement(f, 1)});
            QuotientMap q = quotient_map_fg(g);
            Poly xpx = Poly::monomial(f, 1, p) - Poly::x(f);
            CHECK(affine_equivalent(q.rf(), RationalFunction::of(xpx)));
        }
    }
    SUBCASE("diagonal gives x^n up to affine") {
        Field f5 = make_field(5, 1);
        QuotientMap q = quotient_map_fg(build_diagonal(f5, 4));
        CHECK(affine_equivalent(q.rf(), RationalFunction::of(Poly::monomial(f5, 1, 4))));
        QuotientMap q2 = quotient_map_fg(build_diagonal(f5, 2));
        CHECK(affine_equivalent(q2.rf(), RationalFunction::of(Poly::monomial(f5, 1, 2))));
    }
    SUBCASE("swap gives (x^2+1)/x up to affine") {
        for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
            Field f = make_field(p, 1);
            QuotientMap q = quotient_map_fg(swap_group(f));
            CHECK(affine_equivalent(q.rf(), parse_rf(f, "(x^2+1)/x")));
        }
    }
}

TEST_CASE("orbit method reproduces the closed forms exactly") {
    SUBCASE("translations: the subspace polynomial") {
        Field f3 = make_field(3, 1);
        Subgroup g = build_translations(f3, {FieldElement(f3, 1)});
        QuotientMap q = quotient_map_bluher(g);
        CHECK(q.num() == parse_poly(f3, "x^3+2*x"));
        CHECK(q.den().is_one());

        Field f4 = make_field(2, 2);
        Subgroup v4 = build_translations(f4, {FieldElement(f4, 1), FieldElement(f4, 2)});
        QuotientMap q4 = quotient_map_bluher(v4);
        // prod over GF(4) of (x - v) = x^4 + x
        CHECK(q4.num() == Poly::monomial(f4, 1, 4) + Poly::x(f4));
    }
    SUBCASE("swap over F_5 lands on (x^2+1)/x") {
        Field f5 = make_field(5, 1);
        QuotientMap q = quotient_map_bluher(swap_group(f5));
        CHECK(q.rf() == parse_rf(f5, "(x^2+1)/x"));
    }
    SUBCASE("declines when every rational orbit meets the orbit of infinity") {
        Field f2 = make_field(2, 1);
        Subgroup pgl = build_full_pgl2(f2, 2);
        CHECK_THROWS_AS(quotient_map_bluher(pgl), Error);
        // the coefficient method still works
        QuotientMap q = quotient_map_fg(pgl);
        CHECK(q.num().degree() == 6);
    }
}

TEST_CASE("fg and bluher agree up to affine post-composition") {
    Field f5 = make_field(5, 1);
    Rng rng(42);
    int done = 0;
    while (done < 15) {
        ProjElement a = testutil::random_proj(f5, rng);
        Subgroup g = closure({a});
        try {
            QuotientMap qb = quotient_map_bluher(g);
            QuotientMap qf = quotient_map_fg(g);
            CHECK(affine_equivalent(qb, qf));
        } catch (const Error& e) {
            if (e.code() != Errc::NoRationalOrbit) throw;
        }
        ++done;
    }
}

TEST_CASE("closed forms for the named families") {
    SUBCASE("Borel: the product of all irreducible quadratics") {
        Field f3 = make_field(3, 1);
        QuotientMap q = closed_form_borel(build_borel(f3, 3), 3);
        Poly prod = Poly::one(f3);
        for (const Poly& r : irreducibles_of_degree(f3, 2)) prod = prod * r;
        CHECK(q.num() == prod);
        CHECK(q.den().is_one());
    }
    SUBCASE("PGL2: cubics over the q-powered denominator") {
        Field f2 = make_field(2, 1);
        QuotientMap q = closed_form_pgl2(build_full_pgl2(f2, 2), 2);
        CHECK(q.num() == parse_poly(f2, "x^6+x^5+x^4+x^3+x^2+x+1"));
        CHECK(q.den() == parse_poly(f2, "x^4+x^2"));  // (x^2-x)^2
    }
    SUBCASE("diagonal: x^n") {
        Field f5 = make_field(5, 1);
        QuotientMap q = closed_form_diagonal(build_diagonal(f5, 4), 4);
        CHECK(q.num() == Poly::monomial(f5, 1, 4));
    }
}

TEST_CASE("quotient maps of embedded groups") {
    // B(q) realized over GF(q^2): the orbit method gives prod I_q^2 embedded
    Field f9 = make_field(3, 2);
    Subgroup b3 = build_borel(f9, 3);
    QuotientMap q = quotient_map_bluher(b3);
    Field f3 = make_field(3, 1);
    Poly prod = Poly::one(f3);
    for (const Poly& r : irreducibles_of_degree(f3, 2)) prod = prod * r;
    CHECK(q.num() == embed_poly(prod, f9));
    CHECK(q.den().is_one());
}

TEST_CASE("affine equivalence") {
    Field f5 = make_field(5, 1);
    RationalFunction q = parse_rf(f5, "(x^2+1)/x");
    CHECK(affine_equivalent(q, parse_rf(f5, "(x^2+x+1)/x")));       // Q + 1
    CHECK(affine_equivalent(q, parse_rf(f5, "(x^2+1)/(3*x)")));     // 2*Q
    CHECK(!affine_equivalent(q, parse_rf(f5, "(x^3+1)/x")));
    CHECK(!affine_equivalent(q, parse_rf(f5, "(x^2+1)/(x+1)")));
}
