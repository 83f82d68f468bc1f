#include <doctest.h>

#include "qfrep/error.hpp"
#include "qfrep/poly.hpp"
#include "support.hpp"

using namespace qfrep;
using testsupport::Q;

TEST_CASE("discriminant examples") {
    CHECK(poly_discriminant(UniPoly{2, 3, 1}) == 1);
    CHECK(poly_discriminant(UniPoly{1, -2, 1}) == 0);
    UniPoly f{3, 0, 0, 0, 1};
    Rational v = poly_discriminant(f);
    CHECK(v != 0);
    CHECK(v == testsupport::sylvester_discriminant(f));
    CHECK(v == 6912);
    CHECK_THROWS_AS(poly_discriminant(UniPoly{5}), Error);
}

TEST_CASE("resultant examples") {
    Rational r = poly_resultant(UniPoly{-1, 1}, UniPoly{-2, 1});
    CHECK(abs(r) == 1);
    CHECK(poly_resultant(UniPoly{-1, 1}, UniPoly{-1, 1}) == 0);
    CHECK_THROWS_AS(poly_resultant(UniPoly(), UniPoly{1, 1}), Error);
}

TEST_CASE("evaluation") {
    UniPoly f{3, 0, 0, 0, 1};
    CHECK(poly_eval(f, Rational(1)) == 4);
    CHECK(poly_eval(f, Q("-1/2")) == Q("49/16"));
    CHECK(poly_eval(UniPoly(), Q("5/3")) == 0);
}

TEST_CASE("resultant and discriminant agree with the Sylvester determinant (deg <= 6)") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 120; ++i) {
        int df = 1 + static_cast<int>(i % 6), dg = 1 + static_cast<int>((i / 6) % 6);
        UniPoly f = testsupport::random_poly(rng, df), g = testsupport::random_poly(rng, dg);
        CHECK(poly_resultant(f, g) == testsupport::sylvester_resultant(f, g));
        if (df >= 2) CHECK(poly_discriminant(f) == testsupport::sylvester_discriminant(f));
    }
}

TEST_CASE("Disc(fg) = Disc(f) Disc(g) Res(f, g)^2") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        UniPoly f = testsupport::random_poly(rng, 2 + i % 3), g = testsupport::random_poly(rng, 2 + (i / 3) % 3);
        Rational res = poly_resultant(f, g);
        CHECK(poly_discriminant(f * g) == poly_discriminant(f) * poly_discriminant(g) * res * res);
    }
}

TEST_CASE("division, gcd and square roots") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        UniPoly f = testsupport::random_poly(rng, 5), g = testsupport::random_poly(rng, 1 + i % 4);
        DivMod d = divmod(f, g);
        CHECK(d.quotient * g + d.remainder == f);
        CHECK(d.remainder.degree() < g.degree());
        UniPoly h = testsupport::random_poly(rng, 2);
        CHECK(exact_div(f * h, h) == f);
        auto s = poly_sqrt(g * g);
        REQUIRE(s.has_value());
        CHECK((*s) * (*s) == g * g);
        CHECK(divmod(f * h, poly_gcd(f * h, g * h)).remainder.is_zero());
    }
    CHECK_FALSE(poly_sqrt(UniPoly{1, 0, 2}).has_value());
    CHECK_THROWS_AS(exact_div(UniPoly{1, 0, 1}, UniPoly{1, 1}), Error);
}

TEST_CASE("real root counting") {
    // (x - 1)(x + 2)(x - 3/2)(x^2 + 1)
    UniPoly f = UniPoly{-1, 1} * UniPoly{2, 1} * UniPoly{Q("-3/2"), 1} * UniPoly{1, 0, 1};
    CHECK(count_real_roots(f) == 3);
    CHECK(count_real_roots_in(f, Rational(0), Rational(2)) == 2);
    CHECK(count_real_roots_in(f, Rational(-2), Rational(1)) == 1);  // (a, b]
    CHECK(count_real_roots(UniPoly{1, 0, 1}) == 0);
    CHECK(integer_roots(f) == std::vector<Integer>{-2, 1});
}

TEST_CASE("variable operations") {
    UniPoly f{1, 2, 3};
    CHECK(f.scale_var(Rational(2)) == UniPoly{1, 4, 12});
    CHECK(f.shift(Rational(1)) == UniPoly{6, 8, 3});
    CHECK(f.reversed(4) == UniPoly{0, 0, 3, 2, 1});
    CHECK(f.compose(UniPoly{0, 0, 1}) == UniPoly{1, 0, 2, 0, 3});
    IntegerPoly ip = to_primitive(UniPoly{Q("2/3"), Q("4/9")});
    CHECK(ip.coeffs == std::vector<Integer>{3, 2});
    CHECK(ip.scale == Q("2/9"));
}

TEST_CASE("nested polynomials") {
    // P = (1 + u) + (2u) T; f(P) for f = x^2 checks composition against direct evaluation.
    NestedPoly P({UniPoly{1, 1}, UniPoly{0, 2}});
    UniPoly f{0, 0, 1};
    NestedPoly fp = compose(f, P);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        Rational t = testsupport::rnd(rng), u = testsupport::rnd(rng);
        Rational v = P.eval(t, u);
        CHECK(fp.eval(t, u) == v * v);
        CHECK(fp.eval_outer(t).eval(u) == v * v);
        CHECK(fp.eval_inner(u).eval(t) == v * v);
    }
}
