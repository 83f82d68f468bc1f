#include <doctest.h>

#include <algorithm>

#include "qfrep/elliptic.hpp"
#include "qfrep/error.hpp"
#include "support.hpp"

using namespace qfrep;
using testsupport::Q;

namespace {
const WCurve E10{Rational(588), Rational(36), Rational(0)};
const WCurve E1{Rational(2), Rational(-128), Rational(480)};
const WCurve E11{Rational(-1), Rational(-4), Rational(-2)};
}  // namespace

TEST_CASE("group law basics") {
    WPoint P = WPoint::affine(36, -900);
    REQUIRE(on_curve(E10, P));
    CHECK(w_add(E10, P, WPoint::identity()) == P);
    CHECK(w_add(E10, P, w_neg(P)).inf);
    WPoint R = w_add(E10, P, P);
    CHECK(on_curve(E10, R));
    CHECK_FALSE(R.inf);
    CHECK(w_mul(E10, 0, P).inf);
    CHECK(w_mul(E10, 1, P) == P);
    CHECK(w_mul(E1, 4, WPoint::affine(4, 8)).inf);
    CHECK_THROWS_AS(w_add(E10, WPoint::affine(1, 1), P), Error);
}

TEST_CASE("torsion subgroups") {
    TorsionGroup T1 = torsion_subgroup(E1);
    CHECK(T1.order == 4);
    CHECK(T1.structure == "Z/4");
    CHECK(std::find(T1.points.begin(), T1.points.end(), WPoint::affine(4, 8)) != T1.points.end());
    TorsionGroup T11 = torsion_subgroup(E11);
    CHECK(T11.order == 2);
    REQUIRE(T11.points.size() == 2);
    CHECK(T11.points[0].inf);
    CHECK(T11.points[1] == WPoint::affine(-1, 0));
    TorsionGroup T10 = torsion_subgroup(E10);
    CHECK(std::find(T10.points.begin(), T10.points.end(), WPoint::affine(0, 0)) != T10.points.end());
    CHECK(point_order(E10, WPoint::affine(0, 0)) == 2);
}

TEST_CASE("torsion points have the stated orders (Mazur-admissible)") {
    std::mt19937_64 rng(41);
    std::vector<WCurve> curves{E1, E11, E10, {0, -1, 0}, {0, 0, 1}, {1, -10, -24}};
    for (int i = 0; i < 20; ++i) curves.push_back(testsupport::random_curve_with_points(rng).E);
    for (const WCurve& E : curves) {
        TorsionGroup T = torsion_subgroup(E);
        CHECK(T.order <= 16);
        CHECK(T.order != 11);
        CHECK(static_cast<int>(T.points.size()) == T.order);
        for (std::size_t i = 0; i < T.points.size(); ++i) {
            CHECK(on_curve(E, T.points[i]));
            CHECK(w_mul(E, T.orders[i], T.points[i]).inf);
            CHECK(T.order % T.orders[i] == 0);
        }
    }
}

TEST_CASE("infinite-order certification") {
    CHECK(certify_infinite_order(E10, WPoint::affine(36, -900)));
    CHECK_FALSE(certify_infinite_order(E1, WPoint::affine(4, 8)));
    CHECK(certify_infinite_order(E11, WPoint::affine(Q("-3/4"), Q("-1/8"))));
    // Definitional check: a certified point has [n]P != O for n <= 12.
    WPoint P = WPoint::affine(36, -900);
    for (long n = 1; n <= 12; ++n) CHECK_FALSE(w_mul(E10, n, P).inf);
}

TEST_CASE("group law axioms on 200 random triples") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto c = testsupport::random_curve_with_points(rng);
        const WCurve& E = c.E;
        REQUIRE(on_curve(E, c.P));
        REQUIRE(on_curve(E, c.Q));
        REQUIRE(on_curve(E, c.R));
        CHECK(w_add(E, c.P, c.Q) == w_add(E, c.Q, c.P));
        CHECK(w_add(E, w_add(E, c.P, c.Q), c.R) == w_add(E, c.P, w_add(E, c.Q, c.R)));
        CHECK(w_add(E, c.P, WPoint::identity()) == c.P);
        CHECK(w_add(E, c.P, w_neg(c.P)).inf);
        CHECK(on_curve(E, w_add(E, c.P, c.Q)));
    }
}

TEST_CASE("isomorphisms") {
    // Transport y^2 = x^3 + 588x^2 + 36x by x' = u^2 x + r, y' = u^3 y with (u, r) = (2, 5).
    const Rational u(2), r(5);
    UniPoly moved = E10.cubic().compose(UniPoly{-r / (u * u), 1 / (u * u)}) * rational_pow(u, 6);
    REQUIRE(moved.lc() == 1);
    WCurve E{moved.coeff(2), moved.coeff(1), moved.coeff(0)};
    CHECK(j_invariant(E) == j_invariant(E10));
    CHECK(j_invariant(E10) == Q("1770025017602/75"));
    auto iso = find_isomorphism(E10, E);
    REQUIRE(iso.has_value());
    WPoint P = WPoint::affine(36, -900);
    CHECK(on_curve(E, iso->apply(P)));
    CHECK(iso->invert(iso->apply(P)) == P);
    CHECK(iso->apply(w_add(E10, P, P)) == w_add(E, iso->apply(P), iso->apply(P)));
    CHECK_FALSE(find_isomorphism(E10, E11).has_value());
}

TEST_CASE("quartic model of 2(U^2+1)(U^2+3) with base (1, 4)") {
    UniPoly g{6, 0, 8, 0, 2};
    QuarticModel model(g, QuarticPoint::affine(1, 4));
    CHECK(j_invariant(model.curve()) == j_invariant(E11));
    CHECK(find_isomorphism(E11, model.curve()).has_value());
    CHECK(model.to_cubic(model.base()).inf);
    // Round trip of curve points.
    WPoint gen = model.to_cubic(QuarticPoint::affine(-1, 4));
    WPoint Pn = WPoint::identity();
    int tested = 0;
    for (int n = 1; n <= 12 && tested < 10; ++n) {
        Pn = w_add(model.curve(), Pn, gen);
        try {
            QuarticPoint q = model.to_quartic(Pn);
            CHECK(on_quartic(g, q));
            CHECK(model.to_cubic(q) == Pn);
            ++tested;
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Domain);
        }
    }
    CHECK(tested == 10);
}

TEST_CASE("quartic models with base at infinity and at a root") {
    UniPoly g{-9, 0, 4, 0, 4};
    QuarticModel inf(g, QuarticPoint::inf_plus());
    QuarticPoint P = QuarticPoint::affine(Q("3/2"), Q("9/2"));
    WPoint x = inf.to_cubic(P);
    CHECK(on_curve(inf.curve(), x));
    CHECK(inf.to_quartic(x) == P);
    // A quartic with a rational root: g = (U - 1)(U^3 + U + 3).
    UniPoly h = UniPoly{-1, 1} * UniPoly{3, 1, 0, 1};
    QuarticModel root(h, QuarticPoint::affine(1, 0));
    CHECK(root.to_cubic(QuarticPoint::affine(1, 0)).inf);
    CHECK(j_invariant(root.curve()) == j_invariant(QuarticModel(h, QuarticPoint::inf_plus()).curve()) );
}

TEST_CASE("the Y^2 = m^2X^4 + c(dX+e)^2 cubic model") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Rational m = testsupport::rnd(rng), c = testsupport::rnd(rng), d = testsupport::rnd(rng),
                 e = testsupport::rnd(rng);
        Sec2CubicModel M = quartic_to_cubic_sec2(m, c, d, e);
        // A point with Y = m X^2 exists iff dX + e = 0.
        Rational X0 = -e / d;
        WPoint P = M.forward(X0, m * X0 * X0);
        CHECK(P.x == 0);
        CHECK(on_curve(M.curve, P));
        // Random curve points: pick X and test whether Y exists.
        for (long xn = -30; xn <= 30; ++xn) {
            Rational X(xn, 3);
            X.canonicalize();
            Rational rhs = m * m * X * X * X * X + c * (d * X + e) * (d * X + e);
            if (auto Y = rational_is_square(rhs)) {
                WPoint R = M.forward(X, *Y);
                CHECK(on_curve(M.curve, R));
                auto back = M.inverse(R);
                CHECK(back.first == X);
                CHECK(back.second == *Y);
            }
        }
    }
}

TEST_CASE("quartic recurrences: worked values") {
    const Rational a2(0), a0(3);
    ChudPoint P1{1, 2, 1};
    ChudPoint P2 = chud_double(a2, a0, P1);
    CHECK(P2 == ChudPoint{-2, 28, 4});
    ChudPoint n2 = chud_normalize(P2);
    CHECK(n2.U == Q("-1/2"));
    CHECK(n2.V == Q("7/4"));
    CHECK(Q("7/4") * Q("7/4") == rational_pow(Q("-1/2"), 4) + 3);
    ChudPoint P3 = chud_add_odd(a2, a0, P1, P2, P1);
    CHECK(P3 == ChudPoint{-44, 1952, 12});
    CHECK(chud_on_curve(a2, a0, P3));
    // [2i+1] with i = 0: the identity (1, 1, 0) and P1 give P1 back.
    ChudPoint again = chud_add_odd(a2, a0, ChudPoint{1, 1, 0}, P1, P1);
    CHECK(chud_equivalent(again, P1));
    // Doubling a 2-torsion point lands at infinity: Y^2 = X^4 - 5X^2 + 4 has (1, 0).
    CHECK(chud_double(Rational(-5), Rational(4), ChudPoint{1, 0, 1}).is_infinity());
}

TEST_CASE("quartic recurrences agree with the Weierstrass model (50 curves, indices <= 8)") {
    std::mt19937_64 rng(99);
    int curves = 0;
    while (curves < 50) {
        Rational X1 = testsupport::rnd(rng), Y1 = testsupport::rnd(rng), a2 = testsupport::rnd(rng, 12, 9, false);
        Rational a0 = Y1 * Y1 - rational_pow(X1, 4) - a2 * X1 * X1;
        if (a0 == 0 || a2 * a2 - 4 * a0 == 0) continue;
        ChudPoint P1{X1, Y1, 1};
        WCurve E = monic_quartic_curve(a2, a0);
        WPoint W1 = chud_to_weierstrass(a2, a0, P1);
        REQUIRE(on_curve(E, W1));
        if (!certify_infinite_order(E, W1)) continue;
        ++curves;
        for (long n = 1; n <= 8; ++n) {
            ChudPoint Pn = chud_multiple(a2, a0, P1, n);
            CHECK(chud_on_curve(a2, a0, Pn));
            CHECK(chud_equivalent(Pn, weierstrass_to_chud(a2, a0, w_mul(E, n, W1))));
        }
    }
}
