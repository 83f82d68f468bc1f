#include <doctest.h>

#include <functional>

#include "qfrep/elliptic.hpp"
#include "qfrep/error.hpp"
#include "qfrep/fixtures.hpp"
#include "support.hpp"

using namespace qfrep;
using testsupport::Q;

namespace {

// Affine points [n]G (n = 1..count) of w^2 = g(U), pulled back from the Weierstrass model.
std::vector<std::pair<Rational, Rational>> curve_points(const UniPoly& g, const QuarticPoint& base,
                                                        const QuarticPoint& gen, int count) {
    QuarticModel model(g, base);
    WPoint G = model.to_cubic(gen), P = G;
    std::vector<std::pair<Rational, Rational>> out;
    for (int n = 1; static_cast<int>(out.size()) < count && n < 4 * count; ++n, P = w_add(model.curve(), P, G)) {
        try {
            QuarticPoint Q = model.to_quartic(P);
            if (Q.is_affine()) out.emplace_back(Q.U, Q.w);
        } catch (const Error&) {
        }
    }
    return out;
}

// Applies a reference closed-form map to curve points and checks the reference surface equation.
int check_reference(const UniPoly& g, const QuarticPoint& base, const QuarticPoint& gen,
                    const std::function<SurfacePoint(const Rational&, const Rational&)>& map,
                    const std::function<bool(const SurfacePoint&)>& on_reference_surface) {
    int good = 0;
    for (const auto& [U, w] : curve_points(g, base, gen, 12)) {
        REQUIRE(g.eval(U) == w * w);
        SurfacePoint P;
        try {
            P = map(U, w);
        } catch (const Error&) {
            continue;  // pole of the closed form
        }
        CHECK(on_reference_surface(P));
        ++good;
    }
    return good;
}

}  // namespace

TEST_CASE("fixture registry") {
    auto ids = fixture_ids();
    std::vector<std::string> expect = {"ex2.4", "ex2.5", "ex3.2", "ex3.3", "ex3.4", "ex3.5",
                                       "ex4.3", "ex5.2", "rem3.1", "rem5.3", "cz"};
    CHECK(ids == expect);
    CHECK_THROWS_AS(reproduce("ex9.9"), Error);
    try {
        reproduce("nope");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("every fixture reproduces") {
    for (const auto& id : fixture_ids()) {
        CAPTURE(id);
        FixtureResult r = reproduce(id);
        CHECK(r.id == id);
        CHECK_FALSE(r.title.empty());
        CHECK_FALSE(r.checks.empty());
        for (const auto& c : r.checks) {
            CAPTURE(c.name);
            CHECK(c.ok);
        }
        CHECK(r.ok());
        CHECK(r.data.contains("checks"));
        CHECK(r.data["ok"] == true);
    }
}

TEST_CASE("fixture output is deterministic") {
    for (const char* id : {"ex3.4", "ex5.2", "rem5.3"}) {
        CAPTURE(id);
        CHECK(reproduce(id).data.dump() == reproduce(id).data.dump());
        CHECK(reproduce(id).lines == reproduce(id).lines);
    }
}

TEST_CASE("fixture options") {
    FixtureOptions opt;
    opt.count = 22;
    FixtureResult r = reproduce("ex3.4", opt);
    CHECK(r.ok());
    CHECK(r.data["stream"]["points"].size() >= 22);

    FixtureOptions small;
    small.range = 100;
    FixtureResult s = reproduce("rem5.3", small);
    CHECK(s.ok());
    bool discrepancy = false;
    for (const auto& l : s.lines) discrepancy = discrepancy || l.find("discrepancy") != std::string::npos;
    CHECK(discrepancy);
}

TEST_CASE("unsolvability fixtures report their verdicts") {
    FixtureResult r31 = reproduce("rem3.1");
    CHECK(r31.ok());
    FixtureResult r35 = reproduce("ex3.5");
    CHECK(r35.ok());
}

TEST_CASE("closed-form maps land on their surfaces") {
    // (p^2+3q^2)^2 = X^4 - 15/2 X^2 + 15 from V^2 = 2(5 + 30u^2 - 3u^4).
    int n32 = check_reference(
        UniPoly{10, 0, 60, 0, -6}, QuarticPoint::affine(-1, 8), QuarticPoint::affine(-3, 8), reference_map_ex3_2,
        [](const SurfacePoint& P) {
            Rational f = P.p * P.p + 3 * P.q * P.q, X2 = P.coord * P.coord;
            return f * f == X2 * X2 - Q("15/2") * X2 + 15;
        });
    CHECK(n32 >= 8);
    // (p^2+2q^2)^2 = X^4 - 2X^2 + 10 from U^2 = -9 + 4v^2 + 4v^4.
    int n33 = check_reference(
        UniPoly{-9, 0, 4, 0, 4}, QuarticPoint::inf_plus(), QuarticPoint::affine(Q("3/2"), Q("9/2")),
        reference_map_ex3_3, [](const SurfacePoint& P) {
            Rational f = P.p * P.p + 2 * P.q * P.q, X2 = P.coord * P.coord;
            return f * f == X2 * X2 - 2 * X2 + 10;
        });
    CHECK(n33 >= 8);
    // (p^2+q^2+1)^2 = 4X^4 + 16X^3 + 288X^2 + 24X + 9 from V^2 = 130 + 63U^2 - 3U^4.
    Rational d(152882);
    QuarticPoint g43 = QuarticPoint::affine(Rational(152129) / d, Rational(Integer("321697804123")) / (d * d));
    UniPoly c43{130, 0, 63, 0, -3};
    REQUIRE(on_quartic(c43, g43));
    int n43 = check_reference(c43, QuarticPoint::affine(Q("9/2"), Q("53/4")), g43, reference_map_ex4_3,
                              [](const SurfacePoint& P) {
                                  Rational f = P.p * P.p + P.q * P.q + 1, X = P.coord;
                                  return f * f == (((4 * X + 16) * X + 288) * X + 24) * X + 9;
                              });
    CHECK(n43 >= 6);
    // Y^2 = f(p^2 + bq^2), f = X^3 + 2X^2 - 128X + 480, from W^2 = 2b(bU^2+1)(bU^2+3).
    for (long b : {1L, 3L, 6L}) {
        CAPTURE(b);
        UniPoly g = UniPoly{1, 0, Rational(b)} * UniPoly{3, 0, Rational(b)} * Rational(2 * b);
        auto pt = testsupport::naive_quartic_point(g, 20);
        REQUIRE(pt.has_value());
        QuarticPoint base = QuarticPoint::affine(pt->first, pt->second);
        QuarticPoint gen = QuarticPoint::affine(pt->first, -pt->second);
        int n = check_reference(
            g, base, gen, [b](const Rational& U, const Rational& W) { return reference_map_ex5_2(Rational(b), U, W); },
            [b](const SurfacePoint& P) {
                Rational X = P.p * P.p + b * P.q * P.q;
                return P.coord * P.coord == ((X + 2) * X - 128) * X + 480;
            });
        CHECK(n >= 6);
    }
}

TEST_CASE("the (w/2U, U, w/2U) map on Y^2 = X^4 + 9") {
    int n = check_reference(UniPoly{18, 0, 0, 0, -2}, QuarticPoint::affine(1, -4), QuarticPoint::affine(1, 4),
                            reference_map_ex2_4, [](const SurfacePoint& P) {
                                Rational f = P.p * P.p + P.q * P.q;
                                return f * f == rational_pow(P.coord, 4) + 9;
                            });
    CHECK(n >= 8);
    CHECK_THROWS_AS(reference_map_ex2_4(Rational(0), Rational(6)), Error);
}
