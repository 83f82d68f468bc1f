#include "qfrep/pointgen.hpp"

#include <algorithm>
#include <numeric>

#include "qfrep/error.hpp"

namespace qfrep {

namespace {

Rational projection_of(const Construction& con, const SurfacePoint& P, ProjectionKey key) {
    return key == ProjectionKey::Coordinate ? P.coord : form_value(con, P);
}

}  // namespace

PointStream generate(const Construction& con, const QuarticModel& model, const WPoint& gen, int count,
                     ProjectionKey key) {
    if (count < 1) invalid_argument("generate: count must be >= 1");
    if (model.quartic() != con.aux) invalid_argument("generate: model is not built on the construction's curve");
    const WCurve& E = model.curve();
    if (!on_curve(E, gen)) invalid_argument("generate: generator is not on the Weierstrass model");
    if (!certify_infinite_order(E, gen)) invalid_argument("generate: generator is a torsion point");

    PointStream out;
    out.family = con.family;
    out.curve = E;
    out.generator = gen;
    auto offer = [&](const SurfacePoint& P, long n, bool from_base, const QuarticPoint& Q) {
        if (!on_surface(con, P.p, P.q, P.coord))
            throw Error(ErrorKind::Verification, "generated point fails the surface equation");
        Rational v = projection_of(con, P, key);
        if (std::find(out.distinct_projections.begin(), out.distinct_projections.end(), v) !=
            out.distinct_projections.end())
            return;
        out.distinct_projections.push_back(v);
        out.emitted.push_back(StreamPoint{P, n, from_base, Q});
    };
    if (con.base_point) offer(*con.base_point, 0, true, model.base());

    const long budget = 12L * count;
    WPoint Pn = WPoint::identity();
    for (long step = 0; step <= budget && static_cast<int>(out.distinct_projections.size()) < count; ++step) {
        // step 0 -> n = 0; then 1, -1, 2, -2, ...
        long n = step == 0 ? 0 : ((step + 1) / 2) * (step % 2 == 1 ? 1 : -1);
        if (n > 0) Pn = w_add(E, Pn, gen);
        WPoint P = n >= 0 ? Pn : w_neg(Pn);
        try {
            QuarticPoint Q = model.to_quartic(P);
            if (!Q.is_affine()) domain_error("point at infinity of the auxiliary quartic");
            for (const auto& S : psi(con, Q.U, Q.w)) offer(S, n, false, Q);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Domain) throw;
            out.skipped_multiples.push_back(n);
            out.skip_reasons.push_back(e.what());
        }
    }
    if (static_cast<int>(out.distinct_projections.size()) < count)
        throw Error(ErrorKind::Verification, "generate: only " + std::to_string(out.distinct_projections.size()) +
                                                 " distinct projections within " + std::to_string(budget) +
                                                 " multiples");
    return out;
}

std::optional<std::pair<Rational, Rational>> represent_bounded(const Rational& value, const QuadForm& form,
                                                               long height) {
    if (height < 1) invalid_argument("represent_bounded: height must be >= 1");
    if (form.b == 0) invalid_argument("represent_bounded: form needs b != 0");
    auto bounded = [&](const Rational& r) {
        return abs(r.get_num()) <= height && r.get_den() <= height;
    };
    for (long d = 1; d <= height; ++d) {
        for (long a = 0; a <= height; ++a) {
            if (std::gcd(a, d) != 1) continue;
            for (int sgn : {1, -1}) {
                if (a == 0 && sgn == -1) continue;
                Rational p = make_rational(sgn * a, d);
                Rational q2 = (value - form.c - form.a * p * p) / form.b;
                if (q2 < 0) continue;
                auto q = rational_is_square(q2);
                if (q && bounded(*q)) return std::make_pair(p, abs(*q));
            }
        }
    }
    return std::nullopt;
}

CzReport cz_demo(int n, long probe_height) {
    if (n < 1 || n > 12) invalid_argument("cz_demo: n must be in 1..12");
    const Rational a2(12), a0(11);
    const Rational X1 = make_rational(1, 2), Y1 = make_rational(15, 4);
    CzReport rep;
    rep.probe_height = probe_height;
    UniPoly quartic{a0, Rational(0), a2, Rational(0), Rational(1)};
    rep.generator_on_curve = Y1 * Y1 == quartic.eval(X1);
    if (!rep.generator_on_curve) throw Error(ErrorKind::Verification, "cz: generator not on curve");
    WCurve E = monic_quartic_curve(a2, a0);
    // x = 2(Y + X^2), y = 2X(x + a2)
    Rational x1 = 2 * (Y1 + X1 * X1);
    WPoint G = WPoint::affine(x1, 2 * X1 * (x1 + a2));
    rep.generator_infinite_order = certify_infinite_order(E, G);
    QuadForm form{Rational(1), Rational(-5), Rational(0)};
    WPoint P = WPoint::identity();
    for (long k = 1; k <= n; ++k) {
        P = w_add(E, P, G);
        if (P.inf || P.x + a2 == 0) throw Error(ErrorKind::Verification, "cz: multiple at infinity");
        Rational X = P.y / (2 * (P.x + a2));
        Rational Y = P.x / 2 - X * X;
        if (Y * Y != quartic.eval(X)) throw Error(ErrorKind::Verification, "cz: multiple off the curve");
        CzRow row{k, X, Y, bit_height(X), bit_height(Y), std::nullopt};
        row.representation = represent_bounded(Y / 15, form, probe_height);
        rep.rows.push_back(row);
    }
    // (P^2 - 5Q^2)^2 = (X^4 + 12X^2 + 11)/225: m = 1/15, b = -5, a2 = 12/225, a1 = 0, a0 = 11/225.
    rep.sextic = sec2_sextic(a0 / 225, Rational(0), a2 / 225, Rational(-5), make_rational(1, 15));
    rep.sextic_discriminant = poly_discriminant(rep.sextic);
    return rep;
}

IntegerPointSearch search_integer_points_u(long range) {
    if (range < 1) invalid_argument("search_integer_points_u: range must be >= 1");
    IntegerPointSearch out;
    for (long ui = -range; ui <= range; ++ui) {
        Integer u(ui);
        Integer val = u * (u + 2) * (u + 6);
        if (val < 0) continue;
        Integer v = sqrt(val);
        if (v * v != val) continue;
        out.points.emplace_back(u, v);
        if (u != 0) {
            Integer cls = squarefree_part(Integer(2 * u));
            out.square_classes.emplace_back(u, cls);
            if (u > 0 && std::find(out.positive_classes.begin(), out.positive_classes.end(), cls) ==
                             out.positive_classes.end())
                out.positive_classes.push_back(cls);
        }
    }
    std::sort(out.positive_classes.begin(), out.positive_classes.end());
    return out;
}

}  // namespace qfrep
