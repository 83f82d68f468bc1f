#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfrep/poly.hpp"
#include "qfrep/rational.hpp"

namespace qfrep {

// y^2 = x^3 + a2 x^2 + a4 x + a6
struct WCurve {
    Rational a2, a4, a6;
    UniPoly cubic() const { return UniPoly{a6, a4, a2, Rational(1)}; }
};

struct WPoint {
    bool inf = true;
    Rational x, y;
    static WPoint identity() { return WPoint{}; }
    static WPoint affine(const Rational& x, const Rational& y) { return WPoint{false, x, y}; }
    friend bool operator==(const WPoint& p, const WPoint& q) {
        if (p.inf || q.inf) return p.inf == q.inf;
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const WPoint& p, const WPoint& q) { return !(p == q); }
};

bool on_curve(const WCurve& E, const WPoint& P);
void require_nonsingular(const WCurve& E);
Rational w_discriminant(const WCurve& E);  // -16 * Disc(cubic) normalization (Delta)
Rational w_c4(const WCurve& E);
Rational w_c6(const WCurve& E);
Rational j_invariant(const WCurve& E);

WPoint w_neg(const WPoint& P);
// Group law; both inputs must lie on E (domain error otherwise).
WPoint w_add(const WCurve& E, const WPoint& P, const WPoint& Q);
WPoint w_mul(const WCurve& E, long n, const WPoint& P);

struct TorsionGroup {
    std::vector<WPoint> points;  // includes the identity first
    std::vector<int> orders;     // order of each point
    int order = 1;
    std::string structure;       // "Z/n" or "Z/2 x Z/2n"
};
// Lutz-Nagell on an integral model, complete list of rational torsion points.
TorsionGroup torsion_subgroup(const WCurve& E);
// True iff [n]P != O for all 2 <= n <= 12 (Mazur bound), i.e. P has infinite order.
bool certify_infinite_order(const WCurve& E, const WPoint& P);
// Order of a torsion point (1..12) or 0 when P has infinite order.
int point_order(const WCurve& E, const WPoint& P);

// x_to = u^2 x_from + r, y_to = u^3 y_from.
struct WIsomorphism {
    Rational u, r;
    WPoint apply(const WPoint& P) const;
    WPoint invert(const WPoint& P) const;
};
std::optional<WIsomorphism> find_isomorphism(const WCurve& from, const WCurve& to);

// ---------------------------------------------------------------- quartic models

// w^2 = g(U), deg g = 4.
struct QuarticPoint {
    enum class Kind { Affine, InfPlus, InfMinus };  // InfPlus: w/U^2 -> +sqrt(lc g)
    Kind kind = Kind::Affine;
    Rational U, w;
    static QuarticPoint affine(const Rational& U, const Rational& w) { return {Kind::Affine, U, w}; }
    static QuarticPoint inf_plus() { return {Kind::InfPlus, 0, 0}; }
    static QuarticPoint inf_minus() { return {Kind::InfMinus, 0, 0}; }
    bool is_affine() const { return kind == Kind::Affine; }
    friend bool operator==(const QuarticPoint& a, const QuarticPoint& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Kind::Affine || (a.U == b.U && a.w == b.w);
    }
};

bool on_quartic(const UniPoly& g, const QuarticPoint& P);

// Weierstrass model of w^2 = g(U) with P0 sent to the identity; the maps are mutually
// inverse away from finitely many exceptional points (which raise a domain error).
class QuarticModel {
public:
    QuarticModel(const UniPoly& g, const QuarticPoint& base);
    const WCurve& curve() const { return E_; }
    const UniPoly& quartic() const { return g_; }
    const QuarticPoint& base() const { return base_; }
    WPoint to_cubic(const QuarticPoint& P) const;
    QuarticPoint to_quartic(const WPoint& P) const;

private:
    enum class Mode { AffineBase, RootBase, InfinityBase };
    // Connell data for Y^2 = a X^4 + b X^3 + c X^2 + d X + q^2 with base (0, q).
    struct Connell {
        Rational a, b, c, d, q, a1, a3;
    };
    WPoint connell_forward(const Rational& X, const Rational& Y) const;
    std::pair<Rational, Rational> connell_inverse(const WPoint& P) const;

    UniPoly g_;
    QuarticPoint base_;
    Mode mode_;
    Rational U0_;
    Connell k_;
    Rational e1_;  // RootBase: g(U0 + X) = e1 X + e2 X^2 + ...
    WCurve E_;
};

// The monic-quartic model: Y^2 = X^4 + a2 X^2 + a0 <-> y^2 = x^3 + a2 x^2 - 4 a0 x - 4 a2 a0,
// x = 2(Y + X^2), y = 2X(x + a2); the identity corresponds to infinity+ .
WCurve monic_quartic_curve(const Rational& a2, const Rational& a0);

// Y^2 = m^2 X^4 + c(dX + e)^2  ->  y^2 = x(x^2 + c d^2 x - 4 c e^2 m^2),
// (x, y) = (-2m(Y - mX^2), -2m(2m^2X^3 - 2mXY + cd^2X + cde)).
struct Sec2CubicModel {
    Rational m, c, d, e;
    WCurve curve;
    WPoint forward(const Rational& X, const Rational& Y) const;
    std::pair<Rational, Rational> inverse(const WPoint& P) const;  // (X, Y)
};
Sec2CubicModel quartic_to_cubic_sec2(const Rational& m, const Rational& c, const Rational& d,
                                     const Rational& e);

// ---------------------------------------------------------------- quartic addition recurrences

// (X, Y) = (U/W, V/W^2) on Y^2 = X^4 + a2 X^2 + a0; W = 0 is a point at infinity
// (infinity+ when V/U^2 = 1, the group identity of the recurrences).
struct ChudPoint {
    Rational U, V, W;
    bool is_infinity() const { return W == 0; }
    friend bool operator==(const ChudPoint& a, const ChudPoint& b) {
        return a.U == b.U && a.V == b.V && a.W == b.W;
    }
};

bool chud_on_curve(const Rational& a2, const Rational& a0, const ChudPoint& P);
// Same projective point (U, V, W) ~ (t U, t^2 V, t W).
bool chud_equivalent(const ChudPoint& P, const ChudPoint& Q);
// Scales to W = 1 when affine; to (1, +-1, 0) at infinity.
ChudPoint chud_normalize(const ChudPoint& P);
ChudPoint chud_double(const Rational& a2, const Rational& a0, const ChudPoint& P);
// [2i+1]P1 from Pi = [i]P1, Pi1 = [i+1]P1; domain error when U1 V1 W1 = 0.
ChudPoint chud_add_odd(const Rational& a2, const Rational& a0, const ChudPoint& Pi,
                       const ChudPoint& Pi1, const ChudPoint& P1);
// [n]P1 (n >= 1) by the recurrences, rerouting through the Weierstrass model when the
// odd-index divisors vanish.
ChudPoint chud_multiple(const Rational& a2, const Rational& a0, const ChudPoint& P1, long n);

WPoint chud_to_weierstrass(const Rational& a2, const Rational& a0, const ChudPoint& P);
ChudPoint weierstrass_to_chud(const Rational& a2, const Rational& a0, const WPoint& P);

}  // namespace qfrep
