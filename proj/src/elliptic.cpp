#include "qfrep/elliptic.hpp"

#include <algorithm>

#include "qfrep/error.hpp"

namespace qfrep {

// ---------------------------------------------------------------- Weierstrass basics

bool on_curve(const WCurve& E, const WPoint& P) {
    if (P.inf) return true;
    return P.y * P.y == E.cubic().eval(P.x);
}

Rational w_discriminant(const WCurve& E) {
    Rational b2 = 4 * E.a2, b4 = 2 * E.a4, b6 = 4 * E.a6;
    Rational b8 = 4 * E.a2 * E.a6 - E.a4 * E.a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

void require_nonsingular(const WCurve& E) {
    if (w_discriminant(E) == 0) domain_error("singular Weierstrass curve (discriminant 0)");
}

Rational w_c4(const WCurve& E) {
    Rational b2 = 4 * E.a2, b4 = 2 * E.a4;
    return b2 * b2 - 24 * b4;
}

Rational w_c6(const WCurve& E) {
    Rational b2 = 4 * E.a2, b4 = 2 * E.a4, b6 = 4 * E.a6;
    return -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
}

Rational j_invariant(const WCurve& E) {
    Rational d = w_discriminant(E);
    if (d == 0) domain_error("j_invariant: singular curve");
    Rational c4 = w_c4(E);
    return c4 * c4 * c4 / d;
}

WPoint w_neg(const WPoint& P) {
    if (P.inf) return P;
    return WPoint::affine(P.x, -P.y);
}

namespace {

WPoint add_unchecked(const WCurve& E, const WPoint& P, const WPoint& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    Rational lambda;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return WPoint::identity();
        lambda = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x3 = lambda * lambda - E.a2 - P.x - Q.x;
    Rational y3 = lambda * (P.x - x3) - P.y;
    return WPoint::affine(x3, y3);
}

WPoint mul_unchecked(const WCurve& E, long n, const WPoint& P) {
    if (n < 0) return w_neg(mul_unchecked(E, -n, P));
    WPoint result = WPoint::identity(), base = P;
    unsigned long k = static_cast<unsigned long>(n);
    while (k > 0) {
        if (k & 1UL) result = add_unchecked(E, result, base);
        k >>= 1U;
        if (k > 0) base = add_unchecked(E, base, base);
    }
    return result;
}

void require_on_curve(const WCurve& E, const WPoint& P, const char* who) {
    if (!on_curve(E, P)) domain_error(std::string(who) + ": point not on curve");
}

}  // namespace

WPoint w_add(const WCurve& E, const WPoint& P, const WPoint& Q) {
    require_on_curve(E, P, "w_add");
    require_on_curve(E, Q, "w_add");
    return add_unchecked(E, P, Q);
}

WPoint w_mul(const WCurve& E, long n, const WPoint& P) {
    require_on_curve(E, P, "w_mul");
    return mul_unchecked(E, n, P);
}

int point_order(const WCurve& E, const WPoint& P) {
    require_on_curve(E, P, "point_order");
    if (P.inf) return 1;
    WPoint Q = P;
    for (int n = 2; n <= 12; ++n) {
        Q = add_unchecked(E, Q, P);
        if (Q.inf) return n;
    }
    return 0;
}

bool certify_infinite_order(const WCurve& E, const WPoint& P) {
    if (P.inf) domain_error("certify_infinite_order: identity input");
    return point_order(E, P) == 0;
}

// ---------------------------------------------------------------- torsion

TorsionGroup torsion_subgroup(const WCurve& E) {
    require_nonsingular(E);
    // Integral model: x = X/u^2, y = Y/u^3 with u clearing all denominators.
    Integer u = 1;
    for (const Rational* c : {&E.a2, &E.a4, &E.a6})
        mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), c->get_den().get_mpz_t());
    Rational u2 = Rational(u * u), u3 = Rational(u * u * u);
    Rational A2 = E.a2 * u2, A4 = E.a4 * u2 * u2, A6 = E.a6 * u2 * u2 * u2;
    WCurve Ei{A2, A4, A6};
    UniPoly cubic = Ei.cubic();
    Integer disc = poly_discriminant(cubic).get_num();  // integral since the model is

    std::vector<Integer> ys{Integer(0)};
    std::vector<Integer> divisors{Integer(1)};
    for (const auto& [p, e] : factor_integer(disc)) {
        std::vector<Integer> next;
        for (const auto& d : divisors) {
            Integer pk = 1;
            for (unsigned k = 0; 2 * k <= e; ++k) {
                next.push_back(d * pk);
                pk *= p;
            }
        }
        divisors = std::move(next);
    }
    ys.insert(ys.end(), divisors.begin(), divisors.end());

    TorsionGroup T;
    T.points.push_back(WPoint::identity());
    T.orders.push_back(1);
    for (const auto& y : ys) {
        UniPoly h = cubic - UniPoly::constant(Rational(y * y));
        for (const auto& x : integer_roots(h)) {
            for (int sign : {1, -1}) {
                if (y == 0 && sign == -1) continue;
                WPoint Pi = WPoint::affine(Rational(x), Rational(sign * y));
                int ord = point_order(Ei, Pi);
                if (ord == 0) continue;
                T.points.push_back(WPoint::affine(Pi.x / u2, Pi.y / u3));
                T.orders.push_back(ord);
            }
        }
    }
    T.order = static_cast<int>(T.points.size());
    int max_order = *std::max_element(T.orders.begin(), T.orders.end());
    if (max_order == T.order)
        T.structure = "Z/" + std::to_string(T.order);
    else
        T.structure = "Z/2 x Z/" + std::to_string(T.order / 2);
    return T;
}

// ---------------------------------------------------------------- isomorphisms

WPoint WIsomorphism::apply(const WPoint& P) const {
    if (P.inf) return P;
    return WPoint::affine(u * u * P.x + r, u * u * u * P.y);
}

WPoint WIsomorphism::invert(const WPoint& P) const {
    if (P.inf) return P;
    return WPoint::affine((P.x - r) / (u * u), P.y / (u * u * u));
}

namespace {

std::optional<Rational> rational_cube_root(const Rational& q) {
    auto root = [](const Integer& z) -> std::optional<Integer> {
        Integer a = abs(z), r;
        if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3) == 0) return std::nullopt;
        return z < 0 ? Integer(-r) : r;
    };
    auto n = root(q.get_num());
    auto d = root(q.get_den());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace

std::optional<WIsomorphism> find_isomorphism(const WCurve& from, const WCurve& to) {
    require_nonsingular(from);
    require_nonsingular(to);
    if (j_invariant(from) != j_invariant(to)) return std::nullopt;
    Rational c4f = w_c4(from), c4t = w_c4(to), c6f = w_c6(from), c6t = w_c6(to);
    // c4(to) = u^4 c4(from), c6(to) = u^6 c6(from).
    std::optional<Rational> u2;
    if (c4f != 0 && c6f != 0) {
        u2 = (c6t / c6f) / (c4t / c4f);
    } else if (c6f == 0) {
        u2 = rational_is_square(c4t / c4f);
    } else {
        u2 = rational_cube_root(c6t / c6f);
    }
    if (!u2 || *u2 <= 0) return std::nullopt;
    auto u = rational_is_square(*u2);
    if (!u) return std::nullopt;
    Rational r = (*u2 * from.a2 - to.a2) / 3;
    WIsomorphism iso{*u, r};
    // Exact check of the coefficient transformation.
    Rational U2 = *u2, U4 = U2 * U2, U6 = U4 * U2;
    bool ok = (3 * r + to.a2) == U2 * from.a2 &&
              (3 * r * r + 2 * to.a2 * r + to.a4) == U4 * from.a4 &&
              (r * r * r + to.a2 * r * r + to.a4 * r + to.a6) == U6 * from.a6;
    if (!ok) return std::nullopt;
    return iso;
}

// ---------------------------------------------------------------- quartic models

bool on_quartic(const UniPoly& g, const QuarticPoint& P) {
    if (P.is_affine()) return P.w * P.w == g.eval(P.U);
    return g.degree() == 4 && rational_is_square(g.lc()).has_value();
}

QuarticModel::QuarticModel(const UniPoly& g, const QuarticPoint& base) : g_(g), base_(base) {
    if (g.degree() != 4) domain_error("quartic model: degree must be 4");
    if (poly_discriminant(g) == 0) domain_error("quartic model: singular quartic");
    if (!on_quartic(g, base)) domain_error("quartic model: base point not on the curve");

    UniPoly h;  // quartic in X whose constant term is q^2, base point (0, q)
    if (base.is_affine() && base.w != 0) {
        mode_ = Mode::AffineBase;
        U0_ = base.U;
        h = g.shift(U0_);
        k_.q = base.w;
    } else if (base.is_affine()) {
        mode_ = Mode::RootBase;
        U0_ = base.U;
        UniPoly t = g.shift(U0_);
        e1_ = t.coeff(1);
        // (e1 w X^-2)^2 = cubic in x = e1/X
        E_ = WCurve{t.coeff(2), e1_ * t.coeff(3), e1_ * e1_ * t.coeff(4)};
        require_nonsingular(E_);
        return;
    } else {
        mode_ = Mode::InfinityBase;
        h = g.reversed(4);
        Rational s = *rational_is_square(g.lc());
        k_.q = (base.kind == QuarticPoint::Kind::InfPlus) ? s : Rational(-s);
    }
    k_.a = h.coeff(4);
    k_.b = h.coeff(3);
    k_.c = h.coeff(2);
    k_.d = h.coeff(1);
    const Rational& q = k_.q;
    k_.a1 = k_.d / q;
    Rational a2 = k_.c - k_.d * k_.d / (4 * q * q);
    k_.a3 = 2 * q * k_.b;
    Rational a4 = -4 * q * q * k_.a;
    Rational a6 = a2 * a4;
    // Complete the square: y1 = y + (a1 x + a3)/2.
    E_ = WCurve{a2 + k_.a1 * k_.a1 / 4, a4 + k_.a1 * k_.a3 / 2, a6 + k_.a3 * k_.a3 / 4};
    require_nonsingular(E_);
}

WPoint QuarticModel::connell_forward(const Rational& X, const Rational& Y) const {
    const Rational& q = k_.q;
    if (X == 0) {
        if (Y == q) return WPoint::identity();
        // (0, -q) lies on the vertical line through the base point's tangent partner.
        Rational a2c = k_.c - k_.d * k_.d / (4 * q * q);
        return WPoint::affine(-a2c, (k_.a1 * a2c - k_.a3) / 2);
    }
    Rational x = (2 * q * (Y + q) + k_.d * X) / (X * X);
    Rational y = (4 * q * q * (Y + q) + 2 * q * (k_.d * X + k_.c * X * X) -
                  k_.d * k_.d * X * X / (2 * q)) /
                 (X * X * X);
    return WPoint::affine(x, y + (k_.a1 * x + k_.a3) / 2);
}

std::pair<Rational, Rational> QuarticModel::connell_inverse(const WPoint& P) const {
    const Rational& q = k_.q;
    Rational y = P.y - (k_.a1 * P.x + k_.a3) / 2;
    if (y == 0) {
        Rational a2c = k_.c - k_.d * k_.d / (4 * q * q);
        if (P.x == -a2c) return {Rational(0), -q};
        domain_error("quartic model: point maps to infinity of the quartic");
    }
    Rational X = (2 * q * (P.x + k_.c) - k_.d * k_.d / (2 * q)) / y;
    Rational Y = -q + X * (P.x * X - k_.d) / (2 * q);
    return {X, Y};
}

WPoint QuarticModel::to_cubic(const QuarticPoint& P) const {
    if (!on_quartic(g_, P)) domain_error("quartic model: point not on the quartic");
    if (P == base_) return WPoint::identity();
    if (!P.is_affine()) {
        if (mode_ == Mode::InfinityBase) {
            // (X1, W1) = (0, -q): the other branch at infinity
            return connell_forward(Rational(0), -k_.q);
        }
        domain_error("quartic model: points at infinity are exceptional for this base");
    }
    switch (mode_) {
        case Mode::AffineBase:
            return connell_forward(P.U - U0_, P.w);
        case Mode::RootBase: {
            Rational X = P.U - U0_;
            if (X == 0) return WPoint::identity();
            return WPoint::affine(e1_ / X, e1_ * P.w / (X * X));
        }
        case Mode::InfinityBase: {
            if (P.U == 0) domain_error("quartic model: U = 0 is exceptional for a base at infinity");
            Rational X1 = 1 / P.U;
            return connell_forward(X1, P.w * X1 * X1);
        }
    }
    throw Error(ErrorKind::Internal, "unreachable");
}

QuarticPoint QuarticModel::to_quartic(const WPoint& P) const {
    if (!on_curve(E_, P)) domain_error("quartic model: point not on the Weierstrass model");
    if (P.inf) return base_;
    QuarticPoint out;
    switch (mode_) {
        case Mode::AffineBase: {
            auto [X, Y] = connell_inverse(P);
            out = QuarticPoint::affine(U0_ + X, Y);
            break;
        }
        case Mode::RootBase: {
            if (P.x == 0) domain_error("quartic model: point maps to infinity of the quartic");
            Rational X = e1_ / P.x;
            out = QuarticPoint::affine(U0_ + X, P.y * X * X / e1_);
            break;
        }
        case Mode::InfinityBase: {
            auto [X1, W1] = connell_inverse(P);
            if (X1 == 0) {
                out = (W1 == k_.q) == (base_.kind == QuarticPoint::Kind::InfPlus) ? QuarticPoint::inf_plus()
                                                                                  : QuarticPoint::inf_minus();
            } else {
                out = QuarticPoint::affine(1 / X1, W1 / (X1 * X1));
            }
            break;
        }
    }
    if (!on_quartic(g_, out)) throw Error(ErrorKind::Verification, "quartic model: inverse map left the curve");
    return out;
}

WCurve monic_quartic_curve(const Rational& a2, const Rational& a0) {
    return WCurve{a2, -4 * a0, -4 * a2 * a0};
}

WPoint Sec2CubicModel::forward(const Rational& X, const Rational& Y) const {
    Rational x = -2 * m * (Y - m * X * X);
    Rational y = -2 * m * (2 * m * m * X * X * X - 2 * m * X * Y + c * d * d * X + c * d * e);
    return WPoint::affine(x, y);
}

std::pair<Rational, Rational> Sec2CubicModel::inverse(const WPoint& P) const {
    if (P.inf) domain_error("sec2 cubic model: identity has no affine preimage");
    Rational den = P.x + c * d * d;
    if (den == 0) domain_error("sec2 cubic model: exceptional point x = -cd^2");
    Rational X = (-P.y / (2 * m) - c * d * e) / den;
    Rational Y = m * X * X - P.x / (2 * m);
    return {X, Y};
}

Sec2CubicModel quartic_to_cubic_sec2(const Rational& m, const Rational& c, const Rational& d,
                                     const Rational& e) {
    if (m == 0) domain_error("quartic_to_cubic_sec2: m = 0");
    if (c * e == 0) domain_error("quartic_to_cubic_sec2: ce = 0");
    Sec2CubicModel M{m, c, d, e, WCurve{c * d * d, -4 * c * e * e * m * m, Rational(0)}};
    require_nonsingular(M.curve);
    return M;
}

// ---------------------------------------------------------------- recurrences

bool chud_on_curve(const Rational& a2, const Rational& a0, const ChudPoint& P) {
    const Rational U2 = P.U * P.U, W2 = P.W * P.W;
    return P.V * P.V == U2 * U2 + a2 * U2 * W2 + a0 * W2 * W2;
}

bool chud_equivalent(const ChudPoint& P, const ChudPoint& Q) {
    return chud_normalize(P) == chud_normalize(Q);
}

ChudPoint chud_normalize(const ChudPoint& P) {
    if (P.W != 0) return ChudPoint{P.U / P.W, P.V / (P.W * P.W), Rational(1)};
    if (P.U == 0) domain_error("chud_normalize: (0, V, 0) is not a point");
    return ChudPoint{Rational(1), P.V / (P.U * P.U), Rational(0)};
}

ChudPoint chud_double(const Rational& a2, const Rational& a0, const ChudPoint& P) {
    const Rational U2 = P.U * P.U, W2 = P.W * P.W;
    const Rational disc = a2 * a2 - 4 * a0;
    return ChudPoint{U2 * U2 - a0 * W2 * W2, P.V * P.V * P.V * P.V - disc * U2 * U2 * W2 * W2,
                     2 * P.U * P.V * P.W};
}

ChudPoint chud_add_odd(const Rational& a2, const Rational& a0, const ChudPoint& Pi, const ChudPoint& Pi1,
                       const ChudPoint& P1) {
    if (P1.U == 0 || P1.V == 0 || P1.W == 0)
        domain_error("chud_add_odd: U1 V1 W1 = 0; use the Weierstrass path");
    const Rational disc = a2 * a2 - 4 * a0;
    const Rational Ui2 = Pi.U * Pi.U, Uj2 = Pi1.U * Pi1.U, Wi2 = Pi.W * Pi.W, Wj2 = Pi1.W * Pi1.W;
    Rational U = (Ui2 * Uj2 - a0 * Wi2 * Wj2) / P1.U;
    Rational W = (Ui2 * Wj2 - Uj2 * Wi2) / P1.W;
    Rational V = (Pi.V * Pi.V * Pi1.V * Pi1.V - disc * Ui2 * Uj2 * Wi2 * Wj2) / P1.V;
    return ChudPoint{U, V, W};
}

WPoint chud_to_weierstrass(const Rational& a2, const Rational& a0, const ChudPoint& P) {
    (void)a0;
    if (P.W == 0) {
        ChudPoint n = chud_normalize(P);
        if (n.V == 1) return WPoint::identity();
        return WPoint::affine(-a2, Rational(0));
    }
    Rational X = P.U / P.W, Y = P.V / (P.W * P.W);
    Rational x = 2 * (Y + X * X);
    return WPoint::affine(x, 2 * X * (x + a2));
}

ChudPoint weierstrass_to_chud(const Rational& a2, const Rational& a0, const WPoint& P) {
    (void)a0;
    if (P.inf) return ChudPoint{Rational(1), Rational(1), Rational(0)};
    if (P.x == -a2) return ChudPoint{Rational(1), Rational(-1), Rational(0)};
    Rational X = P.y / (2 * (P.x + a2));
    return ChudPoint{X, P.x / 2 - X * X, Rational(1)};
}

ChudPoint chud_multiple(const Rational& a2, const Rational& a0, const ChudPoint& P1, long n) {
    if (n < 1) invalid_argument("chud_multiple: n must be >= 1");
    if (!chud_on_curve(a2, a0, P1)) domain_error("chud_multiple: point not on the curve");
    const bool odd_ok = P1.U != 0 && P1.V != 0 && P1.W != 0;
    if (!odd_ok && n > 2 && n % 2 == 1) {
        WCurve E = monic_quartic_curve(a2, a0);
        return weierstrass_to_chud(a2, a0, w_mul(E, n, chud_to_weierstrass(a2, a0, P1)));
    }
    if (n == 1) return P1;
    // [n] from [h] and [h+1] where h = floor(n/2).
    long h = n / 2;
    if (n % 2 == 0) return chud_double(a2, a0, chud_multiple(a2, a0, P1, h));
    ChudPoint Ph = chud_multiple(a2, a0, P1, h);
    ChudPoint Ph1 = chud_multiple(a2, a0, P1, h + 1);
    return chud_add_odd(a2, a0, Ph, Ph1, P1);
}

}  // namespace qfrep
