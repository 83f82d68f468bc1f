#include "qfrep/constructions.hpp"

#include <algorithm>

#include "qfrep/error.hpp"

namespace qfrep {

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }
UniPoly C(const Rational& c) { return UniPoly::constant(c); }
NestedPoly NC(const Rational& c) { return NestedPoly::constant(UniPoly::constant(c)); }

void require(bool cond, const std::string& msg) {
    if (!cond) domain_error(msg);
}

NestedPoly form_nested(const QuadForm& F, const NestedPoly& p, const NestedPoly& q) {
    NestedPoly v = p * p * C(F.a) + q * q * C(F.b);
    if (F.c != 0) v += NC(F.c);
    return v;
}

NestedPoly surface_residual(const Construction& con) {
    NestedPoly phi = form_nested(con.form, con.sub_p, con.sub_q);
    if (con.projection == Projection::X) return phi * phi - compose(con.f, con.sub_coord);
    return con.sub_coord * con.sub_coord - compose(con.f, phi);
}

// Integer bit size of a polynomial's coefficients (the reducer's cost function).
std::size_t coefficient_bits(const UniPoly& g) {
    std::size_t bits = 0;
    for (const auto& c : g.coeffs())
        if (c != 0) bits += bit_height(c);
    return bits;
}

// Primes tried by the reducer: trial division only, so that large coefficients never
// trigger a full factorization. The reduction is best effort; any (nu, mu) it finds is exact.
constexpr unsigned long kReducerPrimeBound = 100000;

// Squarefree part of n with respect to the primes below kReducerPrimeBound (an unfactored
// cofactor is kept whole unless it is a perfect square).
Integer partial_squarefree_part(const Integer& n) {
    Integer rest;
    Integer d = (n < 0) ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : small_prime_factors(n, kReducerPrimeBound, &rest))
        if (e % 2 == 1) d *= p;
    if (!integer_sqrt_exact(rest)) d *= rest;
    return d;
}

// g = mu^2 * h with h integral and the small-prime part of its content squarefree; returns h
// and multiplies mu.
UniPoly strip_square_content(const UniPoly& g, Rational& mu) {
    IntegerPoly ip = to_primitive(g);
    Integer nd = ip.scale.get_num() * ip.scale.get_den();
    Integer sq = partial_squarefree_part(nd);
    Integer k = *integer_sqrt_exact(nd / sq);
    Rational factor(k, ip.scale.get_den());
    factor.canonicalize();
    mu *= factor;
    std::vector<Rational> coeffs;
    for (const auto& c : ip.coeffs) coeffs.emplace_back(c * sq);
    return UniPoly(std::move(coeffs));
}

void finalize(Construction& con, const UniPoly& aux_formula, const Rational& lambda, const std::string& var) {
    require(con.f.degree() >= 3, "surface polynomial has degree below 3");
    require(poly_discriminant(con.f) != 0, "surface polynomial has a repeated root (Disc = 0)");
    require(!aux_formula.is_zero() && aux_formula.degree() >= 3, "auxiliary curve degenerates");
    require(poly_discriminant(aux_formula) != 0, "auxiliary quartic is singular (genus drops)");

    NestedPoly res = surface_residual(con);
    int k = 0;
    while (k <= res.degree() && res.coeff(k).is_zero()) ++k;
    if (k > res.degree()) throw Error(ErrorKind::Verification, "substitution residual vanishes identically");
    if (res.degree() != k + 2)
        throw Error(ErrorKind::Verification, "substitution residual is not T^k times a quadratic in T");
    con.t_order = k;
    con.Q0 = res.coeff(k);
    con.Q1 = res.coeff(k + 1);
    con.Q2 = res.coeff(k + 2);
    con.lambda = lambda;
    UniPoly D = con.Q1 * con.Q1 - Rational(4) * con.Q0 * con.Q2;
    UniPoly quotient = exact_div(D.scale_var(lambda), aux_formula);
    auto kappa = poly_sqrt(quotient);
    if (!kappa)
        throw Error(ErrorKind::Verification,
                    "discriminant in T is not a square multiple of the auxiliary quartic");
    con.kappa = *kappa;
    con.aux_formula = aux_formula;
    ReducedModel red = reduce_aux_model(aux_formula);
    con.aux = red.g;
    con.nu = red.nu;
    con.mu = red.mu;
    con.aux_var = var;
    if (con.base_point) {
        SurfacePoint& P = *con.base_point;
        P.verified = on_surface(con, P.p, P.q, P.coord);
        if (!P.verified) throw Error(ErrorKind::Verification, "base point is not on the built surface");
    }
}

Rational require_square_root(const Rational& r, const std::string& what) {
    auto s = rational_is_square(r);
    if (!s) domain_error(what + " must be a rational square");
    return *s;
}

void require_irreducible(const Rational& a, const Rational& b) {
    require(a * b != 0, "quadratic form needs ab != 0");
    require(!rational_is_square(-b / a).has_value(), "quadratic form is reducible over Q (-b/a is a square)");
}

}  // namespace

// ---------------------------------------------------------------- names

std::string family_name(Family f) {
    switch (f) {
        case Family::Sec2: return "Sec2";
        case Family::Sec3Case1: return "Sec3Case1";
        case Family::Sec3Case2: return "Sec3Case2";
        case Family::Sec3Case3: return "Sec3Case3";
        case Family::Sec4CaseI: return "Sec4CaseI";
        case Family::Sec4CaseII: return "Sec4CaseII";
        case Family::Sec5Case2: return "Sec5Case2";
        case Family::Sec5Case3: return "Sec5Case3";
        case Family::Sec5Case4: return "Sec5Case4";
        case Family::Sec5Case5: return "Sec5Case5";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::Sec2, Family::Sec3Case1, Family::Sec3Case2, Family::Sec3Case3, Family::Sec4CaseI,
                     Family::Sec4CaseII, Family::Sec5Case2, Family::Sec5Case3, Family::Sec5Case4,
                     Family::Sec5Case5})
        if (family_name(f) == name) return f;
    throw Error(ErrorKind::Parse, "unknown family tag: " + name);
}

std::vector<std::string> family_parameters(Family f) {
    switch (f) {
        case Family::Sec2: return {"b", "c", "d", "e", "p0", "q0"};
        case Family::Sec3Case1:
        case Family::Sec3Case2: return {"b", "p0", "q0", "r0"};
        case Family::Sec3Case3: return {"b", "s", "r0", "p0", "q0"};
        case Family::Sec4CaseI: return {"b", "c", "p0", "q0", "A1", "A2"};
        case Family::Sec4CaseII: return {"b", "c", "p0", "q0", "A1", "A3", "A4"};
        case Family::Sec5Case2: return {"a", "b", "p0", "q0", "t"};
        case Family::Sec5Case3: return {"a", "b", "p0", "q0", "y0"};
        case Family::Sec5Case4: return {"a", "b", "p0", "q0", "v"};
        case Family::Sec5Case5: return {"a", "b", "p0", "q0", "Z"};
    }
    return {};
}

bool on_surface(const Construction& con, const Rational& p, const Rational& q, const Rational& coord) {
    Rational phi = con.form.eval(p, q);
    if (con.projection == Projection::X) return phi * phi == con.f.eval(coord);
    return coord * coord == con.f.eval(phi);
}

Rational form_value(const Construction& con, const SurfacePoint& P) { return con.form.eval(P.p, P.q); }

// ---------------------------------------------------------------- Sec2 families

Construction build_sec2(const Rational& b, const Rational& c, const Rational& d, const Rational& e,
                        const Rational& p0, const Rational& q0) {
    require(c * e != 0, "Sec2 requires ce != 0");
    require(p0 != 0, "Sec2 substitution divides by p0");
    require_irreducible(Rational(1), b);
    Rational m = p0 * p0 + b * q0 * q0;
    require(m != 0, "Sec2 requires m = p0^2 + b q0^2 != 0");

    Construction con;
    con.family = Family::Sec2;
    con.params = {{"b", b}, {"c", c}, {"d", d}, {"e", e}, {"p0", p0}, {"q0", q0}};
    con.form = {Rational(1), b, Rational(0)};
    con.m = m;
    con.projection = Projection::X;
    con.f = UniPoly{c * e * e, 2 * c * d * e, c * d * d, Rational(0), m * m};
    con.sub_p = NestedPoly({UniPoly(), C(p0)});
    con.sub_q = NestedPoly({UniPoly{Rational(0), 1 / p0}, C(q0)});
    con.sub_coord = NestedPoly({UniPoly{Rational(0), b * q0 / (m * p0)}, C(Rational(1))});
    UniPoly aux{2 * b * c * e * e * m * m, Rational(0), b * b * c * d * d, Rational(0), -2 * b * b * b};
    finalize(con, aux, Rational(1), "U");
    return con;
}

UniPoly sec2_sextic(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& b,
                    const Rational& m) {
    return UniPoly{(a1 * a1 - 4 * a0 * a2) * m * m, Rational(0), 8 * b * a0 * m * m, Rational(0), 4 * b * b * a2,
                   Rational(0), -8 * b * b * b};
}

UniPoly derive_G_sec2(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& b,
                      const Rational& p0, const Rational& q0) {
    if (p0 == 0) domain_error("derive_G_sec2: substitution divides by p0");
    Rational m = p0 * p0 + b * q0 * q0;
    if (m == 0 || b == 0) domain_error("derive_G_sec2: requires m != 0 and b != 0");
    NestedPoly p({UniPoly(), C(p0)});
    NestedPoly q({UniPoly{Rational(0), 1 / p0}, C(q0)});
    NestedPoly X({UniPoly{Rational(0), b * q0 / (m * p0)}, C(Rational(1))});
    UniPoly f{a0, a1, a2, Rational(0), m * m};
    NestedPoly phi = p * p + q * q * C(b);
    NestedPoly res = phi * phi - compose(f, X);
    if (res.degree() > 2) throw Error(ErrorKind::Verification, "derive_G_sec2: T^3 coefficient did not cancel");
    UniPoly B0 = res.coeff(0), B1 = res.coeff(1), B2 = res.coeff(2);
    return (B1 * B1 - Rational(4) * B0 * B2) * (m * m);
}

bool descent_nonempty_criterion(const Rational& m, const Rational& c, const Rational& b, const Rational& X0,
                                const Rational& Y0) {
    if (m == 0 || c == 0 || b == 0) domain_error("descent criterion: m, c, b must be nonzero");
    Rational v = Y0 - m * X0 * X0;
    if (v == 0) domain_error("descent criterion: Y0 - m X0^2 = 0 has no square class");
    return same_square_class(v, b * m) || same_square_class(v, -b * m * c);
}

// ---------------------------------------------------------------- Sec3 families

namespace {

Construction sec3_common(Family fam, const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0,
                         const Rational& a2, const Rational& a0) {
    Construction con;
    con.family = fam;
    con.form = {Rational(1), b, Rational(0)};
    con.m = p0 * p0 + b * q0 * q0;
    con.projection = Projection::X;
    con.f = UniPoly{a0, Rational(0), a2, Rational(0), Rational(1)};
    con.sub_p = NestedPoly({C(p0), C(Rational(1))});
    con.base_point = SurfacePoint{p0, q0, r0, false};
    return con;
}

// v(u) = 2m(p0 + b q0 u) / (r0 (a2 + 2 r0^2))
UniPoly sec3_v(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0, const Rational& m,
               const Rational& a2) {
    Rational den = r0 * (a2 + 2 * r0 * r0);
    if (den == 0) domain_error("substitution requires r0 (a2 + 2 r0^2) != 0");
    return UniPoly{2 * m * p0 / den, 2 * m * b * q0 / den};
}

}  // namespace

UniPoly derive_sextic_sec3(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0,
                           const Rational& a2) {
    Rational m = p0 * p0 + b * q0 * q0;
    Rational a0 = m * m - r0 * r0 * r0 * r0 - a2 * r0 * r0;
    NestedPoly p({C(p0), C(Rational(1))});
    NestedPoly q({C(q0), UniPoly::x()});
    NestedPoly X({C(r0), sec3_v(b, p0, q0, r0, m, a2)});
    UniPoly f{a0, Rational(0), a2, Rational(0), Rational(1)};
    NestedPoly phi = p * p + q * q * C(b);
    NestedPoly res = phi * phi - compose(f, X);
    if (!res.coeff(0).is_zero() || !res.coeff(1).is_zero())
        throw Error(ErrorKind::Verification, "derive_sextic_sec3: low-order terms did not cancel");
    UniPoly C2 = res.coeff(2), C3 = res.coeff(3), C4 = res.coeff(4);
    Rational s = a2 + 2 * r0 * r0;
    return (C3 * C3 - Rational(4) * C2 * C4) * (rational_pow(r0, 8) * rational_pow(s, 6));
}

Construction build_sec3_case1(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0) {
    require_irreducible(Rational(1), b);
    require(r0 != 0, "Sec3Case1 requires r0 != 0");
    Rational m = p0 * p0 + b * q0 * q0;
    require(m != 0, "Sec3Case1 requires m != 0");
    Rational r4 = rational_pow(r0, 4);
    require(m * m != r4, "Sec3Case1 requires m^2 != r0^4");
    Rational a2 = 2 * (m * m - r4) / (r0 * r0);
    Rational a0 = -(m * m - r4);
    Construction con = sec3_common(Family::Sec3Case1, b, p0, q0, r0, a2, a0);
    con.params = {{"b", b}, {"p0", p0}, {"q0", q0}, {"r0", r0}};
    con.sub_q = NestedPoly({C(q0), UniPoly::x()});
    con.sub_coord = NestedPoly({C(r0), sec3_v(b, p0, q0, r0, m, a2)});
    Rational m4 = rational_pow(m, 4);
    UniPoly L4{m4 - p0 * p0 * (m + b * q0 * q0) * r4, -4 * b * b * p0 * q0 * q0 * q0 * r4,
               2 * b * (m4 - (m * m - 3 * b * p0 * p0 * q0 * q0) * r4), -4 * b * b * p0 * p0 * p0 * q0 * r4,
               b * b * (m4 - b * (m + p0 * p0) * q0 * q0 * r4)};
    finalize(con, L4 * Rational(-2 * b), Rational(1), "u");
    return con;
}

Construction build_sec3_case2(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0) {
    require_irreducible(Rational(1), b);
    require(q0 != 0, "Sec3Case2 requires q0 != 0");
    Rational m = p0 * p0 + b * q0 * q0;
    require(m != 0, "Sec3Case2 requires m != 0");
    Rational r2 = r0 * r0;
    Construction con = sec3_common(Family::Sec3Case2, b, p0, q0, r0, -2 * r2, m * m + r2 * r2);
    con.params = {{"b", b}, {"p0", p0}, {"q0", q0}, {"r0", r0}};
    con.sub_q = NestedPoly({C(q0), C(-p0 / (b * q0))});
    con.sub_coord = NestedPoly({C(r0), UniPoly::x()});
    Rational q2 = q0 * q0;
    UniPoly aux{-2 * b * m * m, Rational(0), 4 * b * b * q2 * r2, Rational(0), 2 * b * b * b * q2 * q2};
    finalize(con, aux, Rational(1), "v");
    return con;
}

Construction build_sec3_case3(const Rational& b, const Rational& s, const Rational& r0, const Rational& p0,
                              const Rational& q0) {
    require_irreducible(Rational(1), b);
    require(s != 0 && s != 1 && s != -1, "Sec3Case3 requires s not in {0, 1, -1}");
    require(r0 != 0, "Sec3Case3 requires r0 != 0");
    Rational s2 = s * s;
    Rational m = p0 * p0 + b * q0 * q0;
    if (m != (s2 + 1) * (s2 + 2 * s - 1) / (4 * s2) * r0 * r0)
        invalid_argument("Sec3Case3: (p0, q0, r0) does not satisfy p0^2 + b q0^2 = (s^2+1)(s^2+2s-1) r0^2 / 4s^2");
    Rational r2 = r0 * r0;
    Rational a2 = r2 * (s2 - 1) * (s2 * s2 + 2 * s2 * s + 2 * s2 - 2 * s + 1) / (4 * s2 * s);
    Rational a0 = r2 * r2 * rational_pow(s2 - 1, 4) / (16 * s2 * s2);
    if (a0 != m * m - r2 * r2 - a2 * r2)
        throw Error(ErrorKind::Verification, "Sec3Case3: base point not on the parameterized quartic");
    Construction con = sec3_common(Family::Sec3Case3, b, p0, q0, r0, a2, a0);
    con.params = {{"b", b}, {"s", s}, {"r0", r0}, {"p0", p0}, {"q0", q0}};
    con.sub_q = NestedPoly({C(q0), UniPoly::x()});
    con.sub_coord = NestedPoly({C(r0), sec3_v(b, p0, q0, r0, m, a2)});
    Rational p2 = p0 * p0, q2 = q0 * q0, t = 1 - s2, u = 1 + s2;
    UniPoly g1{t * p2 + 2 * s * b * q2, 2 * (1 - 2 * s - s2) * b * p0 * q0, b * (2 * s * p2 + t * b * q2)};
    UniPoly g2{2 * t * t * p2 + u * u * b * q2, 2 * (1 - 6 * s2 + s2 * s2) * b * p0 * q0,
               b * (u * u * p2 + 2 * t * t * b * q2)};
    finalize(con, g1 * g2 * Rational(-b * s), Rational(1), "u");
    return con;
}

// ---------------------------------------------------------------- Sec4 families

namespace {

struct Sec4Sub {
    NestedPoly p, q, X;
};

// X = T, p = p0 + (U + p0 A1) T / k, q = q0 - (p0 U - b q0^2 A1) T / (b q0 k), k = 4(m-c)m.
Sec4Sub sec4_sub_with_A1(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                         const Rational& A1) {
    Rational m = p0 * p0 + b * q0 * q0 + c;
    Rational k = 4 * (m - c) * m;
    Sec4Sub s;
    s.X = NestedPoly({UniPoly(), C(Rational(1))});
    s.p = NestedPoly({C(p0), UniPoly{p0 * A1 / k, 1 / k}});
    s.q = NestedPoly({C(q0), UniPoly{b * q0 * q0 * A1 / (b * q0 * k), -p0 / (b * q0 * k)}});
    return s;
}

void sec4_checks(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0) {
    require(b != 0, "Sec4 requires b != 0");
    require(q0 != 0, "Sec4 substitution divides by q0");
    Rational m = p0 * p0 + b * q0 * q0 + c;
    require(m != 0, "Sec4 requires m != 0");
    require(m != c, "Sec4 requires m != c");
}

Construction sec4_common(Family fam, const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                         const Rational& A1, const UniPoly& f) {
    Construction con;
    con.family = fam;
    con.form = {Rational(1), b, c};
    con.m = p0 * p0 + b * q0 * q0 + c;
    con.projection = Projection::X;
    con.f = f;
    Sec4Sub s = sec4_sub_with_A1(b, c, p0, q0, A1);
    con.sub_p = s.p;
    con.sub_q = s.q;
    con.sub_coord = s.X;
    con.base_point = SurfacePoint{p0, q0, Rational(0), false};
    return con;
}

}  // namespace

Sec4Elimination derive_F_sec4(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                              const Rational& A1, const Rational& A2, const Rational& A3, const Rational& A4) {
    sec4_checks(b, c, p0, q0);
    Rational m = p0 * p0 + b * q0 * q0 + c;
    Sec4Sub s = sec4_sub_with_A1(b, c, p0, q0, A1);
    UniPoly f{m * m, A1, A2, A3, A4};
    NestedPoly phi = s.p * s.p + s.q * s.q * C(b) + NC(c);
    NestedPoly res = phi * phi - compose(f, s.X);
    if (!res.coeff(0).is_zero() || !res.coeff(1).is_zero())
        throw Error(ErrorKind::Verification, "derive_F_sec4: low-order terms did not cancel");
    Rational k = 256 * b * b * rational_pow(q0, 4) * (m - c) * (m - c) * rational_pow(m, 4);
    Sec4Elimination out;
    out.B0 = res.coeff(2) * k;
    out.B1 = res.coeff(3) * k;
    out.B2 = res.coeff(4) * k;
    UniPoly D = out.B1 * out.B1 - Rational(4) * out.B0 * out.B2;
    out.G = D * (1 / (-128 * b * q0 * q0 * (m - c) * m * m * m));
    return out;
}

Construction build_sec4_case1(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                              const Rational& A1, const Rational& A2) {
    sec4_checks(b, c, p0, q0);
    require(!rational_is_square(-b).has_value(), "quadratic form is reducible over Q (-b is a square)");
    require(A1 != 0, "Sec4CaseI requires A1 != 0");
    Rational m = p0 * p0 + b * q0 * q0 + c;
    Rational mc = m - c;
    Rational A4 = rational_pow(A1, 4) / (256 * mc * mc * rational_pow(m, 4));
    Rational A3 = rational_pow(A1, 3) / (16 * mc * m * m * m);
    Construction con = sec4_common(Family::Sec4CaseI, b, c, p0, q0, A1, UniPoly{m * m, A1, A2, A3, A4});
    con.params = {{"b", b}, {"c", c}, {"p0", p0}, {"q0", q0}, {"A1", A1}, {"A2", A2}};
    Rational A1s = A1 * A1;
    UniPoly inner{-2 * b * b * A1s * ((2 * c - 3 * m) * A1s + 8 * mc * m * m * A2), Rational(0),
                  b * m * (3 * A1s - 8 * m * A2 * mc), Rational(0), m};
    finalize(con, inner * Rational(-2 * b * mc), q0, "U");
    return con;
}

Construction build_sec4_case2(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                              const Rational& A1, const Rational& A3, const Rational& A4) {
    sec4_checks(b, c, p0, q0);
    require(!rational_is_square(-b).has_value(), "quadratic form is reducible over Q (-b is a square)");
    Rational m = p0 * p0 + b * q0 * q0 + c;
    Rational mc = m - c;
    Rational m2 = m * m, m3 = m2 * m, m4 = m2 * m2, m5 = m4 * m, m6 = m3 * m3;
    Rational A1_2 = A1 * A1, A1_3 = A1_2 * A1, A1_4 = A1_2 * A1_2;
    Rational C4 = A1_4 - 256 * mc * mc * m4 * A4;
    require(C4 != 0, "Sec4CaseII requires A1^4 - 256 A4 (m-c)^2 m^4 != 0 (Case I parameters supplied)");
    Rational A2 = (A1_4 * A1_2 + 64 * mc * mc * m2 * A1_3 * A3 + 256 * (2 * c - 3 * m) * mc * mc * m3 * A1_2 * A4 -
                   512 * mc * mc * mc * m5 * A3 * A3) /
                  (8 * m * mc * C4);
    Construction con = sec4_common(Family::Sec4CaseII, b, c, p0, q0, A1, UniPoly{m2, A1, A2, A3, A4});
    con.params = {{"b", b}, {"c", c}, {"p0", p0}, {"q0", q0}, {"A1", A1}, {"A3", A3}, {"A4", A4}};
    Rational C2 = 2 * b * (A1_4 * A1_2 - 32 * mc * mc * m2 * (A3 * A1_3 + 8 * c * m * A4 * A1_2 - 8 * mc * m3 * A3 * A3));
    Rational C0 = b * b *
                  (A1_4 * A1_4 - 64 * mc * mc * m2 * A1_4 * A1 * A3 + 512 * mc * mc * m3 * (m - 2 * c) * A1_4 * A4 +
                   1024 * mc * mc * mc * m5 * A1_2 * A3 * A3 -
                   16384 * mc * mc * mc * mc * m6 * A4 * (A1 * A3 - 4 * A4 * m2));
    UniPoly inner{C0, Rational(0), C2, Rational(0), C4};
    finalize(con, inner * Rational(2 * b * m * mc * (256 * A4 * mc * mc * m4 - A1_4)), q0, "U");
    return con;
}

// ---------------------------------------------------------------- Sec5 families

namespace {

struct Sec5Solve {
    UniPoly s, r, V;
    UniPoly C4, C5, C6;
};

// Triangular solve of C1 = C2 = C3 = 0 for Y = V T^3 + r T^2 + s T + Y0 with p = T + p0, q = U T + q0.
Sec5Solve sec5_solve(const Rational& a, const Rational& b, const Rational& p0, const Rational& q0,
                     const Rational& Y0, const UniPoly& f) {
    if (Y0 == 0) domain_error("the cubic-surface substitution requires Y0 != 0");
    NestedPoly p({C(p0), C(Rational(1))});
    NestedPoly q({C(q0), UniPoly::x()});
    NestedPoly X = p * p * C(a) + q * q * C(b);
    NestedPoly F = compose(f, X);
    Rational two_y0 = 2 * Y0;
    Sec5Solve out;
    out.s = F.coeff(1) * (1 / two_y0);
    out.r = (F.coeff(2) - out.s * out.s) * (1 / two_y0);
    out.V = (F.coeff(3) - Rational(2) * out.r * out.s) * (1 / two_y0);
    NestedPoly Y({C(Y0), out.s, out.r, out.V});
    NestedPoly res = Y * Y - F;
    for (int i = 0; i <= 3; ++i)
        if (!res.coeff(i).is_zero()) throw Error(ErrorKind::Verification, "cubic-surface solve left C1..C3 nonzero");
    out.C4 = res.coeff(4);
    out.C5 = res.coeff(5);
    out.C6 = res.coeff(6);
    return out;
}

}  // namespace

Sec5Elimination derive_H1H2_sec5(const Rational& a, const Rational& b, const Rational& p0, const Rational& q0,
                                 const Rational& Y0, const Rational& c1, const Rational& c2) {
    Rational m = a * p0 * p0 + b * q0 * q0;
    if (m == 0) domain_error("derive_H1H2_sec5: m = 0");
    Rational y0 = Y0 * Y0;
    Rational c0 = y0 - (m * m * m + c2 * m * m + c1 * m);
    UniPoly f{c0, c1, c2, Rational(1)};
    Sec5Solve sol = sec5_solve(a, b, p0, q0, Y0, f);
    UniPoly D = sol.C5 * sol.C5 - Rational(4) * sol.C4 * sol.C6;
    Rational Z = 3 * m * m + 2 * c2 * m + c1;
    Rational k = c2 + 3 * m;
    UniPoly L{a * p0, b * q0};
    UniPoly N{a, Rational(0), b};
    Rational g1 = 8 * y0 * y0 - 4 * k * Z * y0 + Z * Z * Z;
    UniPoly L2 = L * L;
    UniPoly H1 = L2 * L2 * Rational(-Z * g1) + L2 * N * Rational(2 * y0 * (6 * y0 * y0 - 4 * k * y0 * Z + Z * Z * Z)) -
                 N * N * Rational(y0 * y0 * (Z * Z - 4 * k * y0));
    Sec5Elimination out;
    out.H1 = H1;
    out.H2 = exact_div(D * rational_pow(Y0, 16), H1);
    out.s = sol.s;
    out.r = sol.r;
    out.V = sol.V;
    return out;
}

UniPoly sec5_case2_reference_quartic(const Rational& a, const Rational& b, const Rational& p0, const Rational& q0,
                                   const Rational& t) {
    Rational A = a * p0 * p0, B = b * q0 * q0;
    Rational k0 = -A * A * ((A + B) * (A + B) + 2 * (A * A - B * B) * t + A * (A - 3 * B) * t * t - A * B * t * t * t);
    Rational k1 = -2 * A * A * B * t * (4 + t) * (A + B + (A - B) * t);
    Rational k2 = A * B *
                  (-2 * (A + B) * (A + B) + 3 * (A * A - 6 * A * B + B * B) * t * t +
                   (A * A - 4 * A * B + B * B) * t * t * t);
    Rational k3 = 2 * A * B * B * t * (4 + t) * (-(A + B) + (A - B) * t);
    Rational k4 = -B * B * ((A + B) * (A + B) - 2 * (A * A - B * B) * t - B * (3 * A - B) * t * t - A * B * t * t * t);
    return UniPoly{k0, k1, k2, k3, k4} * Rational(-A * B * t);
}

Construction build_sec5(int which, const ParamMap& params) {
    auto get = [&](const char* key) -> Rational {
        auto it = params.find(key);
        if (it == params.end()) invalid_argument(std::string("missing parameter ") + key);
        return it->second;
    };
    Rational a = get("a"), b = get("b"), p0 = get("p0"), q0 = get("q0");
    require_irreducible(a, b);
    Rational m = a * p0 * p0 + b * q0 * q0;
    require(m != 0, "cubic-surface families require m = a p0^2 + b q0^2 != 0");
    Rational m2 = m * m;
    Construction con;
    con.form = {a, b, Rational(0)};
    con.m = m;
    con.projection = Projection::Y;
    UniPoly L{a * p0, b * q0};
    UniPoly N{a, Rational(0), b};
    UniPoly aux;
    Rational lambda(1);
    switch (which) {
        case 1: {
            Rational t = get("t");
            require(t != 0 && t != -1 && t != -4 && t != R(1, 2), "Sec5Case2 requires t not in {0, -1, -4, 1/2}");
            require(p0 * q0 != 0, "Sec5Case2 requires p0 q0 != 0");
            Rational den = (4 + t) * t * (-1 + 2 * t);
            Rational c2 = -m * (1 + t) * (-1 + 13 * t + 5 * t * t) / den;
            Rational c1 = m2 * (1 + t) * (1 + t) * (7 + 4 * t) / den;
            Rational c0 = -m2 * m * rational_pow(1 + t, 4) / (den * t);
            con.family = Family::Sec5Case2;
            con.params = {{"a", a}, {"b", b}, {"p0", p0}, {"q0", q0}, {"t", t}};
            con.f = UniPoly{c0, c1, c2, Rational(1)};
            aux = sec5_case2_reference_quartic(a, b, p0, q0, t);
            lambda = q0 / p0;
            break;
        }
        case 2: {
            Rational y0 = get("y0");
            require(y0 != 0, "Sec5Case3 requires y0 != 0");
            require(y0 != 4 * m2 * m, "Sec5Case3 requires y0 != 4 m^3 (f would be X(X+m)^2)");
            con.family = Family::Sec5Case3;
            con.params = {{"a", a}, {"b", b}, {"p0", p0}, {"q0", q0}, {"y0", y0}};
            con.f = UniPoly{Rational(0), m2, -2 * m + y0 / m2, Rational(1)};
            UniPoly quad{a * (4 * a * m2 * p0 * p0 - y0), 8 * a * b * m2 * p0 * q0, b * (4 * b * m2 * q0 * q0 - y0)};
            aux = N * quad * Rational(a * b * y0);  // -1 twist of the closed-form quartic
            break;
        }
        case 3: {
            Rational v = get("v");
            require(v != 2 * m2, "Sec5Case4 requires v != 2 m^2");
            con.family = Family::Sec5Case4;
            con.params = {{"a", a}, {"b", b}, {"p0", p0}, {"q0", q0}, {"v", v}};
            con.f = UniPoly{(3 * m2 - 2 * v) * (2 * m2 - v) / (2 * m), -(5 * m2 - 3 * v), (2 * m2 + v) / (2 * m),
                            Rational(1)};
            UniPoly quad{a * (2 * a * m * p0 * p0 - v), 4 * a * b * m * p0 * q0, b * (2 * m * b * q0 * q0 - v)};
            aux = N * quad * Rational(2 * a * b);
            break;
        }
        case 4: {
            Rational Z = get("Z");
            require(Z != 0 && Z != 8 * m2, "Sec5Case5 requires Z (8m^2 - Z) != 0");
            con.family = Family::Sec5Case5;
            con.params = {{"a", a}, {"b", b}, {"p0", p0}, {"q0", q0}, {"Z", Z}};
            con.f = UniPoly{(6 * m2 - Z) * (8 * m2 - Z) / (16 * m), (-20 * m2 + 3 * Z) / 4, (8 * m2 + Z) / (8 * m),
                            Rational(1)};
            UniPoly quad = L * L * Rational(8 * m) - N * Rational(Z);
            aux = N * quad * Rational(2 * a * b);
            break;
        }
        default:
            invalid_argument("build_sec5: case selector must be 1..4");
    }
    if (params.size() != 5) invalid_argument("build_sec5: unexpected parameter keys");
    require(poly_discriminant(con.f) != 0, "surface cubic is singular");
    Rational y0 = con.f.eval(m);
    require(y0 != 0, "base value f(m) vanishes (Y0 = 0)");
    Rational Y0 = require_square_root(y0, "f(m) = Y0^2");
    Sec5Solve sol = sec5_solve(a, b, p0, q0, Y0, con.f);
    con.sub_p = NestedPoly({C(p0), C(Rational(1))});
    con.sub_q = NestedPoly({C(q0), UniPoly::x()});
    con.sub_coord = NestedPoly({C(Y0), sol.s, sol.r, sol.V});
    con.base_point = SurfacePoint{p0, q0, Y0, false};
    finalize(con, aux, lambda, "U");
    return con;
}

Construction build(Family family, const ParamMap& params) {
    auto names = family_parameters(family);
    for (const auto& [k, v] : params)
        if (std::find(names.begin(), names.end(), k) == names.end())
            invalid_argument("unknown parameter '" + k + "' for family " + family_name(family));
    auto get = [&](const std::string& key) -> Rational {
        auto it = params.find(key);
        if (it == params.end()) invalid_argument("missing parameter '" + key + "' for family " + family_name(family));
        return it->second;
    };
    switch (family) {
        case Family::Sec2: return build_sec2(get("b"), get("c"), get("d"), get("e"), get("p0"), get("q0"));
        case Family::Sec3Case1: return build_sec3_case1(get("b"), get("p0"), get("q0"), get("r0"));
        case Family::Sec3Case2: return build_sec3_case2(get("b"), get("p0"), get("q0"), get("r0"));
        case Family::Sec3Case3: return build_sec3_case3(get("b"), get("s"), get("r0"), get("p0"), get("q0"));
        case Family::Sec4CaseI:
            return build_sec4_case1(get("b"), get("c"), get("p0"), get("q0"), get("A1"), get("A2"));
        case Family::Sec4CaseII:
            return build_sec4_case2(get("b"), get("c"), get("p0"), get("q0"), get("A1"), get("A3"), get("A4"));
        case Family::Sec5Case2:
        case Family::Sec5Case3:
        case Family::Sec5Case4:
        case Family::Sec5Case5: {
            for (const auto& n : names) (void)get(n);
            int which = 1 + static_cast<int>(family) - static_cast<int>(Family::Sec5Case2);
            return build_sec5(which, params);
        }
    }
    throw Error(ErrorKind::Internal, "unreachable");
}

// ---------------------------------------------------------------- psi

std::vector<SurfacePoint> psi_formula(const Construction& con, const Rational& U, const Rational& w) {
    if (w * w != con.aux_formula.eval(U)) domain_error("psi: point is not on the auxiliary curve");
    Rational u = con.lambda * U;
    Rational q1 = con.Q1.eval(u), q2 = con.Q2.eval(u);
    if (q2 == 0) domain_error("psi: leading T-coefficient vanishes at this point (degree drop)");
    Rational kw = con.kappa.eval(U) * w;
    std::vector<SurfacePoint> out;
    for (int sign : {1, -1}) {
        Rational T = (-q1 + sign * kw) / (2 * q2);
        SurfacePoint P{con.sub_p.eval(T, u), con.sub_q.eval(T, u), con.sub_coord.eval(T, u), false};
        P.verified = on_surface(con, P.p, P.q, P.coord);
        if (!P.verified) throw Error(ErrorKind::Verification, "psi produced a point off the surface");
        bool dup = std::any_of(out.begin(), out.end(), [&](const SurfacePoint& Q) {
            return Q.p == P.p && Q.q == P.q && Q.coord == P.coord;
        });
        if (!dup) out.push_back(P);
    }
    return out;
}

std::vector<SurfacePoint> psi(const Construction& con, const Rational& U, const Rational& w) {
    if (w * w != con.aux.eval(U)) domain_error("psi: point is not on the auxiliary curve");
    return psi_formula(con, con.nu * U, con.mu * w);
}

// ---------------------------------------------------------------- fiber guard

UniPoly fiber_degree_guard_value(const Construction& con, const Rational& value) {
    if (con.sub_p.degree() > 1 || con.sub_q.degree() > 1)
        throw Error(ErrorKind::Internal, "fiber guard expects p, q linear in T");
    auto in_U = [&](const UniPoly& h) { return h.scale_var(con.lambda); };
    UniPoly P0 = in_U(con.sub_p.coeff(0)), P1 = in_U(con.sub_p.coeff(1));
    UniPoly S0 = in_U(con.sub_q.coeff(0)), S1 = in_U(con.sub_q.coeff(1));
    UniPoly Q1 = in_U(con.Q1), delta = in_U(con.Q2) * Rational(2);
    const UniPoly& g = con.aux_formula;
    // p = (A0 + A1 w)/delta, q = (B0 + B1 w)/delta
    UniPoly A0 = P0 * delta - P1 * Q1, A1 = P1 * con.kappa;
    UniPoly B0 = S0 * delta - S1 * Q1, B1 = S1 * con.kappa;
    const QuadForm& F = con.form;
    UniPoly N0 = (A0 * A0 + A1 * A1 * g) * F.a + (B0 * B0 + B1 * B1 * g) * F.b + delta * delta * (F.c - value);
    UniPoly N1 = (A0 * A1 * F.a + B0 * B1 * F.b) * Rational(2);
    UniPoly Rpoly = N0 * N0 - N1 * N1 * g;
    if (Rpoly.is_zero()) throw Error(ErrorKind::Verification, "fiber polynomial vanishes identically");
    return Rpoly;
}

UniPoly fiber_degree_guard(const Construction& con, const SurfacePoint& target) {
    return fiber_degree_guard_value(con, form_value(con, target));
}

// ---------------------------------------------------------------- reducer

ReducedModel reduce_aux_model(const UniPoly& g) {
    if (g.is_zero()) domain_error("reduce_aux_model: zero polynomial");
    ReducedModel out{UniPoly(), Rational(1), Rational(1)};
    out.g = strip_square_content(g, out.mu);
    const int even_deg = g.degree() + (g.degree() % 2);
    for (;;) {
        std::vector<Integer> primes{2, 3};
        for (const Rational* end : {&out.g.lc(), &out.g.coeffs()[0]}) {
            Rational e = *end;
            if (e == 0) {
                for (const auto& c : out.g.coeffs())
                    if (c != 0) {
                        e = c;
                        break;
                    }
            }
            for (const auto& [p, k] : small_prime_factors(e.get_num(), kReducerPrimeBound)) {
                (void)k;
                if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
            }
        }
        std::size_t best_bits = coefficient_bits(out.g);
        std::optional<ReducedModel> best;
        for (const auto& p : primes) {
            Rational pr(p);
            {
                ReducedModel cand{UniPoly(), out.nu * pr, out.mu};
                cand.g = strip_square_content(out.g.scale_var(pr), cand.mu);
                if (coefficient_bits(cand.g) < best_bits) {
                    best_bits = coefficient_bits(cand.g);
                    best = cand;
                }
            }
            {
                Rational pk = rational_pow(pr, even_deg / 2);
                ReducedModel cand{UniPoly(), out.nu / pr, out.mu / pk};
                cand.g = strip_square_content(out.g.scale_var(1 / pr) * (pk * pk), cand.mu);
                if (coefficient_bits(cand.g) < best_bits) {
                    best_bits = coefficient_bits(cand.g);
                    best = cand;
                }
            }
        }
        if (!best) break;
        out = *best;
    }
    if (g.scale_var(out.nu) != out.g * (out.mu * out.mu))
        throw Error(ErrorKind::Internal, "reduce_aux_model: scaling relation failed");
    return out;
}

}  // namespace qfrep
