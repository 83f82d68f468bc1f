#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qfrep/poly.hpp"
#include "qfrep/rational.hpp"

namespace qfrep {

enum class Family {
    Sec2,        // (p^2+bq^2)^2 = m^2X^4 + c(dX+e)^2
    Sec3Case1,   // X^4 + a2X^2 + a0 with 2a0 + a2 r0^2 = 0
    Sec3Case2,   // X^4 + a2X^2 + a0 with a2 + 2r0^2 = 0
    Sec3Case3,   // X^4 + a2X^2 + a0 on the genus-0 (a2, a0) family parameterized by s
    Sec4CaseI,   // (p^2+bq^2+c)^2 = f(X), A1^4 = 256A4(m-c)^2m^4
    Sec4CaseII,  // (p^2+bq^2+c)^2 = f(X), A2 solving H = 0
    Sec5Case2,   // Y^2 = f(ap^2+bq^2), h12 = 0 branch (parameter t)
    Sec5Case3,   // Y^2 = f(ap^2+bq^2), h13 = 0 branch (parameter y0)
    Sec5Case4,   // Y^2 = f(ap^2+bq^2), h21 = 0 branch (parameter v)
    Sec5Case5    // Y^2 = f(ap^2+bq^2), h23 = 0 branch (parameter Z)
};

std::string family_name(Family f);
Family parse_family(const std::string& name);  // Parse error on unknown tags
// Parameter names each family expects (keys of the JSON parameter object).
std::vector<std::string> family_parameters(Family f);

// a p^2 + b q^2 + c
struct QuadForm {
    Rational a, b, c;
    Rational eval(const Rational& p, const Rational& q) const { return a * p * p + b * q * q + c; }
};

// Projection convention: quartic surfaces (form)^2 = f(X) project to X; cubic surfaces
// Y^2 = f(form) project to Y.
enum class Projection { X, Y };

struct SurfacePoint {
    Rational p, q, coord;
    bool verified = false;
};

using ParamMap = std::map<std::string, Rational>;

struct Construction {
    Family family;
    ParamMap params;  // raw parameters, keyed by symbol name
    QuadForm form;
    UniPoly f;
    Projection projection;
    Rational m;  // form value at the base point

    // Substitution p, q, coord as polynomials in T with coefficients in the inner variable.
    NestedPoly sub_p, sub_q, sub_coord;
    int t_order = 0;        // residual = T^t_order * (Q0 + Q1 T + Q2 T^2)
    UniPoly Q0, Q1, Q2;     // in the inner variable
    Rational lambda;        // inner variable = lambda * U (U the formula-curve variable)
    UniPoly kappa;          // D(lambda U) = kappa(U)^2 * aux_formula(U)
    UniPoly aux_formula;    // auxiliary quartic as derived by the construction
    UniPoly aux;            // reduced model: aux_formula(nu U') = mu^2 aux(U')
    Rational nu, mu;
    std::string aux_var;    // name of the curve variable in printed output
    // Affine base point; empty for Sec2, whose base point (p0 : q0 : 1) lies at infinity.
    std::optional<SurfacePoint> base_point;
};

// Exact check of the surface equation.
bool on_surface(const Construction& con, const Rational& p, const Rational& q, const Rational& coord);
// Value of the quadratic form at a surface point.
Rational form_value(const Construction& con, const SurfacePoint& P);

// ---------------------------------------------------------------- builders

Construction build_sec2(const Rational& b, const Rational& c, const Rational& d, const Rational& e,
                        const Rational& p0, const Rational& q0);
Construction build_sec3_case1(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0);
Construction build_sec3_case2(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0);
Construction build_sec3_case3(const Rational& b, const Rational& s, const Rational& r0, const Rational& p0,
                              const Rational& q0);
Construction build_sec4_case1(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                              const Rational& A1, const Rational& A2);
Construction build_sec4_case2(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                              const Rational& A1, const Rational& A3, const Rational& A4);
// which = 1..4 selects the t / y0 / v / Z branch (families Sec5Case2..Sec5Case5).
// Keys: a, b, p0, q0 and one of t, y0, v, Z.
Construction build_sec5(int which, const ParamMap& params);
// The (t)-branch auxiliary quartic with A = a p0^2, B = b q0^2: -ABt (k4 U^4 + ... + k0).
UniPoly sec5_case2_reference_quartic(const Rational& a, const Rational& b, const Rational& p0, const Rational& q0,
                                   const Rational& t);
// Dispatch on a family tag with a parameter map (InvalidArgument on missing/unknown keys).
Construction build(Family family, const ParamMap& params);

// ---------------------------------------------------------------- the map psi

// Surface points from a point (U', w') of the reduced auxiliary model; one point per root
// of the quadratic in T (deduplicated). Domain error at poles.
std::vector<SurfacePoint> psi(const Construction& con, const Rational& U, const Rational& w);
// Same, for a point (U, w) on the formula curve aux_formula.
std::vector<SurfacePoint> psi_formula(const Construction& con, const Rational& U, const Rational& w);

// ---------------------------------------------------------------- elimination engines

// Substitution p = p0 T, q = q0 T + U/p0, X = T + bq0U/(mp0) on
// (p^2+bq^2)^2 = m^2X^4 + a2X^2 + a1X + a0 (m = p0^2+bq0^2); returns m^2 (B1^2 - 4B0B2).
UniPoly derive_G_sec2(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& b,
                      const Rational& p0, const Rational& q0);
// Closed-form sextic -8b^3U^6 + 4b^2a2U^4 + 8ba0m^2U^2 + (a1^2-4a0a2)m^2.
UniPoly sec2_sextic(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& b,
                    const Rational& m);

// Sextic in u from the X^4 + a2X^2 + a0 substitution (p0+T, q0+uT, r0+vT):
// r0^8 (a2+2r0^2)^6 (C3^2 - 4C2C4), the polynomial whose discriminant the factorization describes.
UniPoly derive_sextic_sec3(const Rational& b, const Rational& p0, const Rational& q0, const Rational& r0,
                           const Rational& a2);

struct Sec4Elimination {
    UniPoly B0, B1, B2;  // F(T) = B0 + B1 T + B2 T^2 (integral normalization)
    UniPoly G;           // monic even sextic: B1^2 - 4B0B2 = -128 b q0^2 (m-c) m^3 G
};
Sec4Elimination derive_F_sec4(const Rational& b, const Rational& c, const Rational& p0, const Rational& q0,
                              const Rational& A1, const Rational& A2, const Rational& A3, const Rational& A4);

struct Sec5Elimination {
    UniPoly H1, H2;   // H1 H2 = Y0^16 (C5^2 - 4 C4 C6), deg 4 and 6
    UniPoly s, r, V;  // solution of C1 = C2 = C3 = 0
};
Sec5Elimination derive_H1H2_sec5(const Rational& a, const Rational& b, const Rational& p0, const Rational& q0,
                                 const Rational& Y0, const Rational& c1, const Rational& c2);

// ---------------------------------------------------------------- certificates

// Polynomial in the formula-curve variable U whose roots contain every U with
// form(psi(U, w)) = value(target); nonzero means each fiber is finite.
UniPoly fiber_degree_guard(const Construction& con, const SurfacePoint& target);
UniPoly fiber_degree_guard_value(const Construction& con, const Rational& value);

// Square-class criterion guaranteeing the auxiliary quartic of the m^2X^4 + c(dX+e)^2 family has a
// rational point: Y0 - mX0^2 lies in the class of b*m or -b*m*c.
bool descent_nonempty_criterion(const Rational& m, const Rational& c, const Rational& b, const Rational& X0,
                                const Rational& Y0);

struct ReducedModel {
    UniPoly g;
    Rational nu, mu;  // original(nu U) = mu^2 g(U)
};
// Removes square content and rescales the variable by primes while the coefficient size drops.
ReducedModel reduce_aux_model(const UniPoly& g);

}  // namespace qfrep
