#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qfrep/rational.hpp"

namespace qfrep {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    static UniPoly x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& lc() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly compose(const UniPoly& inner) const;  // f(inner(x))
    UniPoly scale_var(const Rational& lambda) const;  // f(lambda*x)
    UniPoly shift(const Rational& c) const;  // f(x + c)
    UniPoly reversed(int n) const;  // x^n f(1/x); requires n >= degree
    UniPoly pow(unsigned e) const;
    UniPoly monic() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};
DivMod divmod(const UniPoly& f, const UniPoly& g);
// f / g, throwing a Verification error when g does not divide f.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);  // monic (zero if both zero)
UniPoly squarefree_kernel(const UniPoly& f);  // f / gcd(f, f'), monic

// Exact square root with positive leading coefficient, if f is a square in Q[x].
std::optional<UniPoly> poly_sqrt(const UniPoly& f);

// Integer content handling: f = scale * prim with prim primitive in Z[x], lc(prim) > 0.
struct IntegerPoly {
    std::vector<Integer> coeffs;  // lowest first
    Rational scale;
};
IntegerPoly to_primitive(const UniPoly& f);
// Multiplies out the denominators only: f * lcm(denominators), integral.
std::vector<Integer> clear_denominators(const UniPoly& f, Integer* multiplier = nullptr);

Rational poly_eval(const UniPoly& f, const Rational& x);
Rational poly_resultant(const UniPoly& f, const UniPoly& g);
// Disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
Rational poly_discriminant(const UniPoly& f);

// Number of distinct real roots of f (f nonzero), via a Sturm sequence.
int count_real_roots(const UniPoly& f);
// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots_in(const UniPoly& f, const Rational& a, const Rational& b);
// All integer roots of f (f nonzero), ascending, without multiplicity.
std::vector<Integer> integer_roots(const UniPoly& f);

// Dense polynomial in an outer variable T whose coefficients are UniPoly in an inner variable u.
class NestedPoly {
public:
    NestedPoly() = default;
    explicit NestedPoly(std::vector<UniPoly> coeffs);
    static NestedPoly constant(const UniPoly& c);
    static NestedPoly t() { return NestedPoly({UniPoly(), UniPoly::constant(Rational(1))}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    UniPoly coeff(int i) const;
    const std::vector<UniPoly>& coeffs() const { return c_; }

    UniPoly eval_outer(const Rational& t) const;  // polynomial in u
    UniPoly eval_inner(const Rational& u) const;  // polynomial in T
    Rational eval(const Rational& t, const Rational& u) const;

    NestedPoly operator-() const;
    NestedPoly& operator+=(const NestedPoly& o);
    NestedPoly& operator-=(const NestedPoly& o);
    NestedPoly& operator*=(const NestedPoly& o);
    NestedPoly& operator*=(const UniPoly& s);
    friend NestedPoly operator+(NestedPoly a, const NestedPoly& b) { return a += b; }
    friend NestedPoly operator-(NestedPoly a, const NestedPoly& b) { return a -= b; }
    friend NestedPoly operator*(NestedPoly a, const NestedPoly& b) { return a *= b; }
    friend NestedPoly operator*(NestedPoly a, const UniPoly& s) { return a *= s; }
    friend bool operator==(const NestedPoly& a, const NestedPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<UniPoly> c_;
};

// f(P(T, u)) for a univariate f.
NestedPoly compose(const UniPoly& f, const NestedPoly& p);

}  // namespace qfrep
