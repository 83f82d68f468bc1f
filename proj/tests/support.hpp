#pragma once
// Independent oracles and random instance generators shared by the test suites.

#include <functional>
#include <numeric>
#include <stdexcept>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qfrep/constructions.hpp"
#include "qfrep/elliptic.hpp"
#include "qfrep/error.hpp"
#include "qfrep/poly.hpp"
#include "qfrep/rational.hpp"

namespace testsupport {

using qfrep::Integer;
using qfrep::Rational;
using qfrep::UniPoly;

inline Rational Q(const char* s) { return qfrep::parse_rational(s); }

inline Rational rnd(std::mt19937_64& rng, long num_bound = 12, long den_bound = 9, bool nonzero = true) {
    std::uniform_int_distribution<long> nd(-num_bound, num_bound), dd(1, den_bound);
    for (;;) {
        Rational r(nd(rng), dd(rng));
        r.canonicalize();
        if (!nonzero || r != 0) return r;
    }
}

inline long rnd_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline UniPoly random_poly(std::mt19937_64& rng, int degree, long num_bound = 9) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(rnd(rng, num_bound, 6, false));
    c.push_back(rnd(rng, num_bound, 6, true));
    return UniPoly(c);
}

// Determinant by fraction-based Gaussian elimination (row swaps tracked).
inline Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
        }
    }
    return det;
}

// Resultant as the determinant of the Sylvester matrix (coefficients highest degree first).
inline Rational sylvester_resultant(const UniPoly& f, const UniPoly& g) {
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
    return determinant(s);
}

inline Rational sylvester_discriminant(const UniPoly& f) {
    const int n = f.degree();
    Rational sign = ((n * (n - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * sylvester_resultant(f, f.derivative()) / f.lc();
}

// Naive search for U = x/y, |x|, |y| <= height, with g(U) a rational square.
inline std::optional<std::pair<Rational, Rational>> naive_quartic_point(const UniPoly& g, long height) {
    for (long y = 1; y <= height; ++y)
        for (long x = -height; x <= height; ++x) {
            if (std::gcd(x, y) != 1) continue;
            Rational U(x, y);
            U.canonicalize();
            if (auto w = qfrep::rational_is_square(g.eval(U))) return std::make_pair(U, *w);
        }
    return std::nullopt;
}

// Random nonsingular Weierstrass curve through three random points (P, Q, R).
struct CurveWithPoints {
    qfrep::WCurve E;
    qfrep::WPoint P, Q, R;
};
inline CurveWithPoints random_curve_with_points(std::mt19937_64& rng) {
    for (;;) {
        Rational x[3], y[3];
        for (int i = 0; i < 3; ++i) {
            x[i] = rnd(rng, 9, 4);
            y[i] = rnd(rng, 9, 4);
        }
        if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) continue;
        // a2 x^2 + a4 x + a6 = y^2 - x^3 at the three abscissae.
        std::vector<std::vector<Rational>> A(3, std::vector<Rational>(3));
        std::vector<Rational> rhs(3);
        for (int i = 0; i < 3; ++i) {
            A[i] = {x[i] * x[i], x[i], Rational(1)};
            rhs[i] = y[i] * y[i] - x[i] * x[i] * x[i];
        }
        Rational d = determinant(A);
        Rational sol[3];
        for (int j = 0; j < 3; ++j) {
            auto Aj = A;
            for (int i = 0; i < 3; ++i) Aj[i][j] = rhs[i];
            sol[j] = determinant(Aj) / d;
        }
        qfrep::WCurve E{sol[0], sol[1], sol[2]};
        if (qfrep::w_discriminant(E) == 0) continue;
        return {E, qfrep::WPoint::affine(x[0], y[0]), qfrep::WPoint::affine(x[1], y[1]),
                qfrep::WPoint::affine(x[2], y[2])};
    }
}

// Retries `make` until it produces a value without raising a library error.
template <class F>
auto retry(F&& make, int attempts = 2000) -> decltype(make()) {
    for (int i = 0; i < attempts; ++i) {
        try {
            return make();
        } catch (const qfrep::Error&) {
        }
    }
    throw std::runtime_error("retry: no admissible instance found");
}

// Random admissible construction of the given family.
inline qfrep::Construction random_construction(qfrep::Family fam, std::mt19937_64& rng) {
    using qfrep::Family;
    return retry([&]() -> qfrep::Construction {
        auto r = [&] { return rnd(rng, 7, 5); };
        switch (fam) {
            case Family::Sec2:
                return qfrep::build_sec2(r(), r(), r(), r(), r(), r());
            case Family::Sec3Case1:
                return qfrep::build_sec3_case1(r(), r(), r(), r());
            case Family::Sec3Case2:
                return qfrep::build_sec3_case2(r(), r(), r(), r());
            case Family::Sec3Case3: {
                // Choose s, r0, p0, q0 and solve the conic for b.
                Rational s = r(), r0 = r(), p0 = r(), q0 = r();
                if (s == 1 || s == -1) throw qfrep::Error(qfrep::ErrorKind::Domain, "s");
                Rational M = (s * s + 1) * (s * s + 2 * s - 1) * r0 * r0 / (4 * s * s);
                Rational b = (M - p0 * p0) / (q0 * q0);
                return qfrep::build_sec3_case3(b, s, r0, p0, q0);
            }
            case Family::Sec4CaseI:
                return qfrep::build_sec4_case1(r(), r(), r(), r(), r(), r());
            case Family::Sec4CaseII:
                return qfrep::build_sec4_case2(r(), r(), r(), r(), r(), r(), r());
            case Family::Sec5Case2: {
                // m (1 - 2t)(4 + t) must be a square: pick m = (1 - 2t)(4 + t) k^2, then a.
                Rational t = r(), b = r(), p0 = r(), q0 = r(), k = r();
                Rational m = (1 - 2 * t) * (4 + t) * k * k;
                Rational a = (m - b * q0 * q0) / (p0 * p0);
                return qfrep::build_sec5(1, {{"a", a}, {"b", b}, {"p0", p0}, {"q0", q0}, {"t", t}});
            }
            case Family::Sec5Case3: {
                Rational k = r();
                return qfrep::build_sec5(2, {{"a", r()}, {"b", r()}, {"p0", r()}, {"q0", r()}, {"y0", k * k}});
            }
            case Family::Sec5Case4:
            case Family::Sec5Case5: {
                // m must be a square.
                Rational k = r(), b = r(), p0 = r(), q0 = r();
                Rational a = (k * k - b * q0 * q0) / (p0 * p0);
                bool case4 = fam == Family::Sec5Case4;
                return qfrep::build_sec5(case4 ? 3 : 4, {{"a", a}, {"b", b}, {"p0", p0}, {"q0", q0},
                                                         {case4 ? "v" : "Z", r()}});
            }
        }
        throw std::logic_error("family");
    });
}

inline const std::vector<qfrep::Family>& all_families() {
    using qfrep::Family;
    static const std::vector<Family> f{Family::Sec2,      Family::Sec3Case1,  Family::Sec3Case2, Family::Sec3Case3,
                                       Family::Sec4CaseI, Family::Sec4CaseII, Family::Sec5Case2, Family::Sec5Case3,
                                       Family::Sec5Case4, Family::Sec5Case5};
    return f;
}

}  // namespace testsupport
