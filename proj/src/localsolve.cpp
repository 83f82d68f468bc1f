#include "qfrep/localsolve.hpp"

#include "qfrep/error.hpp"

namespace qfrep {

namespace {

// Integral model with the same square class: g * d^2, d the lcm of the denominators.
std::vector<Integer> integral_model(const UniPoly& g) {
    Integer mult;
    std::vector<Integer> c = clear_denominators(g, &mult);
    for (auto& x : c) x *= mult;  // g * mult^2
    return c;
}

// Taylor coefficients g_j(x0) = g^{(j)}(x0)/j!, all integral.
std::vector<Integer> taylor_at(const std::vector<Integer>& c, const Integer& x0) {
    std::vector<Integer> t(c);
    const std::size_t n = t.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) t[j - 1] += x0 * t[j];
    return t;
}

bool is_padic_square_unit(const Integer& u, const Integer& p) {
    if (p == 2) {
        Integer r = u % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

struct Search {
    const std::vector<Integer>& c;
    Integer p;
    long cap;
    LocalVerdict& verdict;
    bool reciprocal;

    // Decides the disc x0 + p^k Z_p; true when a witness was recorded.
    bool disc(const Integer& x0, long k, const Integer& pk) {
        if (k > verdict.depth_reached) verdict.depth_reached = k;
        std::vector<Integer> t = taylor_at(c, x0);
        const Integer& val = t[0];
        if (val == 0) return record(x0, k, "root of g");
        long v = valuation(val, p);
        Integer unit = val;
        for (long i = 0; i < v; ++i) unit /= p;
        if (v % 2 == 0 && is_padic_square_unit(unit, p)) return record(x0, k, "g(U) is a nonzero p-adic square");
        if (t.size() > 1 && t[1] != 0) {
            long v1 = valuation(t[1], p);
            if (v > 2 * v1) return record(x0, k, "Hensel lift to a root of g");
        }
        // Square class of g constant on the disc: refuted.
        const long slack = (p == 2) ? 3 : 1;
        bool frozen = true;
        for (std::size_t j = 1; j < t.size() && frozen; ++j) {
            if (t[j] != 0 && valuation(t[j], p) + static_cast<long>(j) * k < v + slack) frozen = false;
        }
        if (frozen) {
            ++verdict.discs_refuted;
            return false;
        }
        if (k >= cap)
            throw Error(ErrorKind::Verification, "local solvability undecided at depth cap " + std::to_string(cap) +
                                                     " (p = " + to_string(p) + ")");
        Integer next = pk * p;
        for (Integer r = 0; r < p; ++r)
            if (disc(x0 + r * pk, k + 1, next)) return true;
        return false;
    }

    bool record(const Integer& x0, long k, const std::string& why) {
        LocalWitness w;
        w.reciprocal = reciprocal;
        w.U = reciprocal ? (x0 == 0 ? Rational(0) : Rational(1) / Rational(x0)) : Rational(x0);
        w.precision = k;
        w.reason = reciprocal && x0 == 0 ? why + " (point at infinity, V = 0)" : why;
        verdict.witness = w;
        verdict.solvable = true;
        return true;
    }
};

}  // namespace

LocalVerdict locally_solvable(const UniPoly& g, const Integer& p, long depth_override) {
    if (g.is_zero()) invalid_argument("locally_solvable: zero polynomial");
    if (p < 2 || !is_probable_prime(p)) invalid_argument("locally_solvable: p = " + to_string(p) + " is not prime");
    if (g.degree() < 1) invalid_argument("locally_solvable: polynomial must be nonconstant");
    std::vector<Integer> c = integral_model(g);
    // The cap is measured on the integral model, whose discriminant has nonnegative valuation.
    std::vector<Rational> cq(c.begin(), c.end());
    Rational disc = poly_discriminant(UniPoly(cq));
    if (disc == 0) domain_error("locally_solvable: g has a repeated root");
    LocalVerdict out;
    out.place = to_string(p);
    out.depth_cap = depth_override > 0 ? depth_override : 2 * valuation(disc, p) + 4;
    // The smooth model has even degree at infinity.
    const int n = g.degree() + (g.degree() % 2);
    Search affine{c, p, out.depth_cap, out, false};
    if (affine.disc(Integer(0), 0, Integer(1))) return out;
    // |U| > 1: U = 1/V, V in pZ_p, w'^2 = V^n g(1/V).
    std::vector<Integer> rc = integral_model(g.reversed(n));
    Search rev{rc, p, out.depth_cap, out, true};
    rev.disc(Integer(0), 1, p);
    return out;
}

LocalVerdict really_solvable(const UniPoly& g) {
    if (g.is_zero()) invalid_argument("really_solvable: zero polynomial");
    LocalVerdict out;
    out.place = "real";
    auto exact = [&](const Rational& U, const std::string& why) {
        LocalWitness w;
        w.U = U;
        w.lo = w.hi = U;
        w.reason = why;
        out.witness = w;
        out.solvable = true;
        return out;
    };
    if (g.degree() == 0) {
        if (g.lc() > 0) return exact(Rational(0), "positive constant");
        return out;
    }
    // Positive somewhere near infinity when lc > 0 or the degree is odd.
    if (g.lc() > 0 || g.degree() % 2 == 1) {
        Rational U(1);
        if (g.degree() % 2 == 1 && g.lc() < 0) U = -1;
        for (int i = 0; i < 4096 && g.eval(U) < 0; ++i) U *= 2;
        return exact(U, "g(U) >= 0");
    }
    if (count_real_roots(g) == 0) return out;  // g < 0 on all of R
    // Isolate a real root by bisection: g(root) = 0 >= 0.
    Rational bound(1);
    for (const auto& a : g.coeffs()) bound += abs(a / g.lc());
    Rational lo = -bound, hi = bound;
    for (int i = 0; i < 64; ++i) {
        Rational mid = (lo + hi) / 2;
        if (g.eval(mid) >= 0) return exact(mid, "g(U) >= 0");
        if (count_real_roots_in(g, lo, mid) > 0) hi = mid;
        else lo = mid;
    }
    LocalWitness w;
    w.lo = lo;
    w.hi = hi;
    w.U = (lo + hi) / 2;
    w.reason = "real root of g in (lo, hi]";
    out.witness = w;
    out.solvable = true;
    return out;
}

}  // namespace qfrep
