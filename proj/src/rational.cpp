#include "qfrep/rational.hpp"

#include <algorithm>
#include <cctype>

#include "qfrep/error.hpp"

namespace qfrep {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw Error(ErrorKind::Parse, "malformed integer literal '" + s + "'");
    std::string t = (s[0] == '+') ? s.substr(1) : s;
    return Integer(t, 10);
}

// Pollard-Brent rho; returns a nontrivial factor of composite n (n odd, > 3).
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(Integer(n / d), out);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw Error(ErrorKind::Parse, "denominator must be unsigned in '" + text + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Rational make_rational(long num, long den) {
    if (den == 0) domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer integer_pow(const Integer& z, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
    return out;
}

Rational rational_pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) domain_error("rational_pow: zero to a negative power");
        return rational_pow(Rational(1) / r, -e);
    }
    Rational out(integer_pow(r.get_num(), static_cast<unsigned long>(e)),
                 integer_pow(r.get_den(), static_cast<unsigned long>(e)));
    out.canonicalize();
    return out;
}

std::optional<Integer> integer_sqrt_exact(const Integer& z) {
    if (z < 0) return std::nullopt;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
    return s;
}

std::optional<Rational> rational_is_square(const Rational& r) {
    auto n = integer_sqrt_exact(r.get_num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(r.get_den());
    if (!d) return std::nullopt;
    Rational out(*n, *d);
    out.canonicalize();
    return out;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n_in) {
    if (n_in == 0) domain_error("factor_integer: zero has no factorization");
    Integer n = abs(n_in);
    std::vector<Integer> primes;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    for (unsigned long p = 17; p < 20000 && n > 1; p += 2) {
        if (Integer(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<std::pair<Integer, unsigned>> small_prime_factors(const Integer& n_in, unsigned long bound,
                                                             Integer* cofactor) {
    if (n_in == 0) domain_error("small_prime_factors: zero has no factorization");
    Integer n = abs(n_in);
    std::vector<std::pair<Integer, unsigned>> out;
    for (unsigned long p = 2; p < bound && n > 1; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) {
            if (n < bound) {
                out.emplace_back(n, 1);
                n = 1;
            }
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(Integer(p), e);
    }
    if (cofactor) *cofactor = n;
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) domain_error("squarefree_part: n = 0");
    Integer d = (n < 0) ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2 == 1) d *= p;
    return d;
}

Integer square_class(const Rational& r) {
    if (r == 0) domain_error("square_class: zero has no square class");
    // r = n/d is in the class of n*d.
    return squarefree_part(Integer(r.get_num() * r.get_den()));
}

bool same_square_class(const Rational& r1, const Rational& r2) {
    if (r1 == 0 || r2 == 0) domain_error("same_square_class: zero input");
    return rational_is_square(Rational(r1 / r2)).has_value();
}

long valuation(const Integer& z, const Integer& p) {
    if (z == 0) domain_error("valuation of zero");
    Integer t = z;
    long v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long valuation(const Rational& r, const Integer& p) {
    if (r == 0) domain_error("valuation of zero");
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

std::size_t bit_height(const Rational& r) {
    std::size_t n = (r.get_num() == 0) ? 0 : mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    return n + mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace qfrep
