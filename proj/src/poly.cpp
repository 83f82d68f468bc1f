#include "qfrep/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qfrep/error.hpp"

namespace qfrep {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::lc() const {
    if (c_.empty()) domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly UniPoly::scale_var(const Rational& lambda) const {
    std::vector<Rational> v = c_;
    Rational pw = 1;
    for (auto& c : v) {
        c *= pw;
        pw *= lambda;
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::shift(const Rational& c) const { return compose(UniPoly{c, Rational(1)}); }

UniPoly UniPoly::reversed(int n) const {
    if (n < degree()) invalid_argument("reversed: n smaller than degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(n) - i] = c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(Rational(1) / lc());
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = (a == 1);
        if (i == 0 || !unit) os << qfrep::to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- division

DivMod divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) domain_error("polynomial division by zero");
    std::vector<Rational> r = f.coeffs();
    const int dg = g.degree();
    const Rational inv = Rational(1) / g.lc();
    std::vector<Rational> q(f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0);
    for (int i = f.degree(); i >= dg; --i) {
        Rational c = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - dg)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(i - dg + j)] -= c * g.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    DivMod qr = divmod(f, g);
    if (!qr.remainder.is_zero())
        throw Error(ErrorKind::Verification, "exact_div: divisor does not divide dividend");
    return qr.quotient;
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly squarefree_kernel(const UniPoly& f) {
    if (f.degree() <= 0) return f.monic();
    return exact_div(f, poly_gcd(f, f.derivative())).monic();
}

std::optional<UniPoly> poly_sqrt(const UniPoly& f) {
    if (f.is_zero()) return UniPoly();
    const int n = f.degree();
    if (n % 2 != 0) return std::nullopt;
    auto lead = rational_is_square(f.lc());
    if (!lead) return std::nullopt;
    const int h = n / 2;
    std::vector<Rational> s(static_cast<std::size_t>(h) + 1);
    s[static_cast<std::size_t>(h)] = *lead;
    for (int k = h - 1; k >= 0; --k) {
        Rational acc = f.coeff(h + k);
        for (int i = k + 1; i <= h; ++i) {
            int j = h + k - i;
            if (j > k && j <= h) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        s[static_cast<std::size_t>(k)] = acc / (2 * *lead);
    }
    UniPoly root(std::move(s));
    if (root * root != f) return std::nullopt;
    return root;
}

// ---------------------------------------------------------------- integer content

std::vector<Integer> clear_denominators(const UniPoly& f, Integer* multiplier) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.emplace_back(c.get_num() * (l / c.get_den()));
    if (multiplier) *multiplier = l;
    return out;
}

IntegerPoly to_primitive(const UniPoly& f) {
    if (f.is_zero()) return {{}, Rational(0)};
    Integer l;
    std::vector<Integer> v = clear_denominators(f, &l);
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0) g = -g;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    Rational scale(g, l);
    scale.canonicalize();
    return {std::move(v), scale};
}

Rational poly_eval(const UniPoly& f, const Rational& x) { return f.eval(x); }

// ---------------------------------------------------------------- resultants

namespace {

using ZPoly = std::vector<Integer>;  // lowest first, no trailing zeros

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer zcontent(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const int db = zdeg(b);
    const Integer& lb = b.back();
    int steps = zdeg(a) - db + 1;
    int done = 0;
    while (!a.empty() && zdeg(a) >= db) {
        Integer la = a.back();
        int shift = zdeg(a) - db;
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
        ztrim(a);
        ++done;
    }
    if (done < steps) {
        Integer k = integer_pow(lb, static_cast<unsigned long>(steps - done));
        for (auto& c : a) c *= k;
    }
    return a;
}

// Subresultant PRS resultant over Z (Cohen, Algorithm 3.3.7).
Integer subresultant(ZPoly A, ZPoly B) {
    if (A.empty() || B.empty()) return 0;
    Integer s = 1;
    if (zdeg(A) < zdeg(B)) {
        std::swap(A, B);
        if ((zdeg(A) % 2 == 1) && (zdeg(B) % 2 == 1)) s = -s;
    }
    if (zdeg(B) == 0) return integer_pow(B[0], static_cast<unsigned long>(zdeg(A)));
    Integer a = zcontent(A), b = zcontent(B);
    for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
    Integer t = integer_pow(a, static_cast<unsigned long>(zdeg(B))) *
                integer_pow(b, static_cast<unsigned long>(zdeg(A)));
    Integer g = 1, h = 1;
    while (true) {
        const int delta = zdeg(A) - zdeg(B);
        if ((zdeg(A) % 2 == 1) && (zdeg(B) % 2 == 1)) s = -s;
        ZPoly R = pseudo_remainder(A, B);
        A = std::move(B);
        if (R.empty()) return 0;
        Integer div = g * integer_pow(h, static_cast<unsigned long>(delta));
        for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
        B = std::move(R);
        g = A.back();
        // h <- h^(1-delta) g^delta
        if (delta == 0) {
            // h unchanged in value: h^1 * g^0
        } else {
            Integer num = integer_pow(g, static_cast<unsigned long>(delta));
            Integer den = integer_pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (zdeg(B) == 0) break;
    }
    // h <- h^(1 - deg A) lc(B)^deg A
    const int dA = zdeg(A);
    Integer num = integer_pow(B.back(), static_cast<unsigned long>(dA));
    Integer res;
    if (dA >= 1) {
        Integer den = integer_pow(h, static_cast<unsigned long>(dA - 1));
        mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        res = num * h;
    }
    return s * t * res;
}

}  // namespace

Rational poly_resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) domain_error("poly_resultant: zero polynomial input");
    IntegerPoly F = to_primitive(f), G = to_primitive(g);
    Rational r = rational_pow(F.scale, g.degree()) * rational_pow(G.scale, f.degree());
    return r * Rational(subresultant(F.coeffs, G.coeffs));
}

Rational poly_discriminant(const UniPoly& f) {
    const int n = f.degree();
    if (n < 1) domain_error("poly_discriminant: constant polynomial");
    if (n == 1) return Rational(1);
    Rational r = poly_resultant(f, f.derivative()) / f.lc();
    long e = static_cast<long>(n) * (n - 1) / 2;
    return (e % 2 == 0) ? r : Rational(-r);
}

// ---------------------------------------------------------------- real roots

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
    std::vector<UniPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

int sign_changes_at(const std::vector<UniPoly>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_changes_at_infinity(const std::vector<UniPoly>& seq, bool positive) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(p.lc());
        if (!positive && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_real_roots(const UniPoly& f) {
    if (f.is_zero()) domain_error("count_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    auto seq = sturm_sequence(squarefree_kernel(f));
    return sign_changes_at_infinity(seq, false) - sign_changes_at_infinity(seq, true);
}

int count_real_roots_in(const UniPoly& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) domain_error("count_real_roots_in: zero polynomial");
    if (f.degree() == 0 || !(a < b)) return 0;
    auto seq = sturm_sequence(squarefree_kernel(f));
    return sign_changes_at(seq, a) - sign_changes_at(seq, b);
}

std::vector<Integer> integer_roots(const UniPoly& f) {
    if (f.is_zero()) domain_error("integer_roots: zero polynomial");
    std::vector<Integer> out;
    if (f.degree() == 0) return out;
    const UniPoly k = squarefree_kernel(f);
    auto seq = sturm_sequence(k);
    // Cauchy bound on |root|.
    Rational bound = 0;
    for (const auto& c : k.coeffs()) bound = std::max(bound, Rational(abs(c)));
    Integer hi = bound.get_num() / bound.get_den() + 2;
    Integer lo = -hi;
    // Isolate over integer intervals (lo, hi].
    std::vector<std::pair<Integer, Integer>> stack{{lo, hi}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = sign_changes_at(seq, Rational(a)) - sign_changes_at(seq, Rational(b));
        if (n == 0) continue;
        if (b - a == 1) {
            if (k.eval(Rational(b)) == 0) out.push_back(b);
            continue;
        }
        Integer mid = (a + b) / 2;
        if (mid <= a) mid = a + 1;
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- NestedPoly

NestedPoly::NestedPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

NestedPoly NestedPoly::constant(const UniPoly& c) { return NestedPoly(std::vector<UniPoly>{c}); }

void NestedPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly NestedPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return UniPoly();
    return c_[static_cast<std::size_t>(i)];
}

UniPoly NestedPoly::eval_outer(const Rational& t) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

UniPoly NestedPoly::eval_inner(const Rational& u) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.eval(u));
    return UniPoly(std::move(v));
}

Rational NestedPoly::eval(const Rational& t, const Rational& u) const { return eval_inner(u).eval(t); }

NestedPoly NestedPoly::operator-() const {
    NestedPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

NestedPoly& NestedPoly::operator+=(const NestedPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

NestedPoly& NestedPoly::operator-=(const NestedPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

NestedPoly& NestedPoly::operator*=(const NestedPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<UniPoly> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

NestedPoly& NestedPoly::operator*=(const UniPoly& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

NestedPoly compose(const UniPoly& f, const NestedPoly& p) {
    NestedPoly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc *= p;
        acc += NestedPoly::constant(UniPoly::constant(*it));
    }
    return acc;
}

}  // namespace qfrep
