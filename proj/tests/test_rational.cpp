#include <doctest.h>

#include "qfrep/error.hpp"
#include "qfrep/rational.hpp"
#include "support.hpp"

using namespace qfrep;
using testsupport::Q;

TEST_CASE("parse and print rationals") {
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    for (const char* bad : {"", "1/0", "abc", "1/2/3", " 1", "1.5", "+", "5/-15"}) {
        CHECK_THROWS_AS(parse_rational(bad), Error);
        try {
            parse_rational(bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(Integer(8)) == 2);
    CHECK(squarefree_part(Integer(96)) == 6);
    CHECK(squarefree_part(Integer(-12)) == -3);
    CHECK(squarefree_part(Integer(1)) == 1);
    CHECK_THROWS_AS(squarefree_part(Integer(0)), Error);
}

TEST_CASE("squarefree part: d k^2 = n and d squarefree") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        long n = testsupport::rnd_int(rng, -100000, 100000);
        if (n == 0) continue;
        Integer d = squarefree_part(Integer(n));
        CHECK(Integer(n) % d == 0);
        Integer k2 = Integer(n) / d;
        CHECK(k2 > 0);
        CHECK(integer_sqrt_exact(k2).has_value());
        Integer ad = abs(d);
        for (long p = 2; p * p <= ad; ++p) CHECK(ad % (p * p) != 0);
    }
}

TEST_CASE("square classes") {
    CHECK(same_square_class(Rational(8), Rational(2)));
    CHECK_FALSE(same_square_class(Rational(-5), Rational(5)));
    CHECK(same_square_class(Q("9/4"), Rational(1)));
    CHECK(same_square_class(Q("3/4"), Rational(12)));
    CHECK_THROWS_AS(same_square_class(Rational(0), Rational(1)), Error);
}

TEST_CASE("rational squares") {
    CHECK(rational_is_square(Q("49/16")) == Q("7/4"));
    CHECK_FALSE(rational_is_square(Rational(2)).has_value());
    CHECK(rational_is_square(Rational(0)) == Rational(0));
    CHECK_FALSE(rational_is_square(Rational(-4)).has_value());
}

TEST_CASE("exact arithmetic round trips") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        Rational a = testsupport::rnd(rng, 1000000, 1000000, false), b = testsupport::rnd(rng, 1000000, 1000000);
        Rational s = a + b;
        CHECK(s - b == a);
        Rational p = a * b;
        CHECK(p / b == a);
        CHECK(gcd(a.get_num(), a.get_den()) == 1);
        CHECK(a.get_den() > 0);
    }
}

TEST_CASE("valuations and factorization") {
    CHECK(valuation(Q("48/5"), Integer(2)) == 4);
    CHECK(valuation(Q("48/25"), Integer(5)) == -2);
    CHECK_THROWS_AS(valuation(Rational(0), Integer(3)), Error);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Integer n(testsupport::rnd_int(rng, 2, 10000000));
        Integer prod(1);
        for (const auto& [p, e] : factor_integer(n)) {
            CHECK(is_probable_prime(p));
            prod *= integer_pow(p, e);
        }
        CHECK(prod == n);
    }
}
