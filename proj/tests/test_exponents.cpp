#include <doctest.h>

#include "puiseux/exponents.hpp"

#include <random>

using namespace puiseux;

TEST_CASE("rational exponent arithmetic") {
    Exponent a(Rational(3, 4));
    CHECK(a + Exponent() == a);
    CHECK(Exponent(1) + Exponent(Rational(3, 2)) == Exponent(Rational(5, 2)));
    CHECK(Exponent(Rational(5, 2)).scaled(Rational(2, 5)) == Exponent(1));
    CHECK(-Exponent(Rational(3, 4)) == Exponent(Rational(-3, 4)));
}

TEST_CASE("basis constant cancellation") {
    auto basis = RealBasis::create();
    Exponent e = e_const(basis);
    Exponent pi = pi_const(basis);
    // (4e/5) + (pi - 4e/5) == pi, i.e. (0,4/5,0) + (0,-4/5,1) == (0,0,1)
    Exponent a = e.scaled(Rational(4, 5));
    Exponent b = pi - a;
    CHECK(a + b == pi);
    CHECK((a + b).coeffs() == pi.coeffs());
    // scale(pi, 1/3) has vector (0, 0, 1/3) over (1, e, pi)
    Exponent third = pi.scaled(Rational(1, 3));
    CHECK(third.coeffs().size() == 3);
    CHECK(third.coeffs()[2] == Rational(1, 3));
}

TEST_CASE("comparison via interval refinement") {
    auto basis = RealBasis::create();
    Exponent e = e_const(basis);
    Exponent pi = pi_const(basis);
    // 0.8*e ~ 2.17 > 1
    CHECK(Exponent::cmp(e.scaled(Rational(4, 5)), Exponent(1)) > 0);
    CHECK(Exponent::cmp(pi, pi) == 0);
    CHECK(Exponent::cmp(Exponent(Rational(5, 2)), pi) < 0);
    CHECK(e < pi);
    CHECK(pi < Exponent(Rational(16, 5)));
    CHECK(sqrt_const(basis, Rational(2)) > Exponent(Rational(7, 5)));
    CHECK(sqrt_const(basis, Rational(2)) < Exponent(Rational(3, 2)));
}

TEST_CASE("sqrt canonicalisation") {
    auto basis = RealBasis::create();
    CHECK(sqrt_const(basis, Rational(4, 9)) == Exponent(Rational(2, 3)));
    // sqrt(8) = 2*sqrt(2)
    Exponent s8 = sqrt_const(basis, Rational(8));
    Exponent s2 = sqrt_const(basis, Rational(2));
    CHECK(s8 == s2.scaled(Rational(2)));
    // sqrt(1/2) = (1/2)*sqrt(2)
    CHECK(sqrt_const(basis, Rational(1, 2)) == s2.scaled(Rational(1, 2)));
}

TEST_CASE("mismatched bases are rejected") {
    auto b1 = RealBasis::create();
    auto b2 = RealBasis::create();
    Exponent x = e_const(b1), y = pi_const(b2);
    CHECK_THROWS_AS(x + y, BasisMismatchError);
    // rational exponents are portable across bases
    CHECK((Exponent(Rational(1, 2)) + x).coeffs().size() == 2);
}

TEST_CASE("cmp agrees with exact rational comparison") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 24);
    for (int i = 0; i < 10000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        int expect = a < b ? -1 : (a == b ? 0 : 1);
        CHECK(Exponent::cmp(Exponent(a), Exponent(b)) == expect);
    }
}

TEST_CASE("total order and group laws on random combinations") {
    auto basis = RealBasis::create();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    auto rand_exp = [&]() {
        Exponent x(Rational(num(rng), den(rng)));
        x = x + e_const(basis).scaled(Rational(num(rng), den(rng)));
        x = x + pi_const(basis).scaled(Rational(num(rng), den(rng)));
        return x;
    };
    for (int i = 0; i < 300; ++i) {
        Exponent a = rand_exp(), b = rand_exp(), c = rand_exp();
        // antisymmetry
        CHECK(Exponent::cmp(a, b) == -Exponent::cmp(b, a));
        // transitivity
        if (a <= b && b <= c) CHECK(a <= c);
        // commutativity / associativity / inverse
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + (-a) == Exponent());
        CHECK((-a) + a == Exponent());
    }
}

TEST_CASE("string rendering") {
    auto basis = RealBasis::create();
    CHECK(Exponent(Rational(5, 2)).str() == "5/2");
    CHECK(Exponent(Rational(-3, 4)).str() == "-3/4");
    CHECK(pi_const(basis).str() == "pi");
    CHECK(e_const(basis).scaled(Rational(4, 5)).str() == "4/5*e");
    CHECK((Exponent(1) + pi_const(basis).scaled(Rational(1, 2))).str() == "1 + 1/2*pi");
    CHECK(Exponent().str() == "0");
}

TEST_CASE("enclosure and ceil") {
    auto basis = RealBasis::create();
    Exponent pi = pi_const(basis);
    Interval iv = pi.enclose(Rational(1, 1000));
    CHECK(iv.lo > Rational(3141, 1000));
    CHECK(iv.hi < Rational(3142, 1000));
    CHECK(pi.to_double() == doctest::Approx(3.14159265358979).epsilon(1e-9));
    CHECK(Exponent(Rational(5, 2)).ceil_long() == 3);
    CHECK(Exponent(3).ceil_long() == 3);
    long c = pi.ceil_long();
    CHECK(c >= 4);
    CHECK(c <= 5);
}
