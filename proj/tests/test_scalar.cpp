#include "helpers.hpp"

using namespace dq;
using namespace dq::test;

TEST_CASE("rationals are parsed in lowest terms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-5")) == "-5");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("gaussian rational arithmetic is exact") {
    const GaussianRational a(1, 1), b(1, -1);
    CHECK(a * b == GaussianRational(2));
    CHECK(GaussianRational(q(1, 3)) + GaussianRational(q(1, 6)) == GaussianRational(q(1, 2)));
    CHECK(GaussianRational(0, 1).inverse() == GaussianRational(0, -1));
    CHECK(a / a == GaussianRational(1));
    CHECK(to_string(a / GaussianRational(3)) == "1/3 + 1/3*i");
    CHECK_THROWS(GaussianRational().inverse());
}

TEST_CASE("powers of i cycle with period four") {
    CHECK(GaussianRational::i_pow(0) == GaussianRational(1));
    CHECK(GaussianRational::i_pow(1) == GaussianRational(0, 1));
    CHECK(GaussianRational::i_pow(2) == GaussianRational(-1));
    CHECK(GaussianRational::i_pow(-1) == GaussianRational(0, -1));
    CHECK(GaussianRational::i_pow(7) == GaussianRational::i_pow(-1));
}

TEST_CASE("hbar exponents add and cancel") {
    CHECK((hbar(-1) * hbar(1)).is_one());
    CHECK(hbar(2).pow(-2) == hbar(-4));
    CHECK((Coefficient::hbar_over_i() * Coefficient::i()) == hbar(1));
}

TEST_CASE("coefficients store no zero entries") {
    const Coefficient a = hbar(1) + rat(1);
    const Coefficient zero = a - a;
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK((a - hbar(1)).terms().size() == 1);
}

TEST_CASE("only single-term coefficients are invertible") {
    const Coefficient u(GaussianRational(2, 2), 3);
    CHECK(u.is_unit());
    CHECK((u * u.inverse()).is_one());
    CHECK_THROWS_AS((hbar(1) + rat(1)).inverse(), std::domain_error);
}

TEST_CASE("conjugation leaves hbar alone") {
    const Coefficient a(GaussianRational(1, 2), -1);
    CHECK(a.conj() == Coefficient(GaussianRational(1, -2), -1));
    CHECK(Coefficient::hbar_over_i().conj() == -Coefficient::hbar_over_i());
}
