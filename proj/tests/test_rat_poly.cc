#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edrg/rat_poly.hh>

using edrg::RatPoly;
using edrg::Rational;

TEST_CASE("normalisation and degree")
{
    CHECK(! RatPoly().degree());
    CHECK(RatPoly({Rational(0), Rational(0)}).is_zero());
    CHECK(RatPoly({Rational(1), Rational(2), Rational(0)}).degree() == 1u);
    CHECK(RatPoly::monomial(3, Rational(2)).coeff(3) == Rational(2));
    CHECK(RatPoly::monomial(3, Rational(0)).is_zero());
    CHECK(RatPoly::x().coeff(7) == Rational(0));
}

TEST_CASE("arithmetic")
{
    const RatPoly x = RatPoly::x();
    const RatPoly p = x * x - RatPoly(Rational(3));
    CHECK(p == RatPoly({Rational(-3), Rational(0), Rational(1)}));
    CHECK((p - p).is_zero());
    CHECK((x + RatPoly(Rational(1))) * (x - RatPoly(Rational(1))) == x * x - RatPoly(Rational(1)));
    CHECK(p / Rational(2) == RatPoly({Rational(-3, 2), Rational(0), Rational(1, 2)}));
    CHECK(-p == RatPoly(Rational(-1)) * p);
    CHECK(Rational(0) * p == RatPoly());
    CHECK_THROWS(p / Rational(0));
}

TEST_CASE("evaluation")
{
    const RatPoly p({Rational(0), Rational(-7, 6), Rational(0), Rational(1, 6)}); // (x^3-7x)/6
    CHECK(p(Rational(3)) == Rational(1));
    CHECK(p(Rational(-1)) == Rational(1));
    CHECK(p(Rational(1, 2)) == Rational(-9, 16));
    CHECK(RatPoly()(Rational(5)) == Rational(0));
}

TEST_CASE("text grammar")
{
    CHECK(RatPoly().to_string() == "0");
    CHECK(RatPoly(Rational(1)).to_string() == "(1)");
    CHECK(RatPoly({Rational(-1), Rational(1)}).to_string() == "(-1) + (1)*x");
    CHECK(RatPoly({Rational(0), Rational(-7, 2), Rational(0), Rational(1, 2)}).to_string()
            == "(-7/2)*x + (1/2)*x^3");
}
