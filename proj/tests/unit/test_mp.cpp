#include "oracle.hpp"

using namespace modzeta;

TEST_SUITE("mp")
{
    TEST_CASE("precision context maps digits to bits")
    {
        PrecisionCtx c(50);
        CHECK(c.working_digits() == 65);
        CHECK(c.bits() >= bits_for_digits(65));
        CHECK_THROWS_AS(PrecisionCtx(0), DomainError);
    }

    TEST_CASE("scope sets and restores working precision")
    {
        mpfr_prec_t outer = working_bits();
        {
            PrecisionScope s(PrecisionCtx(200));
            CHECK(working_bits() > outer);
            Real x(1);
            CHECK(x.precision() == working_bits());
        }
        CHECK(working_bits() == outer);
    }

    TEST_CASE("sqrt 2 squared and decimal round trip")
    {
        PrecisionScope s(PrecisionCtx(60));
        Real r = sqrt(Real(2));
        CHECK(abs(sqr(r) - 2).log10_abs() < -70);
        Real back(to_string(r, 70));
        CHECK(abs(back - r).log10_abs() < -68);
    }

    TEST_CASE("complex exp and log invert each other")
    {
        PrecisionScope s(PrecisionCtx(50));
        Complex z(Real("0.3"), Real("-1.7"));
        CHECK_DIGITS(log(exp(z)), z, 55);
        CHECK_DIGITS(sqr(sqrt(z)), z, 55);
        CHECK_DIGITS(mul_i(mul_i(z)), -z, 60);
        Complex w = exp(Complex(Real(0), oracle::mpfr_const_pi_raw()));
        CHECK_DIGITS(w, Complex(-1), 55);
    }

    TEST_CASE("rationals parse exactly")
    {
        PrecisionScope s(PrecisionCtx(40));
        Rational q = Rational::parse("-25/92");
        CHECK(q.num == -25);
        CHECK(q.den == 92);
        CHECK(Rational::parse("6/4").str() == "3/2");
        CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
        CHECK_THROWS_AS(Rational::parse("x"), DomainError);
        CHECK_DIGITS(Complex(q.to_real() * 92), Complex(-25), 50);
    }
}
