#include "oracle.hpp"

#include "modzeta/eichler.hpp"
#include "modzeta/modular.hpp"

using namespace modzeta;

namespace {

// (c i / pi^w) (2 pi i)^k sum_N sigma_{-w}(N) N^k q^N with divisor sums formed term by term.
Complex eichler_divisor_sum(const UhpPoint& z, int order, long c, int w, int terms)
{
    Real pi = oracle::mpfr_const_pi_raw();
    Complex two_pi_i(Real(0), 2 * pi);
    Complex q = exp(two_pi_i * z.z());
    Complex qn = q, sum(0);
    for (long n = 1; n <= terms; ++n) {
        Real sigma(0);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0)
                sigma += 1 / pow(Real(d), long(w));
        Complex term = qn * sigma;
        for (int k = 0; k < order; ++k)
            term = term * two_pi_i * n;
        sum += term;
        qn = qn * q;
    }
    return Complex(Real(0), Real(c) / pow(pi, long(w))) * sum;
}

}  // namespace

TEST_SUITE("eichler")
{
    TEST_CASE("weight-4 Eichler integral and derivatives against divisor sums")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        UhpPoint z(Real("0.17"), Real("1.1"));
        for (int order = 0; order <= 2; ++order)
            CHECK_DIGITS(eichler4(z, order, c), eichler_divisor_sum(z, order, 60, 3, 40), 42);
    }

    TEST_CASE("weight-6 Eichler integral and derivatives against divisor sums")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        UhpPoint z(Real("-0.3"), Real("0.95"));
        for (int order = 0; order <= 3; ++order)
            CHECK_DIGITS(eichler6(z, order, c), eichler_divisor_sum(z, order, 378, 5, 45), 42);
    }

    TEST_CASE("first derivative matches a central difference")
    {
        PrecisionCtx c(30);
        PrecisionCtx fine(60);
        PrecisionScope s(fine);
        UhpPoint z(Real("0.05"), Real("0.9"));
        Real h = pow10(-15);
        Complex fp = eichler4(UhpPoint(z.re() + h, z.im()), 0, fine);
        Complex fm = eichler4(UhpPoint(z.re() - h, z.im()), 0, fine);
        Complex fd = (fp - fm) / (2 * h);
        CHECK_DIGITS(eichler4(z, 1, fine), fd, 25);
    }

    TEST_CASE("derivative order is range checked")
    {
        PrecisionCtx c(20);
        PrecisionScope s(c);
        UhpPoint z(Real(0), Real(1));
        CHECK_THROWS_AS(eichler4(z, 3, c), DomainError);
        CHECK_THROWS_AS(eichler6(z, 4, c), DomainError);
        CHECK_THROWS_AS(eichler6(z, -1, c), DomainError);
    }
}
