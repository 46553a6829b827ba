#include "oracle.hpp"

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"

using namespace modzeta;

namespace {

// Apery-type series 5/2 sum (-1)^(k-1) / (k^3 C(2k,k)).
Real zeta3_oracle(int digits)
{
    Real s(0), c(2);  // C(2k,k) at k = 1
    for (long k = 1; k < digits * 2; ++k) {
        Real term = 1 / (pow(Real(k), 3L) * c);
        s += (k % 2) ? term : -term;
        c = c * (2 * (2 * k + 1)) / (k + 1);
    }
    return s * 5 / 2;
}

// Catalan from (pi/8) log(2 + sqrt 3) + (3/8) sum 1/((2k+1)^2 C(2k,k)).
Real catalan_oracle(int digits)
{
    Real s(0), c(1);
    for (long k = 0; k < digits * 2; ++k) {
        s += 1 / (sqr(Real(2 * k + 1)) * c);
        c = c * (2 * (2 * k + 1)) / (k + 1);
    }
    Real pi = oracle::mpfr_const_pi_raw();
    return pi * log(2 + sqrt(Real(3))) / 8 + 3 * s / 8;
}

// Gauss-Legendre iteration.
Real pi_agm(int iterations)
{
    Real a(1), b = 1 / sqrt(Real(2)), t = Real(1) / 4, p(1);
    for (int i = 0; i < iterations; ++i) {
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        t -= p * sqr(a - an);
        a = an;
        p *= 2;
    }
    return sqr(a + b) / (4 * t);
}

// Euler-Maclaurin: gamma = H_N - log N - 1/(2N) + sum B_2k / (2k N^2k).
Real gamma_euler_maclaurin(long n, int terms)
{
    Real h(0);
    for (long j = 1; j <= n; ++j)
        h += Real(1) / j;
    Real g = h - log(Real(n)) - Real(1) / (2 * n);
    for (int k = 1; k <= terms; ++k) {
        Real b;
        mpq_class bk = bernoulli(2 * k);
        mpfr_set_q(b.raw(), bk.get_mpq_t(), MPFR_RNDN);
        g += b / (2 * k * pow(Real(n), long(2 * k)));
    }
    return g;
}

}  // namespace

TEST_SUITE("constants")
{
    TEST_CASE("pi agrees with MPFR")
    {
        PrecisionCtx c(100);
        PrecisionScope s(c);
        CHECK_DIGITS(const_pi(c), oracle::mpfr_const_pi_raw(), 105);
        CHECK_DIGITS(const_pi(c), pi_agm(10), 105);
    }

    TEST_CASE("zeta(3) from a binomial series")
    {
        PrecisionCtx c(60);
        PrecisionScope s(c);
        CHECK_DIGITS(const_zeta(3, c), zeta3_oracle(c.working_digits()), 60);
    }

    TEST_CASE("even zeta values are rational multiples of powers of pi")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        CHECK_DIGITS(const_zeta(2, c), sqr(pi) / 6, 55);
        CHECK_DIGITS(const_zeta(4, c), pow(pi, 4L) / 90, 55);
        CHECK_DIGITS(const_zeta(6, c), pow(pi, 6L) / 945, 55);
    }

    TEST_CASE("Catalan's constant")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        CHECK_DIGITS(const_catalan(c), catalan_oracle(c.working_digits()), 55);
    }

    TEST_CASE("odd zeta values against MPFR")
    {
        PrecisionCtx c(60);
        PrecisionScope s(c);
        for (unsigned long n : {3ul, 5ul, 7ul, 9ul}) {
            Real z;
            mpfr_zeta_ui(z.raw(), n, MPFR_RNDN);
            CHECK_DIGITS(const_zeta(long(n), c), z, 65);
        }
    }

    TEST_CASE("Euler gamma by Euler-Maclaurin")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        CHECK_DIGITS(const_euler_gamma(c), gamma_euler_maclaurin(100, 30), 55);
    }

    TEST_CASE("cached values follow the requested precision")
    {
        PrecisionCtx lo(20), hi(80);
        Real a, b;
        {
            PrecisionScope s(lo);
            a = const_zeta(5, lo);
        }
        {
            PrecisionScope s(hi);
            b = const_zeta(5, hi);
            CHECK(b.precision() >= bits_for_digits(95));
            CHECK(abs(a - b).log10_abs() < -30);
        }
    }
}
