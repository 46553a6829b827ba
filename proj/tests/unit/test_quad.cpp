#include "oracle.hpp"

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/quad.hpp"
#include "modzeta/series.hpp"

using namespace modzeta;

TEST_SUITE("quad")
{
    TEST_CASE("smooth integrand on the unit interval")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        auto f = [](const Real& x, const Real&, const Real&) { return 4 / (1 + sqr(x)); };
        QuadResult<Real> r = tanh_sinh(f, Real(0), Real(1), c);
        CHECK(r.converged);
        CHECK_DIGITS(r.value, oracle::mpfr_const_pi_raw(), 50);
    }

    TEST_CASE("endpoint singularities use the endpoint distances")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        auto f = [](const Real&, const Real& from_a, const Real& to_b) {
            return log(from_a) / sqrt(to_b);
        };
        // int_0^1 log(x)/sqrt(1-x) dx = 4 log 2 - 4
        Real ln2;
        mpfr_const_log2(ln2.raw(), MPFR_RNDN);
        QuadResult<Real> r = tanh_sinh(f, Real(0), Real(1), c);
        CHECK_DIGITS(r.value, 4 * ln2 - 4, 40);
    }

    TEST_CASE("complex segment")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        auto f = [](const Complex& s, const Complex&, const Complex&) { return exp(s); };
        Complex a(Real(0)), b(Real(1), Real(2));
        QuadResult<Complex> r = tanh_sinh(f, a, b, c);
        CHECK_DIGITS(r.value, exp(b) - 1, 40);
    }

    TEST_CASE("Legendre function at nu = -1/2 is the elliptic integral")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        Complex t(Real("0.3"), Real("0.1"));
        CHECK_DIGITS(legendre_p_def(Rational(-1, 2).to_real(), Real(0), t, c), 2 * ell_k(t, c) / pi, 42);
    }

    TEST_CASE("order derivative at nu = -1/2 against elliptic integrals")
    {
        // d/d eps of P^{-eps}(1 - 2t) at eps = 0 is -(K(sqrt(1-t)) - (2 K(sqrt t)/pi)(gamma + 2 log 2))
        PrecisionCtx fine(60);
        PrecisionScope s(fine);
        Real t("0.3");
        Real pi = oracle::mpfr_const_pi_raw();
        Real h = pow10(-15);
        Real nu = Rational(-1, 2).to_real();
        Complex fd = (legendre_p_def(nu, h, Complex(t), fine) - legendre_p_def(nu, -h, Complex(t), fine)) / (2 * h);
        Real g, ln2;
        mpfr_const_euler(g.raw(), MPFR_RNDN);
        mpfr_const_log2(ln2.raw(), MPFR_RNDN);
        Real expect = -(ell_k(1 - t, fine) - 2 * ell_k(t, fine) / pi * (g + 2 * ln2));
        CHECK_DIGITS(fd, expect, 25);
    }

    TEST_CASE("second nu-derivative matches a finite difference")
    {
        PrecisionCtx c(30);
        PrecisionCtx fine(60);
        PrecisionScope s(fine);
        Complex t(Real("0.1"));
        Real h = pow10(-15);
        Real nu = Rational(-1, 2).to_real();
        Complex fd = (legendre_p_def(nu + h, Real(0), t, fine) - 2 * legendre_p_def(nu, Real(0), t, fine) +
                      legendre_p_def(nu - h, Real(0), t, fine)) /
                     sqr(h);
        CHECK_DIGITS(legendre_p_nu2(t, fine), fd, 25);
    }

    TEST_CASE("zeta(5) from its K-integral")
    {
        PrecisionCtx c(35);
        PrecisionScope s(c);
        QuadResult<Real> r = zeta5_integral(c);
        CHECK_DIGITS(r.value, const_zeta(5, c), 33);
    }

    TEST_CASE("L(-4,4) from its K^6 integral")
    {
        PrecisionCtx c(35);
        PrecisionScope s(c);
        QuadResult<Real> r = lminus4_4_integral(c);
        CHECK_DIGITS(r.value, dirichlet_l(-4, 4, c), 33);
    }
}
