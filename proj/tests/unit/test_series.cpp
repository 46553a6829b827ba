#include <gmpxx.h>

#include "oracle.hpp"

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/modular.hpp"
#include "modzeta/series.hpp"
#include "weights.hpp"

using namespace modzeta;

namespace {

mpq_class harmonic(long n, int r)
{
    mpq_class s = 0;
    for (long j = 1; j <= n; ++j) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), j, r);
        s += mpq_class(1, p);
    }
    return s;
}

mpq_class exact_basis(Basis b, long k)
{
    switch (b) {
    case Basis::ONE: return 1;
    case Basis::H1_K: return harmonic(k, 1);
    case Basis::H1_2K: return harmonic(2 * k, 1);
    case Basis::H2_K: return harmonic(k, 2);
    case Basis::H2_2K: return harmonic(2 * k, 2);
    case Basis::H3_K: return harmonic(k, 3);
    case Basis::H3_2K: return harmonic(2 * k, 3);
    case Basis::INVSQ_2K1: return mpq_class(1, (2 * k + 1) * (2 * k + 1));
    case Basis::H2_2K_TIMES_DH1: return harmonic(2 * k, 2) * (harmonic(2 * k, 1) - harmonic(k, 1));
    case Basis::H2_K_TIMES_DH1: return harmonic(k, 2) * (harmonic(2 * k, 1) - harmonic(k, 1));
    case Basis::H3MIX: return harmonic(k, 3) - 3 * harmonic(k, 2) * (harmonic(2 * k, 1) - harmonic(k, 1));
    }
    return 0;
}

Real to_real(const mpq_class& q)
{
    Real out;
    mpfr_set_q(out.raw(), q.get_mpq_t(), MPFR_RNDN);
    return out;
}

// K(k) = pi / (2 agm(1, sqrt(1 - k^2))) straight from MPFR.
Real agm_k(const Real& k2)
{
    Real pi = oracle::mpfr_const_pi_raw();
    Real kp = sqrt(1 - k2);
    Real a;
    mpfr_agm(a.raw(), Real(1).raw(), kp.raw(), MPFR_RNDN);
    return pi / (2 * a);
}

const Basis kAllBases[] = {Basis::ONE,   Basis::H1_K,  Basis::H1_2K,           Basis::H2_K,
                           Basis::H2_2K, Basis::H3_K,  Basis::H3_2K,           Basis::INVSQ_2K1,
                           Basis::H2_2K_TIMES_DH1,     Basis::H2_K_TIMES_DH1,  Basis::H3MIX};

}  // namespace

TEST_SUITE("series")
{
    TEST_CASE("running harmonic state matches exact rationals and direct sums")
    {
        PrecisionScope s(PrecisionCtx(50));
        detail::HarmonicState h;
        for (long k = 1; k <= 19; ++k) {
            h.advance();
            REQUIRE(h.k() == k);
            if (k != 1 && k != 7 && k != 19)
                continue;
            for (Basis b : kAllBases) {
                CAPTURE(basis_name(b));
                CAPTURE(k);
                Real exact = to_real(exact_basis(b, k));
                CHECK_DIGITS(h.basis(b), exact, 55);
                CHECK_DIGITS(detail::basis_direct(b, k), exact, 55);
            }
        }
    }

    TEST_CASE("Ramanujan-type sums for 1/pi")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        Complex r4096 = binom3_series(Complex(Real(1) / 4096), LinearFactor::of(42, 5), WeightSpec::one(), c);
        CHECK_DIGITS(r4096, 16 / pi, 55);
        Complex r256 = binom3_series(Complex(Real(1) / 256), LinearFactor::of(6, 1), WeightSpec::one(), c);
        CHECK_DIGITS(r256, 4 / pi, 55);
    }

    TEST_CASE("boundary rate converges only with acceleration")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        Complex v = binom3_series(Complex(Real(-1) / 64), LinearFactor::of(4, 1), WeightSpec::one(), c, true);
        CHECK_DIGITS(v, 2 / pi, 40);
        CHECK_THROWS(binom3_series(Complex(Real(-1) / 64), LinearFactor::of(4, 1), WeightSpec::one(), c, false));
    }

    TEST_CASE("series agrees with its terms summed one by one")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        Complex x(Real("0.0011"), Real("-0.0023"));
        WeightSpec w{{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}};
        LinearFactor f{Complex(Real("0.7"), Real("0.1")), Complex(Real(2))};
        Complex direct(0);
        for (long k = 0; k < 80; ++k)
            direct += binom3_term(x, f, w, k, c);
        CHECK_DIGITS(binom3_series(x, f, w, c), direct, 33);
    }

    TEST_CASE("central binomial squares sum to a complete elliptic integral")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        Real t("0.3");
        Real pi = oracle::mpfr_const_pi_raw();
        CHECK_DIGITS(binom2_series(Complex(t / 16), WeightSpec::one(), c), 2 * agm_k(t) / pi, 45);
        CHECK_DIGITS(Complex(ell_k(t, c)), agm_k(t), 45);
        CHECK_DIGITS(Complex(ell_k(Rational(1, 2).to_real(), c)),
                     sqr(oracle::mpfr_gamma_of(Real(1) / 4)) / (4 * sqrt(pi)), 45);
        CHECK_DIGITS(Complex(ell_k_comp(Real("1e-30"), c)), ell_k(1 - Real("1e-30"), c), 20);
    }

    TEST_CASE("inverse squared binomial series by direct summation")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        Real t("0.2");
        Real sum(0), term(1), c2(1);
        for (long k = 1; k < 400; ++k) {
            c2 = c2 * (2 * (2 * k - 1)) / k;
            term = pow(16 * t, k) / (sqr(Real(k)) * sqr(c2));
            sum += term;
        }
        CHECK_DIGITS(inv_binom2_series(t, c), sum, 35);
    }

    TEST_CASE("inverse squared binomial series at t = 1/2")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        CHECK_DIGITS(inv_binom2_series(Rational(1, 2).to_real(), c), Real("2.674576407298069187"), 17);
    }

    TEST_CASE("Epstein zeta on the imaginary axis from its Lambert expansion")
    {
        // y^2 sum' |m iy + n|^-4 = 2 zeta(4) y^2 + pi zeta(3)/y
        //   + (2 pi / y) sum 1/(m^3 (e^{2 pi m y} - 1)) + pi^2 sum 1/(m^2 sinh^2(pi m y))
        PrecisionCtx c(40);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        Real z3;
        mpfr_zeta_ui(z3.raw(), 3, MPFR_RNDN);
        for (const char* im : {"0.6", "1", "1.7"}) {
            Real y(im);
            UhpPoint z(Real(0), y);
            Complex s1 = hyp_lambert(z, {HypKind::EXPM1, Parity::ALL, 3}, c);
            Complex s2 = hyp_lambert(z, {HypKind::SINH_SQ, Parity::ALL, 2}, c);
            Complex lattice = Complex(pow(pi, 4L) / 45 * sqr(y) + pi * z3 / y) + s1 * (2 * pi / y) +
                              s2 * sqr(pi);
            CHECK_DIGITS(Complex(epstein2(z, c)), lattice * 45 / pow(pi, 4L), 42);
        }
    }

    TEST_CASE("CVZ sums the alternating harmonic series to log 2")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        std::vector<Real> terms;
        for (long k = 0; k < cvz_degree(c); ++k)
            terms.push_back(Real(k % 2 ? -1 : 1) / (k + 1));
        Real ln2;
        mpfr_const_log2(ln2.raw(), MPFR_RNDN);
        CHECK_DIGITS(cvz_alt_sum(terms, c), ln2, 55);
        std::vector<Real> bad(40, Real(1));
        CHECK_THROWS_AS(cvz_alt_sum(bad, c), DomainError);
    }

    TEST_CASE("hyperbolic Lambert sums against naive summation")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        UhpPoint z(Real(0), Real("0.9"));
        Real y = z.im();
        Real odd_cosh(0), all_sinh(0), half_odd(0);
        for (long m = 1; m < 80; ++m) {
            Real x = m * pi * y;
            if (m % 2)
                odd_cosh += 1 / (sqr(Real(m)) * sqr(cosh(x)));
            all_sinh += 1 / (sqr(Real(m)) * sqr(sinh(2 * x)));
            if (m % 2)
                half_odd += 1 / (sqr(Real(m)) * 2 * cosh(x));
        }
        CHECK_DIGITS(hyp_lambert(z, {HypKind::COSH_SQ, Parity::ODD, 2}, c), odd_cosh, 45);
        CHECK_DIGITS(hyp_lambert(z, {HypKind::SINH_SQ, Parity::ALL, 2, Rational(2)}, c), all_sinh, 45);
        CHECK_DIGITS(hyp_lambert(z, {HypKind::HALF_ODD_COSH, Parity::ODD, 2}, c), half_odd, 45);
    }

    TEST_CASE("eli against a doubly nested polylog sum")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        Complex x(Real("0.4"), Real("0.2")), y(Real("-0.6")), q(Real("0.1"), Real("0.05"));
        Complex sum(0), xj(1), qj(1);
        for (long j = 1; j < 90; ++j) {
            xj = xj * x;
            qj = qj * q;
            Complex u = y * qj, uk(1), li(0);
            for (long k = 1; k < 90; ++k) {
                uk = uk * u;
                li += uk / sqr(Real(k));
            }
            sum += xj * li / pow(Real(j), 3L);
        }
        CHECK_DIGITS(eli(3, 2, x, y, q, c), sum, 33);
    }
}
