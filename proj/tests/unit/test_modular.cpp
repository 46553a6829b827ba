#include "oracle.hpp"

#include "modzeta/constants.hpp"
#include "modzeta/modular.hpp"

using namespace modzeta;

namespace {

// prod (1 - q^n) taken literally, times q^{1/24}.
Complex eta_product(const UhpPoint& z, int terms)
{
    Real pi = oracle::mpfr_const_pi_raw();
    Complex two_pi_i(Real(0), 2 * pi);
    Complex q = exp(two_pi_i * z.z());
    Complex prod(1), qn = q;
    for (int n = 1; n <= terms; ++n) {
        prod = prod * (1 - qn);
        qn = qn * q;
    }
    return exp(two_pi_i * z.z() / 24) * prod;
}

}  // namespace

TEST_SUITE("modular")
{
    TEST_CASE("upper half-plane points reject the real axis")
    {
        PrecisionScope s(PrecisionCtx(20));
        CHECK_THROWS_AS(UhpPoint(Real(0), Real(0)), DomainError);
        CHECK_THROWS_AS(UhpPoint(Real(1), Real(-1)), DomainError);
    }

    TEST_CASE("admissible lines and the boundary corner")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        Real half = Rational(1, 2).to_real();
        CHECK(UhpPoint(Real(0), Real(1)).admissible_h2(c));
        CHECK(UhpPoint(Real(0), half).admissible_h2(c));
        CHECK_FALSE(UhpPoint(Real(0), Real("0.4")).admissible_h2(c));
        CHECK_FALSE(UhpPoint(Real("0.3"), Real(1)).admissible_h2(c));
        UhpPoint corner(half, 1 / sqrt(Real(2)));
        CHECK(corner.admissible_h2(c));
        CHECK(corner.on_boundary(c));
        CHECK_FALSE(UhpPoint(half, Real(1)).on_boundary(c));
    }

    TEST_CASE("eta at i from the Gamma function")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        Real pi = oracle::mpfr_const_pi_raw();
        Real g = oracle::mpfr_gamma_of(Real(1) / 4);
        Complex expect = g / (2 * pow(pi, Real(3) / 4));
        CHECK_DIGITS(eta(UhpPoint(Real(0), Real(1)), c), expect, 55);
    }

    TEST_CASE("eta agrees with the literal product")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        UhpPoint z(Real("0.21"), Real("0.83"));
        CHECK_DIGITS(eta(z, c), eta_product(z, 400), 35);
    }

    TEST_CASE("lambda at i is one half")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        CHECK_DIGITS(lambda_fn(UhpPoint(Real(0), Real(1)), c), Complex(Rational(1, 2).to_real()), 55);
    }

    TEST_CASE("Eisenstein values at i")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        UhpPoint i(Real(0), Real(1));
        Real pi = oracle::mpfr_const_pi_raw();
        Real g = oracle::mpfr_gamma_of(Real(1) / 4);
        CHECK(abs(eisenstein(i, 6, c)).log10_abs() < -55);
        CHECK(abs(eisenstein(i, 2, c)).log10_abs() < -55);
        CHECK_DIGITS(eisenstein(i, 4, c), 3 * pow(g, 8L) / pow(2 * pi, 6L), 55);
    }

    TEST_CASE("q-expansions agree with eta quotients away from the imaginary axis")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        for (auto [re, im] : {std::pair{"0.13", "0.9"}, {"-0.41", "1.3"}, {"0.5", "0.7"}}) {
            UhpPoint z{Real(re), Real(im)};
            CHECK_DIGITS(eisenstein(z, 4, c), eisenstein4_eta_quotient(z, c), 42);
            CHECK_DIGITS(eisenstein(z, 6, c), eisenstein6_eta_quotient(z, c), 42);
        }
    }

    TEST_CASE("alpha4 at z relates to lambda at 2z")
    {
        PrecisionCtx c(40);
        PrecisionScope s(c);
        UhpPoint z(Real("0.1"), Real("0.8"));
        CHECK_DIGITS(alpha4(z, c), lambda_fn(UhpPoint(z.z() * 2), c), 45);
    }
}
