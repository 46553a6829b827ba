#include <cmath>
#include <cstdlib>

#include "modzeta/constants.hpp"
#include "modzeta/series.hpp"

namespace modzeta {

namespace {

Real agm_real(Real a, Real g, const PrecisionCtx& ctx)
{
    Real eps = pow10(-ctx.working_digits() - 2);
    for (int i = 0; i < 200; ++i) {
        if (abs(a - g) <= eps * a)
            break;
        Real an = ldexp(a + g, -1);
        g = sqrt(a * g);
        a = std::move(an);
    }
    return a;
}

Complex agm_complex(Complex a, Complex g, const PrecisionCtx& ctx)
{
    Real eps = pow10(-ctx.working_digits() - 2);
    for (int i = 0; i < 200; ++i) {
        if (abs(a - g) <= eps * abs(a))
            break;
        Complex an = (a + g) / 2;
        Complex gn = sqrt(a * g);
        // Right choice: keep the new geometric mean nearer the arithmetic one.
        if (abs(an - gn) > abs(an + gn))
            gn = -gn;
        a = std::move(an);
        g = std::move(gn);
    }
    return a;
}

}  // namespace

Real ell_k_comp(const Real& u, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (!(u > 0))
        throw DomainError("ell_k: t on the branch cut [1, inf)");
    return const_pi(ctx) / ldexp(agm_real(Real(1), sqrt(u), ctx), 1);
}

Complex ell_k_comp(const Complex& u, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (u.im.is_zero())
        return Complex(ell_k_comp(u.re, ctx));
    return Complex(const_pi(ctx)) / (agm_complex(Complex(Real(1)), sqrt(u), ctx) * 2);
}

Real ell_k(const Real& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (!(t < 1))
        throw DomainError("ell_k: t on the branch cut [1, inf)");
    return ell_k_comp(1 - t, ctx);
}

Complex ell_k(const Complex& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (t.im.is_zero() && !(t.re < 1))
        throw DomainError("ell_k: t on the branch cut [1, inf)");
    return ell_k_comp(1 - t, ctx);
}

namespace {

// log Gamma(1 + eps) for |eps| < 1/2 from the zeta-value expansion
// -gamma eps + sum_{k>=2} (-1)^k zeta(k) eps^k / k, with the zeta(k) = 1 part
// summed in closed form as eps - log(1 + eps).
Real log_gamma_1p(const Real& eps, const PrecisionCtx& ctx)
{
    if (eps.is_zero())
        return Real(0);
    Real result = -const_euler_gamma(ctx) * eps + eps - log1p(eps);
    Real tol = pow10(-ctx.working_digits() - 2);
    Real e_pow = sqr(eps);
    for (long k = 2; k < 100000; ++k) {
        Real term = (const_zeta(k, ctx) - 1) * e_pow / k;
        if (k % 2 == 1)
            term = -term;
        result += term;
        if (abs(term) < tol)
            break;
        e_pow *= eps;
    }
    return result;
}

}  // namespace

Complex legendre_p_def(const Real& nu, const Real& eps, const Complex& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (!(abs(eps) < Real(0.5)))
        throw DomainError("legendre_p_def: |eps| must be below 1/2");
    Real at = abs(t);
    if (!(at < Real(0.97)))
        throw DomainError("legendre_p_def: |t| too close to 1 for the hypergeometric series");

    Complex sum(Real(1));
    Complex term(Real(1));
    Real tol = pow10(-ctx.working_digits() - 2);
    Real tail_factor = 2 / (1 - at);
    Real c = 1 + eps;
    const long burn_in = std::abs(nu.to_long()) + 4;
    for (long n = 0; n < 10'000'000; ++n) {
        Real num = (n - nu) * (1 + nu + n);
        Real den = (c + n) * (n + 1);
        term *= t * (num / den);
        sum += term;
        if (n > burn_in && abs(term) * tail_factor < tol)
            break;
    }
    Complex result = sum * exp(-log_gamma_1p(eps, ctx));
    if (!eps.is_zero()) {
        if (t.re.is_zero() && t.im.is_zero())
            return eps.sign() > 0 ? Complex() : throw DomainError("legendre_p_def: singular at t = 0");
        Complex ratio = t / (1 - t);
        result *= exp(log(ratio) * ldexp(eps, -1));
    }
    return result;
}

Complex legendre_p_nu2(const Complex& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    WeightSpec w{{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}};
    return binom2_series(t / 16, w, ctx) * -8;
}

}  // namespace modzeta
