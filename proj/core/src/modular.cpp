#include "modzeta/modular.hpp"

#include <cmath>

#include "modzeta/constants.hpp"
#include "qseries.hpp"

namespace modzeta {

UhpPoint::UhpPoint(Complex z) : z_(std::move(z))
{
    if (!(z_.im > 0))
        throw DomainError("point must lie in the upper half-plane");
}

UhpPoint::UhpPoint(const Real& re, const Real& im) : UhpPoint(Complex(re, im)) {}

bool UhpPoint::admissible_h2(const PrecisionCtx& ctx) const
{
    PrecisionScope scope(ctx);
    Real tol = pow10(-ctx.digits);
    Real half = ldexp(Real(1), -1);
    if (abs(z_.re) < tol)
        return z_.im >= half - tol;
    if (abs(z_.re - half) < tol)
        return z_.im >= sqrt(half) - tol;
    return false;
}

bool UhpPoint::on_boundary(const PrecisionCtx& ctx) const
{
    PrecisionScope scope(ctx);
    Real tol = pow10(-ctx.digits);
    Real half = ldexp(Real(1), -1);
    return abs(z_.re - half) < tol && abs(z_.im - sqrt(half)) < tol;
}

namespace {

double rate_of(const UhpPoint& z)
{
    return 2.0 * M_PI * z.im().to_double();
}

}  // namespace

Complex nome(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    return detail::nome_of(z.z());
}

Complex eta(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const double rate = rate_of(z);
    if (!(rate > 1e-6))
        throw DomainError("eta: point too close to the real axis");
    const Complex q = detail::nome_of(z.z());

    // Euler's pentagonal expansion of prod (1 - q^n); the tail beyond index k
    // is bounded by 2 r^{e(k+1)} / (1 - r) with e(k) = k(3k-1)/2.
    const double ln10 = std::log(10.0);
    const double target = ctx.working_digits() * ln10;
    const double slack = std::log(2.0) - std::log1p(-std::exp(-rate));
    Complex sum(Real(1));
    Complex q3 = q * sqr(q);
    Complex step = q;   // q^{3k-2}
    Complex pent(Real(1));
    Complex qk(Real(1));
    for (long k = 1;; ++k) {
        pent *= step;
        qk *= q;
        Complex pair = pent + pent * qk;
        if (k % 2 == 1)
            sum -= pair;
        else
            sum += pair;
        double next = static_cast<double>(k + 1) * (3.0 * (k + 1) - 1.0) / 2.0;
        if (next * rate - slack > target)
            break;
        step *= q3;
    }
    Real pi = const_pi(ctx);
    Complex pre = exp(Complex(-pi * z.im() / 12, pi * z.re() / 12));
    return pre * sum;
}

Complex alpha4(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Complex e1 = eta(z, ctx);
    Complex e2 = eta(UhpPoint(z.z() * 2), ctx);
    Complex e4 = eta(UhpPoint(z.z() * 4), ctx);
    Complex ratio = e1 * sqr(e4) / (e2 * sqr(e2));
    Complex r8 = sqr(sqr(sqr(ratio)));
    return r8 * 16;
}

Complex lambda_fn(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    return alpha4(UhpPoint(z.z() / 2), ctx);
}

Complex eisenstein(const UhpPoint& z, int weight, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const double rate = rate_of(z);
    const Complex q = detail::nome_of(z.z());
    switch (weight) {
    case 2: {
        Complex s = detail::lambert_sum(q, rate, 1, 0, std::log10(24.0), ctx);
        Real pi = const_pi(ctx);
        return Complex(1 - 3 / (pi * z.im())) - s * 24;
    }
    case 4:
        return 1 + detail::lambert_sum(q, rate, 3, 0, std::log10(240.0), ctx) * 240;
    case 6:
        return 1 - detail::lambert_sum(q, rate, 5, 0, std::log10(504.0), ctx) * 504;
    default:
        throw DomainError("eisenstein: weight must be 2, 4 or 6");
    }
}

Complex eisenstein4_eta_quotient(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Complex lam = lambda_fn(z, ctx);
    Complex e1 = eta(z, ctx);
    Complex e2 = eta(UhpPoint(z.z() * 2), ctx);
    Complex eh = eta(UhpPoint(z.z() / 2), ctx);
    Complex ratio = sqr(e1) / (e2 * eh);  // eta^40 / (..)^16 = ratio^16 * eta^8
    Complex r16 = pow(ratio, 16L);
    return r16 * pow(e1, 8L) * (1 - lam + sqr(lam));
}

Complex eisenstein6_eta_quotient(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Complex lam = lambda_fn(z, ctx);
    Complex e1 = eta(z, ctx);
    Complex e2 = eta(UhpPoint(z.z() * 2), ctx);
    Complex eh = eta(UhpPoint(z.z() / 2), ctx);
    Complex ratio = sqr(e1) / (e2 * eh);
    Complex r24 = pow(ratio, 24L);
    return r24 * pow(e1, 12L) * (1 + lam) * (2 - lam) * (1 - 2 * lam) / 2;
}

Complex r_half(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    UhpPoint z4(z.z() * 4);
    Complex e2 = eisenstein(z, 2, ctx);
    Complex e2_4 = eisenstein(z4, 2, ctx);
    Complex e4 = eisenstein(z, 4, ctx);
    Complex e4_4 = eisenstein(z4, 4, ctx);
    Complex d = e2_4 * 4 - e2;
    if (abs(d) < pow10(-ctx.digits / 2))
        throw DegeneratePointError("r_half: 4 E2(4z) - E2(z) vanishes at this point");
    Complex num = sqr(e2_4) * 16 - e4_4 * 16 - sqr(e2) + e4;
    return -num / (sqr(d) * 2);
}

}  // namespace modzeta
