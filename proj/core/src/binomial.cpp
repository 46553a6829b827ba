#include <gmpxx.h>

#include <cmath>

#include "modzeta/series.hpp"
#include "weights.hpp"

namespace modzeta {

namespace {

double log10_abs(const Complex& z)
{
    return abs(z).log10_abs();
}

bool on_unit_rate(const Real& r)
{
    return abs(r - 1) < Real(1e-10);
}

Complex binom3_boundary(const Complex& x, const LinearFactor& factor, const WeightSpec& w,
                        const PrecisionCtx& ctx)
{
    const long n = cvz_degree(ctx);
    detail::WeightEval weight(w);
    detail::HarmonicState h;
    std::vector<Complex> terms;
    terms.reserve(n);
    Complex p(Real(1));
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            h.advance();
            Real step = detail::int_power_real(4 * k - 2, 3) / detail::int_power_real(k, 3);
            p *= x;
            p *= step;
        }
        terms.push_back(p * (factor.a * k + factor.b) * weight(h));
    }
    return cvz_alt_sum(terms, ctx);
}

}  // namespace

Complex binom3_series(const Complex& x, const LinearFactor& factor, const WeightSpec& w,
                      const PrecisionCtx& ctx, bool accelerate)
{
    PrecisionScope scope(ctx);
    Real rate = abs(x) * 64;
    if (on_unit_rate(rate)) {
        bool alternating = x.re.sign() < 0 && abs(x.im) < Real(1e-10) * abs(x.re);
        if (!alternating)
            throw DivergenceError("binom3_series: boundary point without alternation is unsupported");
        if (!accelerate)
            throw DivergenceError("binom3_series: |64x| = 1 requires accelerated summation");
        return binom3_boundary(x, factor, w, ctx);
    }
    if (rate > 1)
        throw DivergenceError("binom3_series: |64x| > 1");

    detail::WeightEval weight(w);
    detail::HarmonicState h;
    const double rate_d = rate.to_double();
    const double abs_a = abs(factor.a).to_double();
    const double abs_b = abs(factor.b).to_double();
    const double target = -static_cast<double>(ctx.working_digits());

    Complex sum = factor.b * weight(h);
    Complex p(Real(1));
    for (long k = 1;; ++k) {
        h.advance();
        Real step = detail::int_power_real(4 * k - 2, 3) / detail::int_power_real(k, 3);
        p *= x;
        p *= step;
        Complex term = p * (factor.a * k + factor.b) * weight(h);
        sum += term;
        if (p.re.is_zero() && p.im.is_zero())
            break;
        double sigma = rate_d * (1.0 + 1.0 / k) * (1.0 + 1.0 / k);
        if (sigma >= 1.0)
            continue;
        double tail = log10_abs(p) + std::log10(abs_a * k + abs_b + 1e-300) + std::log10(weight.bound(k))
                      + std::log10(sigma / (1.0 - sigma));
        if (tail < target && log10_abs(term) < target)
            break;
        if (k > 100'000'000)
            throw DivergenceError("binom3_series: too many terms");
    }
    return sum;
}

Complex binom3_term(const Complex& x, const LinearFactor& factor, const WeightSpec& w, long k,
                    const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    Real binom;
    mpfr_set_z(binom.raw(), c.get_mpz_t(), MPFR_RNDN);
    detail::WeightEval weight(w);
    return pow(x, k) * pow(binom, 3) * (factor.a * k + factor.b) * weight.direct(k);
}

Complex binom2_series(const Complex& x, const WeightSpec& w, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real rate = abs(x) * 16;
    if (!(rate < 1))
        throw DivergenceError("binom2_series: |16x| must be below 1");
    detail::WeightEval weight(w);
    detail::HarmonicState h;
    const double rate_d = rate.to_double();
    const double target = -static_cast<double>(ctx.working_digits());

    Complex sum = Complex(weight(h));
    Complex p(Real(1));
    for (long k = 1;; ++k) {
        h.advance();
        Real step = detail::int_power_real(4 * k - 2, 2) / detail::int_power_real(k, 2);
        p *= x;
        p *= step;
        Complex term = p * weight(h);
        sum += term;
        if (p.re.is_zero() && p.im.is_zero())
            break;
        double sigma = rate_d * (1.0 + 1.0 / k);
        if (sigma >= 1.0)
            continue;
        double tail = log10_abs(p) + std::log10(weight.bound(k)) + std::log10(sigma / (1.0 - sigma));
        if (tail < target && log10_abs(term) < target)
            break;
        if (k > 100'000'000)
            throw DivergenceError("binom2_series: too many terms");
    }
    return sum;
}

Real inv_binom2_series(const Real& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (!(t > 0) || !(t < 1))
        throw DomainError("inv_binom2_series: t must lie in (0, 1)");
    Real tail_factor = t / (1 - t);
    Real tol = pow10(-ctx.working_digits());
    Real term = t * 4;
    Real sum = term;
    for (long k = 1;; ++k) {
        term *= t * 4 * k * k;
        term /= sqr(Real(2 * k + 1));
        sum += term;
        if (abs(term) * tail_factor < tol)
            break;
    }
    return sum;
}

}  // namespace modzeta
