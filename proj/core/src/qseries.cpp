#include "qseries.hpp"

#include <cmath>


namespace modzeta::detail {

long geometric_terms(double rate, int p, int e, double log10_c, int digits)
{
    if (!(rate > 1e-6))
        throw DomainError("q-series: point too close to the real axis");
    const double ln10 = std::log(10.0);
    const double r = std::exp(-rate);
    const double target = -static_cast<double>(digits) * ln10;
    const double base = log10_c * ln10 - e * std::log1p(-r);
    for (long n = 1; n < 50'000'000; ++n) {
        double m = static_cast<double>(n + 1);
        double ratio = (p > 0 ? std::pow((m + 1) / m, p) : 1.0) * r;
        if (ratio >= 1.0)
            continue;
        double log_tail = base + p * std::log(m) - rate * m - std::log1p(-ratio);
        if (log_tail < target)
            return n;
    }
    throw DomainError("q-series: too many terms required");
}

Complex nome_of(const Complex& z)
{
    Real two_pi;
    mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
    two_pi = ldexp(two_pi, 1);
    return exp(Complex(-two_pi * z.im, two_pi * z.re));
}

Real int_power(long n, int k)
{
    if (k == 0)
        return Real(1);
    unsigned long v = 1;
    bool fits = true;
    for (int i = 0; i < k; ++i) {
        if (v > (~0UL) / static_cast<unsigned long>(n)) {
            fits = false;
            break;
        }
        v *= static_cast<unsigned long>(n);
    }
    if (fits)
        return Real(v);
    return pow(Real(n), static_cast<long>(k));
}

Complex lambert_sum(const Complex& q, double rate, int power, int order, double log10_c,
                    const PrecisionCtx& ctx)
{
    static const double eulerian_at_one[] = {1.0, 1.0, 2.0, 6.0};
    if (order < 0 || order > 3)
        throw DomainError("lambert_sum: order out of range");
    const int p = power > 0 ? power : 0;
    long n_max = geometric_terms(rate, p, order + 1, log10_c + std::log10(eulerian_at_one[order]),
                                 ctx.working_digits());
    Complex sum;
    Complex u = q;
    for (long n = 1; n <= n_max; ++n) {
        if (n > 1)
            u *= q;
        Complex one_minus = 1 - u;
        Complex term = u;
        switch (order) {
        case 0:
            break;
        case 1:
            break;
        case 2:
            term *= 1 + u;
            break;
        case 3:
            term *= 1 + 4 * u + sqr(u);
            break;
        }
        Complex denom = pow(one_minus, static_cast<long>(order + 1));
        term /= denom;
        if (power > 0)
            term *= int_power(n, power);
        else if (power < 0)
            term /= int_power(n, -power);
        sum += term;
    }
    return sum;
}

}  // namespace modzeta::detail
