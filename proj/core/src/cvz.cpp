#include <cmath>

#include "modzeta/series.hpp"

namespace modzeta {

long cvz_degree(const PrecisionCtx& ctx)
{
    return static_cast<long>(std::ceil(1.4 * ctx.working_digits()));
}

namespace {

Real anti_alignment(const Real& a, const Real& b)
{
    return a * b;
}

Real anti_alignment(const Complex& a, const Complex& b)
{
    return a.re * b.re + a.im * b.im;
}

template <class T>
T cvz_impl(const std::vector<T>& terms, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const long n = static_cast<long>(terms.size());
    if (n == 0)
        return T();
    const long burn_in = std::min<long>(8, n / 4);
    for (long k = burn_in; k + 1 < n; ++k) {
        if (anti_alignment(terms[k], terms[k + 1]).sign() > 0)
            throw DomainError("cvz_alt_sum: terms do not alternate in sign");
    }

    Real d = pow(3 + sqrt(Real(8)), n);
    d = ldexp(d + 1 / d, -1);
    Real b(-1);
    Real c = -d;
    T s{};
    for (long k = 0; k < n; ++k) {
        c = b - c;
        // a_k = (-1)^k terms[k]
        if (k % 2 == 0)
            s += terms[k] * c;
        else
            s -= terms[k] * c;
        b *= 2 * (k + n) * (k - n);
        b /= (2 * k + 1) * (k + 1);
    }
    return s / d;
}

}  // namespace

Real cvz_alt_sum(const std::vector<Real>& terms, const PrecisionCtx& ctx)
{
    return cvz_impl(terms, ctx);
}

Complex cvz_alt_sum(const std::vector<Complex>& terms, const PrecisionCtx& ctx)
{
    return cvz_impl(terms, ctx);
}

}  // namespace modzeta
