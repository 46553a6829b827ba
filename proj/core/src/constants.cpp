#include "modzeta/constants.hpp"

#include "cache.hpp"
#include "modzeta/arith.hpp"

namespace modzeta {

Real const_pi(const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_zeta(long n, const PrecisionCtx& ctx)
{
    if (n < 2)
        throw DomainError("const_zeta: n must be at least 2");
    static detail::ValueCache<std::pair<long, mpfr_prec_t>> cache;
    auto key = std::make_pair(n, ctx.bits());
    if (auto hit = cache.find(key))
        return *hit;
    PrecisionScope scope(ctx);
    Real value = hurwitz_zeta(Real(n), Real(1), ctx);
    cache.store(key, value);
    return value;
}

Real const_catalan(const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real r;
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    return r;
}

Real const_euler_gamma(const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real r;
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace modzeta
