#include "modzeta/eichler.hpp"

#include <cmath>

#include "modzeta/constants.hpp"
#include "qseries.hpp"

namespace modzeta {

namespace {

// (c i / pi^w) (2 pi i)^order * sum n^{order-w} u A_order(u) / (1-u)^{order+1}
Complex eichler_series(const UhpPoint& z, int order, long c, int w, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const double rate = 2.0 * M_PI * z.im().to_double();
    const double log10_c = std::log10(static_cast<double>(c)) - w * std::log10(M_PI) +
                           order * std::log10(2.0 * M_PI);
    Complex q = detail::nome_of(z.z());
    Complex s = detail::lambert_sum(q, rate, order - w, order, log10_c, ctx);

    Real pi = const_pi(ctx);
    Complex factor(Real(0), Real(c) / pow(pi, static_cast<long>(w)));
    Complex two_pi_i(Real(0), ldexp(pi, 1));
    for (int k = 0; k < order; ++k)
        factor *= two_pi_i;
    return factor * s;
}

}  // namespace

Complex eichler4(const UhpPoint& z, int order, const PrecisionCtx& ctx)
{
    if (order < 0 || order > 2)
        throw DomainError("eichler4: derivative order must be 0, 1 or 2");
    return eichler_series(z, order, 60, 3, ctx);
}

Complex eichler6(const UhpPoint& z, int order, const PrecisionCtx& ctx)
{
    if (order < 0 || order > 3)
        throw DomainError("eichler6: derivative order must be 0..3");
    return eichler_series(z, order, 378, 5, ctx);
}

}  // namespace modzeta
