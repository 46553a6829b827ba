#include <cmath>

#include "modzeta/constants.hpp"
#include "modzeta/series.hpp"
#include "qseries.hpp"

namespace modzeta {

namespace {

bool uses_half_power(HypKind kind)
{
    return kind == HypKind::COSH_1 || kind == HypKind::HALF_ODD_COSH;
}

Complex kernel_value(HypKind kind, const Complex& u, const Complex& v)
{
    switch (kind) {
    case HypKind::EXPM1:
    case HypKind::EXPM1_ALT:
        return u / (1 - u);
    case HypKind::COSH_SQ:
        return u * 4 / sqr(1 + u);
    case HypKind::SINH_SQ:
        return u * 4 / sqr(1 - u);
    case HypKind::COSH_1:
        return v * 2 / (1 + u);
    case HypKind::TANH_OVER_COSH_SQ:
        return u * (1 - u) * 4 / pow(1 + u, 3);
    case HypKind::COTH_OVER_SINH_SQ:
        return u * (1 + u) * 4 / pow(1 - u, 3);
    case HypKind::HALF_ODD_COSH:
        return v / (1 + u);
    }
    throw DomainError("hyp_lambert: unknown kernel");
}

}  // namespace

Complex hyp_lambert(const UhpPoint& z, const HypKernel& kernel, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (kernel.scale.num <= 0)
        throw DomainError("hyp_lambert: scale must be positive");
    if (kernel.a < 0)
        throw DomainError("hyp_lambert: exponent must be non-negative");
    Real pi = const_pi(ctx);
    Complex w = z.z() * kernel.scale.to_real();
    // R = e^{i pi w}, Q = R^2 = e^{2 pi i w}
    Complex r = exp(mul_i(w * pi));
    Complex q = sqr(r);

    const double y = w.im.to_double();
    const double half_rate = M_PI * y;
    const double rate = uses_half_power(kernel.kind) ? half_rate : 2.0 * half_rate;
    const double abs_q = std::exp(-2.0 * half_rate);
    const double denom_floor = std::max(1e-300, 1.0 - abs_q);
    const double log10_c = std::log10(8.0) - 3.0 * std::log10(denom_floor);
    const long m_max = detail::geometric_terms(rate, 0, 0, log10_c, ctx.working_digits());

    const bool odd = kernel.parity == Parity::ODD;
    const long step = odd ? 2 : 1;
    Complex q_step = odd ? sqr(q) : q;
    Complex r_step = odd ? q : r;
    Complex u = q;
    Complex v = r;
    Complex sum;
    long n = odd ? 0 : 1;
    for (long m = odd ? 1 : 1; m <= m_max; m += step, ++n) {
        if (m > 1) {
            u *= q_step;
            v *= r_step;
        }
        Complex term = kernel_value(kernel.kind, u, v);
        if (kernel.a > 0)
            term /= detail::int_power(m, kernel.a);
        if (kernel.kind == HypKind::EXPM1_ALT && n % 2 != 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Complex eli(int n, int m, const Complex& x, const Complex& y, const Complex& q, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (n < 0 || m < 0)
        throw DomainError("eli: indices must be non-negative");
    const double aq = abs(q).to_double();
    const double ax = abs(x).to_double();
    const double ay = abs(y).to_double();
    if (!(aq < 1.0) || !(ax * aq < 1.0) || !(ay * aq < 1.0))
        throw DivergenceError("eli: double series does not converge absolutely");
    if (ax == 0.0 || aq == 0.0 || ay == 0.0)
        return Complex();
    const double target = -static_cast<double>(ctx.working_digits()) * std::log(10.0);
    const double outer_rate = ax * aq;

    Complex sum;
    Complex xj(Real(1));
    Complex qj(Real(1));
    for (long j = 1;; ++j) {
        xj *= x;
        qj *= q;
        Complex w = y * qj;
        const double aw = ay * std::pow(aq, static_cast<double>(j));
        // Li_m(w) by its defining series
        Complex li;
        Complex wk(Real(1));
        for (long k = 1;; ++k) {
            wk *= w;
            li += m > 0 ? wk / detail::int_power(k, m) : wk;
            double log_tail = k * std::log(aw) - std::log1p(-aw);
            if (log_tail < target - 2.0)
                break;
        }
        Complex term = xj * li;
        if (n > 0)
            term /= detail::int_power(j, n);
        sum += term;
        double log_outer = std::log(aw) + j * std::log(ax) - std::log1p(-aw) - std::log1p(-outer_rate);
        if (log_outer < target - 2.0)
            break;
    }
    return sum;
}

}  // namespace modzeta
