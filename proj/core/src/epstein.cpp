#include <cmath>

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/eichler.hpp"
#include "qseries.hpp"

namespace modzeta {

Real epstein2(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const Real& y = z.im();
    const double rate = 2.0 * M_PI * y.to_double();
    Complex q = detail::nome_of(z.z());
    // sum 1/(n^3 (q^-n - 1)) and sum 1/(n^2 sinh^2(n pi z / i)) / 4
    Complex s3 = detail::lambert_sum(q, rate, -3, 0, 1.0, ctx);
    Complex s2 = detail::lambert_sum(q, rate, -2, 1, 2.0, ctx);
    Real pi = const_pi(ctx);
    Real pi3 = pow(pi, 3L);
    Real result = sqr(y) + 45 * const_zeta(3, ctx) / (pi3 * y);
    result += 90 * s3.re / (pi3 * y);
    result += 180 * s2.re / sqr(pi);
    return result;
}

Epstein3Value epstein3_detail(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const Real& y = z.im();
    Complex e0 = eichler6(z, 0, ctx);
    Complex e1 = eichler6(z, 1, ctx);
    Complex e2 = eichler6(z, 2, ctx);
    Complex braced = mul_i(e0) + e1 * y - mul_i(e2) * sqr(y) / 3;
    Real pi = const_pi(ctx);
    Real y2 = sqr(y);
    Real value = y2 * y + 2835 * const_zeta(5, ctx) / (8 * pow(pi, 5L) * y2);
    value -= 15 * braced.re / (8 * y2);
    return {value, 15 * braced.im / (8 * y2)};
}

Real epstein3(const UhpPoint& z, const PrecisionCtx& ctx)
{
    return epstein3_detail(z, ctx).value;
}

LatticeSum epstein_lattice(const UhpPoint& z, int s, long radius, const PrecisionCtx& ctx)
{
    if (s != 2 && s != 3)
        throw DomainError("epstein_lattice: s must be 2 or 3");
    if (radius < 10)
        throw DomainError("epstein_lattice: radius must be at least 10");
    PrecisionScope scope(ctx);
    const long double x = z.re().to_double();
    const long double y = z.im().to_double();

    // (m, n) and (-m, -n) contribute equally: take m > 0 with all n, plus
    // m = 0 with n > 0, then double.
    long double total = 0;
    for (long n = 1; n <= radius; ++n) {
        long double d = static_cast<long double>(n) * n;
        total += 1.0L / (s == 2 ? d * d : d * d * d);
    }
    for (long m = 1; m <= radius; ++m) {
        long double mx = m * x;
        long double my2 = (m * y) * (m * y);
        long double row = 0;
        for (long n = -radius; n <= radius; ++n) {
            long double re = mx + n;
            long double d = re * re + my2;
            row += 1.0L / (s == 2 ? d * d : d * d * d);
        }
        total += row;
    }
    total *= 2;
    long double ys = s == 2 ? y * y : y * y * y;
    long double zeta2s = s == 2 ? 1.0823232337111381915L : 1.0173430619844491397L;
    long double value = ys * total / (2 * zeta2s);

    // Continuum estimate of the omitted shell: the region outside the image of
    // the square has inner radius about radius * min(1, y) / |z|-ish; use the
    // lattice covolume y and the circle of radius R.
    double r_eff = static_cast<double>(radius) * std::min(1.0, static_cast<double>(y)) /
                   std::max(1.0, std::hypot(static_cast<double>(x), static_cast<double>(y)));
    double err = static_cast<double>(ys) * M_PI / (static_cast<double>(y) * (s - 1) *
                 std::pow(r_eff, 2.0 * s - 2.0) * static_cast<double>(zeta2s));
    Real v(static_cast<double>(value));
    return {v, err};
}

}  // namespace modzeta
