#include "modzeta/quad.hpp"

#include <cmath>

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/series.hpp"

namespace modzeta {

namespace {

double log_node_weight(double t)
{
    const double s = M_PI_2 * std::sinh(t);
    const double log_cosh_s = s > 20 ? s - std::log(2.0) : std::log(std::cosh(s));
    return std::log(M_PI_4 * std::cosh(t)) - 2.0 * log_cosh_s;
}

// Abscissa range beyond which node weights drop below the working precision.
double node_range(const PrecisionCtx& ctx)
{
    const double target = -(ctx.working_digits() + 10) * std::log(10.0);
    double t = 1.0;
    while (log_node_weight(t) > target)
        t += 0.05;
    return t;
}

Real magnitude(const Real& v) { return abs(v); }
Real magnitude(const Complex& v) { return abs(v); }

// Tanh-sinh on [0, 1]; g receives x and 1 - x.
template <class T, class G>
QuadResult<T> unit_tanh_sinh(const G& g, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const double t_max = node_range(ctx);
    const Real half_pi = ldexp(const_pi(ctx), -1);
    const Real tol = pow10(-(ctx.digits + 3));

    auto node_sum = [&](const Real& h, long k_step, long k_first) {
        T acc{};
        const long k_max = static_cast<long>(std::ceil(t_max / h.to_double()));
        for (long k = k_first; k <= k_max; k += k_step) {
            for (int side = (k == 0 ? 1 : -1); side <= 1; side += 2) {
                Real tk = h * (side * k);
                Real s = half_pi * sinh(tk);
                Real e = exp(ldexp(s, 1));
                Real x = e / (1 + e);
                Real xc = 1 / (1 + e);
                Real w = half_pi * cosh(tk) / ldexp(sqr(cosh(s)), 1);
                if (x.is_zero() || xc.is_zero() || w.is_zero())
                    continue;
                acc += g(x, xc) * w;
            }
        }
        return acc;
    };

    QuadResult<T> result;
    Real h(1);
    T sum = node_sum(h, 1, 0) * h;
    T prev = sum;
    for (int level = 1; level <= kMaxQuadLevel; ++level) {
        h = ldexp(h, -1);
        sum = prev * Real("0.5") + node_sum(h, 2, 1) * h;
        result.err_estimate = magnitude(sum - prev);
        result.levels_used = level;
        Real scale = max(Real(1), magnitude(sum));
        if (level >= 3 && result.err_estimate < tol * scale) {
            result.converged = true;
            break;
        }
        prev = sum;
    }
    result.value = sum;
    return result;
}

}  // namespace

QuadResult<Real> tanh_sinh(const RealIntegrand& f, const Real& a, const Real& b, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real len = b - a;
    auto g = [&](const Real& x, const Real& xc) {
        Real from_a = len * x;
        Real to_b = len * xc;
        return f(a + from_a, from_a, to_b) * len;
    };
    return unit_tanh_sinh<Real>(g, ctx);
}

QuadResult<Complex> tanh_sinh(const PathIntegrand& f, const Complex& a, const Complex& b,
                              const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Complex len = b - a;
    auto g = [&](const Real& x, const Real& xc) {
        Complex from_a = len * x;
        Complex to_b = len * xc;
        return f(a + from_a, from_a, to_b) * len;
    };
    return unit_tanh_sinh<Complex>(g, ctx);
}

namespace {

void require_lemma_domain(const Complex& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real slack = pow10(-ctx.digits);
    if (abs(t * (1 - t) * 4) > 1 + slack || t.re > Real("0.5") + slack)
        throw DomainError("lemma_integral: need |4t(1-t)| <= 1 and Re t <= 1/2");
}

template <class T>
QuadResult<T> combine(QuadResult<T> a, const QuadResult<T>& b)
{
    a.value += b.value;
    a.err_estimate += b.err_estimate;
    a.levels_used = std::max(a.levels_used, b.levels_used);
    a.converged = a.converged && b.converged;
    return a;
}

}  // namespace

QuadResult<Complex> lemma_integral(LemmaIntegral which, const Complex& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    require_lemma_domain(t, ctx);
    const Real pi = const_pi(ctx);
    const Complex kt = ell_k(t, ctx);
    const Complex kpt = ell_k_comp(t, ctx);
    const Real two_over_pi = 2 / pi;

    // bracket(s) = K'(s) K(t) - K(s) K'(t), with s - 0 and 1 - s supplied exactly.
    auto k_pair = [&](const Complex& s, const Complex& one_minus_s) {
        return std::pair<Complex, Complex>(ell_k_comp(one_minus_s, ctx), ell_k_comp(s, ctx));
    };

    QuadResult<Complex> out;
    switch (which) {
    case LemmaIntegral::NU2: {
        if (t.re.is_zero() && t.im.is_zero())
            return {Complex(), Real(0), 0, true};
        auto f = [&](const Complex& s, const Complex& from_a, const Complex&) {
            auto [ks, kps] = k_pair(from_a, 1 - s);
            return ks * kt * (kps * kt - ks * kpt);
        };
        out = tanh_sinh(PathIntegrand(f), Complex(), t, ctx);
        out.value *= pow(two_over_pi, 3);
        break;
    }
    case LemmaIntegral::EPS2: {
        auto f = [&](const Complex& s, const Complex&, const Complex&) {
            Complex one_minus = 1 - s;
            auto [ks, kps] = k_pair(s, one_minus);
            return ks * kt * (kps * kt - ks * kpt) / (s * one_minus);
        };
        Complex half(Real("0.5"));
        out = tanh_sinh(PathIntegrand(f), half, t, ctx);
        out.value *= pow(two_over_pi, 3);
        out.value += -sqr(kt) / 3 - sqr(kpt) + kt * kpt * const_catalan(ctx) * 16 / sqr(pi);
        break;
    }
    case LemmaIntegral::H3INT1: {
        if (t.re.is_zero() && t.im.is_zero())
            return {Complex(), Real(0), 0, true};
        auto f = [&](const Complex& s, const Complex& from_a, const Complex&) {
            auto [ks, kps] = k_pair(from_a, 1 - s);
            return (1 - s * 2) * sqr(ks) * sqr(kps * kt - ks * kpt);
        };
        out = tanh_sinh(PathIntegrand(f), Complex(), t, ctx);
        out.value *= pow(two_over_pi, 4);
        break;
    }
    case LemmaIntegral::H3INT2: {
        if (t.re.is_zero() && t.im.is_zero())
            return {Complex(), Real(0), 0, true};
        const Real quarter_pi_sq = sqr(pi) / 4;
        auto f = [&](const Complex& s, const Complex& from_a, const Complex&) {
            Complex one_minus = 1 - s;
            auto [ks, kps] = k_pair(from_a, one_minus);
            return (1 - s * 2) * 2 / (s * one_minus) * (sqr(ks) - quarter_pi_sq) * sqr(kps * kt - ks * kpt);
        };
        out = tanh_sinh(PathIntegrand(f), Complex(), t, ctx);
        out.value *= pow(two_over_pi, 4);
        break;
    }
    }
    return out;
}

QuadResult<Complex> h3mix_tail_integral(const Complex& t, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (t.im.is_zero())
        throw DomainError("h3mix_tail_integral: t must be off the real axis");
    const Real pi = const_pi(ctx);
    const Complex kt = ell_k(t, ctx);
    const Complex kpt = ell_k_comp(t, ctx);
    auto kernel = [&](const Complex& s) {
        Complex one_minus = 1 - s;
        Complex ks = ell_k_comp(one_minus, ctx);
        Complex kps = ell_k_comp(s, ctx);
        return (1 - s * 2) * 4 / (s * one_minus) * sqr(kps * kt - ks * kpt);
    };

    // Pieces split at Re s = 1, next to the branch point of K(sqrt s), then
    // s = c + u/(1-u) on [0, 1) for the rest of the ray.
    auto near = [&](const Complex& s, const Complex&, const Complex&) { return kernel(s); };
    QuadResult<Complex> first;
    Complex c(max(t.re, Real(1)) + 1, t.im);
    if (t.re < 1) {
        Complex mid(Real(1), t.im);
        first = combine(tanh_sinh(PathIntegrand(near), t, mid, ctx), tanh_sinh(PathIntegrand(near), mid, c, ctx));
    } else {
        first = tanh_sinh(PathIntegrand(near), t, c, ctx);
    }
    auto wrapped = [&](const Complex& u, const Complex&, const Complex& to_b) {
        Complex s(c.re + u.re / to_b.re, c.im);
        return kernel(s) / sqr(to_b.re);
    };
    QuadResult<Complex> second = tanh_sinh(PathIntegrand(wrapped), Complex(), Complex(1), ctx);
    QuadResult<Complex> out = combine(first, second);
    out.value *= -sqr(2 / pi);
    return out;
}

QuadResult<Real> zeta5_integral(const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    auto f = [&](const Real& t, const Real& from_a, const Real&) {
        return (1 - ldexp(t, 1)) * pow(ell_k_comp(from_a, ctx), 4);
    };
    QuadResult<Real> r = tanh_sinh(RealIntegrand(f), Real(0), Real(1), ctx);
    r.value = r.value * 8 / 93;
    r.err_estimate = r.err_estimate * 8 / 93;
    return r;
}

QuadResult<Real> zeta7_integral(const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    auto f = [&](const Real& t, const Real& from_a, const Real& to_b) {
        return (2 - 17 * t * to_b) * pow(ell_k_comp(from_a, ctx), 6);
    };
    QuadResult<Real> r = tanh_sinh(RealIntegrand(f), Real(0), Real(1), ctx);
    r.value = r.value * 32 / 5715;
    r.err_estimate = r.err_estimate * 32 / 5715;
    return r;
}

QuadResult<Real> lminus4_4_integral(const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    const Real pi = const_pi(ctx);
    auto f = [&](const Real& t, const Real& from_a, const Real&) {
        Real one_minus = 1 - t;
        Real k = ell_k_comp(one_minus, ctx);
        Real kp = ell_k_comp(from_a, ctx);
        // K^6 ((K'/K)^2 - 1)^3 = (K'^2 - K^2)^3
        return (2 - 17 * t * one_minus) * pow(sqr(kp) - sqr(k), 3);
    };
    QuadResult<Real> r = tanh_sinh(RealIntegrand(f), Real(0), Real("0.5"), ctx);
    Real pi4 = pow(pi, 4);
    Real pi7 = pow(pi, 7);
    Real rhs = 200025 * const_zeta(7, ctx) / (2176 * pi7) - 70 * r.value / (136 * pi7);
    r.value = rhs * 136 * pi4 / 105;
    r.err_estimate = r.err_estimate * 70 * pi4 / (105 * pi7);
    return r;
}

}  // namespace modzeta
