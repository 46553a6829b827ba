#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/eichler.hpp"
#include "modzeta/verify.hpp"

namespace modzeta {

namespace {

void require_admissible(const UhpPoint& z, const PrecisionCtx& ctx, const char* who)
{
    if (!z.admissible_h2(ctx))
        throw DomainError(std::string(who) + ": point outside the admissible lines");
}

UhpPoint shifted(const UhpPoint& z)
{
    return UhpPoint(z.re() + Rational(1, 2).to_real(), z.im());
}

UhpPoint scaled(const UhpPoint& z, long m)
{
    return UhpPoint(z.re() * m, z.im() * m);
}

struct TheoremSetup {
    Complex alpha;
    Complex x;
    Complex denom;
    bool accelerate;
};

TheoremSetup setup(const UhpPoint& z, const PrecisionCtx& ctx)
{
    TheoremSetup s;
    s.alpha = alpha4(z, ctx);
    s.x = s.alpha * (1 - s.alpha) / 16;
    Complex p = ell_k(s.alpha, ctx) * 2 / const_pi(ctx);
    s.denom = sqr(p);
    s.accelerate = z.on_boundary(ctx);
    return s;
}

WeightSpec h2_mixed()
{
    return {{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}};
}

WeightSpec h3_mixed()
{
    return {{Rational(1), Basis::H3_2K}, {Rational(-1, 8), Basis::H3_K}};
}

// pi^2 i [8 E4(z+1/2) - E4(2z)] / (120 y) and pi^2 i [E4(z+1/2) - 2 E4(2z)] / (15 y)
struct Eichler4Parts {
    Complex first;
    Complex second;
};

Eichler4Parts eichler4_parts(const UhpPoint& z, const PrecisionCtx& ctx)
{
    Complex a = eichler4(shifted(z), 0, ctx);
    Complex b = eichler4(scaled(z, 2), 0, ctx);
    Real pi2 = sqr(const_pi(ctx));
    const Real& y = z.im();
    return {mul_i(8 * a - b) * pi2 / (120 * y), mul_i(a - 2 * b) * pi2 / (15 * y)};
}

}  // namespace

LinearFactor theorem_factor(const UhpPoint& z, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Complex alpha = alpha4(z, ctx);
    const Real& y = z.im();
    return {(1 - 2 * alpha) * 2 / y, r_half(z, ctx) / y};
}

QRatios q_ratios(const UhpPoint& z, const PrecisionCtx& ctx)
{
    require_admissible(z, ctx, "q_ratios");
    PrecisionScope scope(ctx);
    TheoremSetup s = setup(z, ctx);
    LinearFactor one = LinearFactor::of(0, 1);
    QRatios q;
    q.q1_lhs = binom3_series(s.x, one, h2_mixed(), ctx, s.accelerate) / s.denom;
    q.q2_lhs = binom3_series(s.x, one, {{Rational(1), Basis::H2_K}}, ctx, s.accelerate) / s.denom;

    Real pi = const_pi(ctx);
    Real pi2 = sqr(pi);
    Real z3 = const_zeta(3, ctx);
    const Real& y = z.im();
    Real e_half = epstein2(shifted(z), ctx);
    Real e_two = epstein2(scaled(z, 2), ctx);
    Eichler4Parts parts = eichler4_parts(z, ctx);

    q.q1_rhs = Complex(7 * z3 / (4 * pi * y) - pi2 * (4 * e_half - e_two) / 90) - parts.first;
    q.q2_rhs = Complex(-2 * pi2 * sqr(y) / 3 - 2 * z3 / (pi * y) - 2 * pi2 * (e_half - 4 * e_two) / 45) -
               parts.second;
    return q;
}

RLinear r_linear(const UhpPoint& z, const PrecisionCtx& ctx)
{
    require_admissible(z, ctx, "r_linear");
    PrecisionScope scope(ctx);
    TheoremSetup s = setup(z, ctx);
    LinearFactor factor = theorem_factor(z, ctx);
    QRatios q = q_ratios(z, ctx);
    RLinear r;
    r.r1_lhs = binom3_series(s.x, factor, h2_mixed(), ctx, s.accelerate);
    r.r2_lhs = binom3_series(s.x, factor, {{Rational(1), Basis::H2_K}}, ctx, s.accelerate);

    Real pi = const_pi(ctx);
    const Real& y = z.im();
    Complex a = eichler4(shifted(z), 2, ctx);
    Complex b = eichler4(scaled(z, 2), 2, ctx);
    Real py2 = pi * sqr(y);
    r.r1_rhs = q.q1_rhs / py2 - mul_i(2 * a - b) * pi / (30 * y);
    r.r2_rhs = q.q2_rhs / py2 - mul_i(a - 8 * b) * pi / (15 * y);
    return r;
}

Complex s_r(const UhpPoint& z, const Rational& r, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    Real pi = const_pi(ctx);
    Real pi2 = sqr(pi);
    Real z3 = const_zeta(3, ctx);
    const Real& y = z.im();
    Eichler4Parts parts = eichler4_parts(z, ctx);
    Complex head = Complex(7 * z3 / (4 * pi * y)) - parts.first;
    Complex tail = Complex(2 * pi2 * sqr(y) / 3 + 2 * z3 / (pi * y)) + parts.second;
    return head + tail * r.to_real();
}

Complex t_r(const UhpPoint& z, const Rational& r, const PrecisionCtx& ctx)
{
    require_admissible(z, ctx, "t_r");
    PrecisionScope scope(ctx);
    TheoremSetup s = setup(z, ctx);
    LinearFactor factor = theorem_factor(z, ctx);
    WeightSpec w = h2_mixed();
    w.add(Rational(-r.num, r.den), Basis::H2_K);
    return binom3_series(s.x, factor, w, ctx, s.accelerate);
}

H3Values h3_ratios(const UhpPoint& z, const PrecisionCtx& ctx)
{
    require_admissible(z, ctx, "h3_ratios");
    PrecisionScope scope(ctx);
    TheoremSetup s = setup(z, ctx);
    LinearFactor one = LinearFactor::of(0, 1);
    H3Values h;
    h.lhs1 = binom3_series(s.x, one, h3_mixed(), ctx, s.accelerate) / s.denom;
    h.lhs2 = binom3_series(s.x, one, {{Rational(1), Basis::H3_K}}, ctx, s.accelerate) / s.denom;

    Real pi3 = pow(const_pi(ctx), 3L);
    Complex e6_half = eichler6(shifted(z), 2, ctx);
    Complex e6_two = eichler6(scaled(z, 2), 2, ctx);
    Complex e4_one = eichler4(z, 0, ctx);
    Complex e4_four = eichler4(scaled(z, 4), 0, ctx);
    h.rhs1 = mul_i(e6_two - 8 * e6_half) * pi3 / 1512;
    h.rhs2 = mul_i(e6_half - 8 * e6_two) * pi3 / 189 - mul_i(4 * e4_one - e4_four) * pi3 / 15;
    return h;
}

namespace {

struct H3LinearRhs {
    Complex first;
    Complex second_no_epstein;
    Real epstein_part;
};

H3LinearRhs h3_linear_rhs(const UhpPoint& z, const PrecisionCtx& ctx)
{
    Real pi = const_pi(ctx);
    Real pi2 = sqr(pi);
    const Real& y = z.im();
    Real y2 = sqr(y);
    UhpPoint zh = shifted(z);
    UhpPoint z2 = scaled(z, 2);
    Complex d2_half = eichler6(zh, 2, ctx);
    Complex d2_two = eichler6(z2, 2, ctx);
    Complex d3_half = eichler6(zh, 3, ctx);
    Complex d3_two = eichler6(z2, 3, ctx);

    H3LinearRhs out;
    out.first = mul_i(d2_two - 8 * d2_half) * pi2 / (1512 * y2) + (d3_two - 4 * d3_half) * pi2 / (756 * y);
    out.second_no_epstein = Complex(8 * pi2 * y / 3 - 6 * const_zeta(3, ctx) / (pi * y2)) +
                            mul_i(d2_half - 8 * d2_two) * pi2 / (189 * y2) +
                            (d3_half - 16 * d3_two) * pi2 / (189 * y);
    // E(4z,2) - E(z,2) rearranged through the four-term Epstein relation so
    // that only z + 1/2, 2z and 4z enter.
    Real diff = epstein2(zh, ctx) - 9 * epstein2(z2, ctx) / 2 + 2 * epstein2(scaled(z, 4), ctx);
    out.epstein_part = -8 * pi2 * diff / (45 * y);
    return out;
}

}  // namespace

H3Values h3_linear(const UhpPoint& z, const PrecisionCtx& ctx)
{
    require_admissible(z, ctx, "h3_linear");
    PrecisionScope scope(ctx);
    TheoremSetup s = setup(z, ctx);
    LinearFactor factor = theorem_factor(z, ctx);
    H3Values h;
    h.lhs1 = binom3_series(s.x, factor, h3_mixed(), ctx, s.accelerate);
    h.lhs2 = binom3_series(s.x, factor, {{Rational(1), Basis::H3_K}}, ctx, s.accelerate);
    H3LinearRhs rhs = h3_linear_rhs(z, ctx);
    h.rhs1 = rhs.first;
    h.rhs2 = rhs.second_no_epstein + rhs.epstein_part;
    return h;
}

Complex u_check(const UhpPoint& z, const Rational& r, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    H3LinearRhs rhs = h3_linear_rhs(z, ctx);
    return rhs.first + rhs.second_no_epstein * r.to_real();
}

}  // namespace modzeta
