#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/eichler.hpp"
#include "modzeta/quad.hpp"
#include "modzeta/verify.hpp"

namespace modzeta {

int tolerance_digits(Tolerance t, int digits)
{
    switch (t) {
    case Tolerance::FULL: return digits - 5;
    case Tolerance::BOUNDARY: return std::min(digits - 5, 30);
    case Tolerance::HALF: return digits / 2;
    case Tolerance::LATTICE: return 6;
    }
    return digits - 5;
}

std::string tolerance_name(Tolerance t)
{
    switch (t) {
    case Tolerance::FULL: return "full";
    case Tolerance::BOUNDARY: return "boundary";
    case Tolerance::HALF: return "half";
    case Tolerance::LATTICE: return "lattice";
    }
    return "full";
}

namespace {

using Ctx = PrecisionCtx;
using PointFn = std::function<UhpPoint()>;

struct NamedPoint {
    std::string label;
    PointFn make;
};

Real half() { return Rational(1, 2).to_real(); }
Real root(long n) { return sqrt(Real(n)); }
Real pi_(const Ctx& c) { return const_pi(c); }
Real zeta_(long n, const Ctx& c) { return const_zeta(n, c); }
Real catalan_(const Ctx& c) { return const_catalan(c); }
Real l_(long d, long s, const Ctx& c) { return dirichlet_l(d, s, c); }

UhpPoint at(const UhpPoint& z, long scale, bool shift = false)
{
    Real re = z.re() * scale;
    if (shift)
        re += half();
    return UhpPoint(re, z.im() * scale);
}

UhpPoint inverted(const UhpPoint& z)
{
    return UhpPoint(-inv(z.z()));
}

NamedPoint imaginary(std::string label, std::function<Real()> im)
{
    return {std::move(label), [im] { return UhpPoint(Real(0), im()); }};
}

NamedPoint on_half_line(std::string label, std::function<Real()> im)
{
    return {std::move(label), [im] { return UhpPoint(half(), im()); }};
}

NamedPoint decimal_point(const std::string& re, const std::string& im)
{
    std::string label = re == "0" ? im + "i" : re + "+" + im + "i";
    return {label, [re, im] { return UhpPoint(Real(re), Real(im)); }};
}

const NamedPoint kSqrt3Half = imaginary("sqrt(3)i/2", [] { return root(3) / 2; });
const NamedPoint kSqrt7Half = imaginary("sqrt(7)i/2", [] { return root(7) / 2; });
const NamedPoint kHalfCorner = on_half_line("1/2+i/sqrt(2)", [] { return sqrt(half()); });
const NamedPoint kHalfPlusI = on_half_line("1/2+i", [] { return Real(1); });

Complex b3(const Real& x, const LinearFactor& f, const WeightSpec& w, const Ctx& c, bool accelerate = false)
{
    return binom3_series(Complex(x), f, w, c, accelerate);
}

Real rate(long num, long den) { return Rational(num, den).to_real(); }

WeightSpec h2_pair(Rational c)
{
    return {{Rational(1), Basis::H2_2K}, {Rational(-c.num, c.den), Basis::H2_K}};
}

WeightSpec h3_pair(Rational c)
{
    return {{Rational(1), Basis::H3_2K}, {Rational(-c.num, c.den), Basis::H3_K}};
}

Complex zero(const Ctx&) { return Complex(); }

class Builder {
public:
    explicit Builder(std::string suite) : suite_(std::move(suite)) {}

    void add(const std::string& id, std::string description, Evaluator lhs, Evaluator rhs, std::string anchor,
             std::string independence, Tolerance tol = Tolerance::FULL)
    {
        records_.push_back({suite_ + "/" + id, suite_, std::move(description), std::move(lhs), std::move(rhs),
                            std::move(anchor), std::move(independence), tol});
    }

    std::vector<IdentityRecord> take() { return std::move(records_); }

private:
    std::string suite_;
    std::vector<IdentityRecord> records_;
};

const char* kSeriesVsConst = "lhs: series; rhs: constants, dirichlet_l";

std::vector<IdentityRecord> classical()
{
    Builder b("ramanujan-classical");
    const char* anchor = "classical rational central-binomial-cube series for 1/pi";
    b.add("rate-m64", "sum C(2k,k)^3 (4k+1) (-1/64)^k = 2/pi",
          [](const Ctx& c) { return b3(rate(-1, 64), LinearFactor::of(4, 1), WeightSpec::one(), c, true); },
          [](const Ctx& c) { return Complex(2 / pi_(c)); }, anchor, kSeriesVsConst, Tolerance::BOUNDARY);
    b.add("rate-256", "sum C(2k,k)^3 (6k+1) / 256^k = 4/pi",
          [](const Ctx& c) { return b3(rate(1, 256), LinearFactor::of(6, 1), WeightSpec::one(), c); },
          [](const Ctx& c) { return Complex(4 / pi_(c)); }, anchor, kSeriesVsConst);
    b.add("rate-m512", "sum C(2k,k)^3 (6k+1) (-1/512)^k = 2 sqrt(2)/pi",
          [](const Ctx& c) { return b3(rate(-1, 512), LinearFactor::of(6, 1), WeightSpec::one(), c); },
          [](const Ctx& c) { return Complex(2 * root(2) / pi_(c)); }, anchor, kSeriesVsConst);
    b.add("rate-4096", "sum C(2k,k)^3 (42k+5) / 4096^k = 16/pi",
          [](const Ctx& c) { return b3(rate(1, 4096), LinearFactor::of(42, 5), WeightSpec::one(), c); },
          [](const Ctx& c) { return Complex(16 / pi_(c)); }, anchor, kSeriesVsConst);
    return b.take();
}

std::vector<IdentityRecord> h2_variants()
{
    Builder b("h2-variants");
    const char* anchor = "weight-2 harmonic twists of the classical series";
    b.add("rate-m64", "sum C(2k,k)^3 [H2(2k) - H2(k)/2] (4k+1) (-1/64)^k = -pi/12",
          [](const Ctx& c) { return b3(rate(-1, 64), LinearFactor::of(4, 1), h2_pair({1, 2}), c, true); },
          [](const Ctx& c) { return Complex(-pi_(c) / 12); }, anchor, kSeriesVsConst, Tolerance::BOUNDARY);
    b.add("rate-256", "sum C(2k,k)^3 [H2(2k) - 5 H2(k)/16] (6k+1) / 256^k = pi/12",
          [](const Ctx& c) { return b3(rate(1, 256), LinearFactor::of(6, 1), h2_pair({5, 16}), c); },
          [](const Ctx& c) { return Complex(pi_(c) / 12); }, anchor, kSeriesVsConst);
    b.add("rate-m512", "sum C(2k,k)^3 [H2(2k) - 5 H2(k)/16] (6k+1) (-1/512)^k = -sqrt(2) pi/48",
          [](const Ctx& c) { return b3(rate(-1, 512), LinearFactor::of(6, 1), h2_pair({5, 16}), c); },
          [](const Ctx& c) { return Complex(-root(2) * pi_(c) / 48); }, anchor, kSeriesVsConst);
    b.add("rate-4096", "sum C(2k,k)^3 [H2(2k) - 25 H2(k)/92] (42k+5) / 4096^k = 2 pi/69",
          [](const Ctx& c) { return b3(rate(1, 4096), LinearFactor::of(42, 5), h2_pair({25, 92}), c); },
          [](const Ctx& c) { return Complex(2 * pi_(c) / 69); }, anchor, kSeriesVsConst);
    return b.take();
}

// sum C(2k,k)^3 [H2(2k) - c H2(k) + constant] x^k, expected to vanish.
Evaluator folded_h2(Real (*x)(), Rational c, std::function<Real(const Ctx&)> constant, bool accelerate)
{
    return [=](const Ctx& ctx) {
        PrecisionScope scope(ctx);
        Real xv = x();
        LinearFactor one = LinearFactor::of(0, 1);
        return b3(xv, one, h2_pair(c), ctx, accelerate) +
               b3(xv, one, WeightSpec::one(), ctx, accelerate) * constant(ctx);
    };
}

std::vector<IdentityRecord> sun_h2()
{
    Builder b("sun-h2");
    const char* anchor = "weight-2 harmonic series with a folded L-value constant";
    const char* indep = "lhs: series, dirichlet_l, constants; rhs: literal 0";
    b.add("rate-m64", "sum C(2k,k)^3 [H2(2k) - H2(k)/2 + 2 L-8(2) - 5 pi^2/24] (-1/64)^k = 0",
          folded_h2([] { return rate(-1, 64); }, {1, 2},
                    [](const Ctx& c) { return 2 * l_(-8, 2, c) - 5 * sqr(pi_(c)) / 24; }, true),
          zero, anchor, indep, Tolerance::BOUNDARY);
    b.add("rate-256", "sum C(2k,k)^3 [H2(2k) - 5 H2(k)/16 + (135 L-3(2) - 11 pi^2)/96] / 256^k = 0",
          folded_h2([] { return rate(1, 256); }, {5, 16},
                    [](const Ctx& c) { return (135 * l_(-3, 2, c) - 11 * sqr(pi_(c))) / 96; }, false),
          zero, anchor, indep);
    b.add("rate-m512", "sum C(2k,k)^3 [H2(2k) - 5 H2(k)/16 + (120 L-4(2) - 11 pi^2)/96] (-1/512)^k = 0",
          folded_h2([] { return rate(-1, 512); }, {5, 16},
                    [](const Ctx& c) { return (120 * l_(-4, 2, c) - 11 * sqr(pi_(c))) / 96; }, false),
          zero, anchor, indep);
    b.add("rate-4096", "sum C(2k,k)^3 [H2(2k) - 25 H2(k)/92 + (735 L-7(2) - 86 pi^2)/1104] / 4096^k = 0",
          folded_h2([] { return rate(1, 4096); }, {25, 92},
                    [](const Ctx& c) { return (735 * l_(-7, 2, c) - 86 * sqr(pi_(c))) / 1104; }, false),
          zero, anchor, indep);
    return b.take();
}

std::vector<IdentityRecord> h3_family()
{
    Builder b("h3");
    const char* anchor = "weight-3 harmonic series evaluated by zeta(3)/pi and L-values";
    b.add("rate-m64", "sum C(2k,k)^3 H3(2k) (4k+1) (-1/64)^k = 15 zeta(3)/(4 pi) - 2G",
          [](const Ctx& c) {
              return b3(rate(-1, 64), LinearFactor::of(4, 1), {{Rational(1), Basis::H3_2K}}, c, true);
          },
          [](const Ctx& c) { return Complex(15 * zeta_(3, c) / (4 * pi_(c)) - 2 * catalan_(c)); }, anchor,
          kSeriesVsConst, Tolerance::BOUNDARY);
    b.add("rate-256", "sum C(2k,k)^3 [H3(2k) - 7 H3(k)/64] (6k+1) / 256^k = 25 zeta(3)/(8 pi) - G",
          [](const Ctx& c) { return b3(rate(1, 256), LinearFactor::of(6, 1), h3_pair({7, 64}), c); },
          [](const Ctx& c) { return Complex(25 * zeta_(3, c) / (8 * pi_(c)) - catalan_(c)); }, anchor,
          kSeriesVsConst);
    b.add("rate-m512", "sum C(2k,k)^3 [H3(2k) - 7 H3(k)/64] (6k+1) (-1/512)^k = 57 zeta(3)/(16 sqrt(2) pi) - L-8(2)",
          [](const Ctx& c) { return b3(rate(-1, 512), LinearFactor::of(6, 1), h3_pair({7, 64}), c); },
          [](const Ctx& c) {
              return Complex(57 * zeta_(3, c) / (16 * root(2) * pi_(c)) - l_(-8, 2, c));
          },
          anchor, kSeriesVsConst);
    b.add("rate-4096", "sum C(2k,k)^3 [H3(2k) - 43 H3(k)/352] (42k+5) / 4096^k = 555 zeta(3)/(77 pi) - 32G/11",
          [](const Ctx& c) { return b3(rate(1, 4096), LinearFactor::of(42, 5), h3_pair({43, 352}), c); },
          [](const Ctx& c) { return Complex(555 * zeta_(3, c) / (77 * pi_(c)) - 32 * catalan_(c) / 11); },
          anchor, kSeriesVsConst);
    b.add("rate-4096-odd-squares",
          "sum C(2k,k)^3 [(42k+5) H3(k) - 352/(2k+1)^2] / 4096^k = (32/7)(335 zeta(3)/pi - 224G)",
          [](const Ctx& c) {
              Real x = rate(1, 4096);
              return b3(x, LinearFactor::of(42, 5), {{Rational(1), Basis::H3_K}}, c) +
                     b3(x, LinearFactor::of(0, 1), {{Rational(-352), Basis::INVSQ_2K1}}, c);
          },
          [](const Ctx& c) {
              return Complex(32 * (335 * zeta_(3, c) / pi_(c) - 224 * catalan_(c)) / 7);
          },
          anchor, kSeriesVsConst);
    b.add("rate-4096-mixed",
          "sum C(2k,k)^3 {(42k+5)[17 H3(2k) - 2 H3(k)] - 27/(2k+1)^2} / 4096^k = 240 zeta(3)/pi - 128G",
          [](const Ctx& c) {
              Real x = rate(1, 4096);
              return b3(x, LinearFactor::of(42, 5), {{Rational(17), Basis::H3_2K}, {Rational(-2), Basis::H3_K}}, c) +
                     b3(x, LinearFactor::of(0, 1), {{Rational(-27), Basis::INVSQ_2K1}}, c);
          },
          [](const Ctx& c) { return Complex(240 * zeta_(3, c) / pi_(c) - 128 * catalan_(c)); }, anchor,
          kSeriesVsConst);
    b.add("ratio-256",
          "sum C(2k,k)^3 [H3(2k) - 7 H3(k)/64]/256^k / sum C(2k,k)^3/256^k = pi^3/(32 sqrt3) - 7 zeta(3)/16 - "
          "pi^3 i [4 E4(sqrt(3)i/2) - E4(2 sqrt(3)i)]/960",
          [](const Ctx& c) {
              Real x = rate(1, 256);
              LinearFactor one = LinearFactor::of(0, 1);
              return b3(x, one, h3_pair({7, 64}), c) / b3(x, one, WeightSpec::one(), c);
          },
          [](const Ctx& c) {
              UhpPoint z = kSqrt3Half.make();
              Real pi3 = pow(pi_(c), 3L);
              Complex e = 4 * eichler4(z, 0, c) - eichler4(at(z, 4), 0, c);
              return Complex(pi3 / (32 * root(3)) - 7 * zeta_(3, c) / 16) - mul_i(e) * pi3 / 960;
          },
          "weight-3 ratio at rate 1/256 against Eichler integrals", "lhs: series; rhs: eichler4, constants");
    return b.take();
}

struct Table1Row {
    NamedPoint z;
    Rational x;
    std::function<Real()> factor;       // (1 - 2 alpha)/Im z
    Rational r_ratio;                   // R / (2 (1 - 2 alpha))
    std::function<Real(const Ctx&)> e_half;
    std::function<Real(const Ctx&)> e_two;
    Rational r;
    std::function<Real(const Ctx&)> s_value;
    std::function<Real(const Ctx&)> q_combo;
    std::function<Real(const Ctx&)> t_value;
};

std::vector<Table1Row> table1_rows()
{
    auto pi2 = [](const Ctx& c) { return sqr(pi_(c)); };
    return {
        {kSqrt3Half, {1, 256}, [] { return Real(1); }, {1, 6},
         [=](const Ctx& c) { return 135 * l_(-3, 2, c) / (4 * pi2(c)); },
         [=](const Ctx& c) { return 405 * l_(-3, 2, c) / (8 * pi2(c)); }, {1, 16},
         [=](const Ctx& c) { return 11 * pi2(c) / 96; },
         [=](const Ctx& c) { return 11 * pi2(c) / 96 - 45 * l_(-3, 2, c) / 32; },
         [](const Ctx& c) { return pi_(c) / 36; }},
        {kSqrt7Half, {1, 4096}, [] { return rate(3, 4); }, {5, 42},
         [=](const Ctx& c) { return 105 * l_(-7, 2, c) / (4 * pi2(c)); },
         [=](const Ctx& c) { return 525 * l_(-7, 2, c) / (8 * pi2(c)); }, {1, 46},
         [=](const Ctx& c) { return 43 * pi2(c) / 552; },
         [=](const Ctx& c) { return 43 * pi2(c) / 552 - 245 * l_(-7, 2, c) / 368; },
         [](const Ctx& c) { return pi_(c) / 966; }},
        {kHalfCorner, {-1, 64}, [] { return Real(2); }, {1, 4},
         [=](const Ctx& c) { return 30 * l_(-8, 2, c) / pi2(c); },
         [=](const Ctx& c) { return 30 * l_(-8, 2, c) / pi2(c); }, {1, 4},
         [=](const Ctx& c) { return 5 * pi2(c) / 24; },
         [=](const Ctx& c) { return 5 * pi2(c) / 24 - 2 * l_(-8, 2, c); },
         [](const Ctx& c) { return -pi_(c) / 12; }},
        {kHalfPlusI, {-1, 512}, [] { return 3 / (2 * root(2)); }, {1, 6},
         [=](const Ctx& c) { return 30 * l_(-4, 2, c) / pi2(c); },
         [=](const Ctx& c) { return 105 * l_(-4, 2, c) / (2 * pi2(c)); }, {1, 16},
         [=](const Ctx& c) { return 11 * pi2(c) / 96; },
         [=](const Ctx& c) { return 11 * pi2(c) / 96 - 5 * l_(-4, 2, c) / 4; },
         [](const Ctx& c) { return -pi_(c) / 96; }},
    };
}

std::vector<IdentityRecord> table_h2()
{
    Builder b("table-h2");
    const char* anchor = "arithmetic data at four special points, weight-2 table";
    auto rows = table1_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Table1Row& row = rows[i];
        std::string p = "row" + std::to_string(i + 1) + "/";
        const std::string& zl = row.z.label;
        PointFn z = row.z.make;
        bool boundary = i == 2;
        Tolerance series_tol = boundary ? Tolerance::BOUNDARY : Tolerance::FULL;

        b.add(p + "c1-rate", "alpha4(1-alpha4)/16 at z=" + zl + " = " + row.x.str(),
              [z](const Ctx& c) {
                  Complex a = alpha4(z(), c);
                  return Complex(a * (1 - a) / 16);
              },
              [x = row.x](const Ctx&) { return Complex(x.to_real()); }, anchor, "lhs: modular; rhs: rational");
        b.add(p + "c2-slope", "(1 - 2 alpha4)/Im z at z=" + zl,
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return Complex((1 - 2 * alpha4(zz, c)) / zz.im());
              },
              [f = row.factor](const Ctx&) { return Complex(f()); }, anchor, "lhs: modular; rhs: algebraic");
        b.add(p + "c3-offset", "R/(2(1 - 2 alpha4)) at z=" + zl + " = " + row.r_ratio.str(),
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return r_half(zz, c) / (2 * (1 - 2 * alpha4(zz, c)));
              },
              [q = row.r_ratio](const Ctx&) { return Complex(q.to_real()); }, anchor,
              "lhs: modular Eisenstein data; rhs: rational");
        b.add(p + "c4-epstein-shift", "E(z+1/2,2) at z=" + zl,
              [z](const Ctx& c) { return Complex(epstein2(at(z(), 1, true), c)); },
              [f = row.e_half](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: q-series; rhs: dirichlet_l");
        b.add(p + "c5-epstein-double", "E(2z,2) at z=" + zl,
              [z](const Ctx& c) { return Complex(epstein2(at(z(), 2), c)); },
              [f = row.e_two](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: q-series; rhs: dirichlet_l");
        b.add(p + "c6-r", "S_r(z) at z=" + zl + ", r=" + row.r.str() + " is a rational multiple of pi^2",
              [z, r = row.r](const Ctx& c) { return s_r(z(), r, c); },
              [f = row.s_value](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: eichler4, constants; rhs: pi");
        b.add(p + "c7-q-combination", "Q1 - r Q2 from series at z=" + zl,
              [z, r = row.r](const Ctx& c) {
                  QRatios q = q_ratios(z(), c);
                  return q.q1_lhs - q.q2_lhs * r.to_real();
              },
              [f = row.q_combo](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: series, elliptic K; rhs: dirichlet_l", series_tol);
        b.add(p + "c8-t", "T_r from series at z=" + zl,
              [z, r = row.r](const Ctx& c) { return t_r(z(), r, c); },
              [f = row.t_value](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: series, modular; rhs: pi", series_tol);
    }
    return b.take();
}

struct Table2Row {
    NamedPoint z;
    std::function<Real(const Ctx&)> e_four;
    std::function<Real(const Ctx&)> e_diff;
    std::function<Real(const Ctx&)> e3_half;
    std::function<Real(const Ctx&)> e3_two;
    Rational r;
    std::function<Real(const Ctx&)> u_value;
};

std::vector<Table2Row> table2_rows()
{
    auto z3 = [](const Ctx& c) { return zeta_(3, c); };
    auto pi2 = [](const Ctx& c) { return sqr(pi_(c)); };
    auto pi3 = [](const Ctx& c) { return pow(pi_(c), 3L); };
    return {
        {kSqrt3Half,
         [=](const Ctx& c) { return (3105 * l_(-3, 2, c) / 32 + 30 * root(3) * l_(-4, 2, c)) / pi2(c); },
         [=](const Ctx& c) { return 60 * root(3) * l_(-4, 2, c) / pi2(c); },
         [=](const Ctx& c) { return 105 * z3(c) / (2 * pi3(c)); },
         [=](const Ctx& c) { return 1155 * z3(c) / (8 * pi3(c)); }, {1, 64},
         [=](const Ctx& c) { return 25 * z3(c) / (24 * pi_(c)); }},
        {kSqrt7Half,
         [=](const Ctx& c) { return (4305 * l_(-7, 2, c) / 32 + 360 * l_(-4, 2, c) / root(7)) / pi2(c); },
         [=](const Ctx& c) { return 720 * l_(-4, 2, c) / (root(7) * pi2(c)); },
         [=](const Ctx& c) { return 540 * z3(c) / (7 * pi3(c)); },
         [=](const Ctx& c) { return 3375 * z3(c) / (7 * pi3(c)); }, {1, 352},
         [=](const Ctx& c) { return 555 * z3(c) / (2156 * pi_(c)); }},
        {kHalfCorner,
         [=](const Ctx& c) { return (105 * l_(-8, 2, c) / 2 + 45 * l_(-4, 2, c) / root(2)) / pi2(c); },
         [=](const Ctx& c) { return 45 * root(2) * l_(-4, 2, c) / pi2(c); },
         [=](const Ctx& c) { return 2835 * z3(c) / (32 * pi3(c)); },
         [=](const Ctx& c) { return 2835 * z3(c) / (32 * pi3(c)); }, {1, 8},
         [=](const Ctx& c) { return 15 * z3(c) / (4 * pi_(c)); }},
        {kHalfPlusI,
         [=](const Ctx& c) { return (825 * l_(-4, 2, c) / 8 + 45 * root(2) * l_(-8, 2, c)) / pi2(c); },
         [=](const Ctx& c) { return 90 * root(2) * l_(-8, 2, c) / pi2(c); },
         [=](const Ctx& c) { return 945 * z3(c) / (16 * pi3(c)); },
         [=](const Ctx& c) { return 27405 * z3(c) / (128 * pi3(c)); }, {1, 64},
         [=](const Ctx& c) { return 57 * z3(c) / (64 * pi_(c)); }},
    };
}

std::vector<IdentityRecord> table_h3()
{
    Builder b("table-h3");
    const char* anchor = "arithmetic data at four special points, weight-3 table";
    auto rows = table2_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Table2Row& row = rows[i];
        std::string p = "row" + std::to_string(i + 1) + "/";
        const std::string& zl = row.z.label;
        PointFn z = row.z.make;
        Tolerance series_tol = i == 2 ? Tolerance::BOUNDARY : Tolerance::FULL;

        b.add(p + "c1-epstein-quadruple", "E(4z,2) at z=" + zl,
              [z](const Ctx& c) { return Complex(epstein2(at(z(), 4), c)); },
              [f = row.e_four](const Ctx& c) { return Complex(f(c)); }, anchor, "lhs: q-series; rhs: dirichlet_l");
        b.add(p + "c2-epstein-difference", "E(4z,2) - E(z,2) at z=" + zl,
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return Complex(epstein2(at(zz, 4), c) - epstein2(zz, c));
              },
              [f = row.e_diff](const Ctx& c) { return Complex(f(c)); }, anchor, "lhs: q-series; rhs: dirichlet_l");
        b.add(p + "c3-epstein3-shift", "E(z+1/2,3) at z=" + zl,
              [z](const Ctx& c) { return Complex(epstein3(at(z(), 1, true), c)); },
              [f = row.e3_half](const Ctx& c) { return Complex(f(c)); }, anchor, "lhs: eichler6; rhs: zeta(3)");
        b.add(p + "c4-epstein3-double", "E(2z,3) at z=" + zl,
              [z](const Ctx& c) { return Complex(epstein3(at(z(), 2), c)); },
              [f = row.e3_two](const Ctx& c) { return Complex(f(c)); }, anchor, "lhs: eichler6; rhs: zeta(3)");
        b.add(p + "c5-r", "weight-3 linear series combination with r=" + row.r.str() + " at z=" + zl,
              [z, r = row.r](const Ctx& c) {
                  UhpPoint zz = z();
                  H3Values h = h3_linear(zz, c);
                  Real diff = epstein2(at(zz, 4), c) - epstein2(zz, c);
                  Real ep = 8 * sqr(pi_(c)) * diff / (45 * zz.im());
                  return h.lhs1 + (h.lhs2 + ep) * r.to_real();
              },
              [f = row.u_value](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: series, q-series; rhs: zeta(3), pi", series_tol);
        b.add(p + "c6-u", "Eichler-side weight-3 combination with r=" + row.r.str() + " at z=" + zl,
              [z, r = row.r](const Ctx& c) { return u_check(z(), r, c); },
              [f = row.u_value](const Ctx& c) { return Complex(f(c)); }, anchor,
              "lhs: eichler6, constants; rhs: zeta(3), pi");
    }
    return b.take();
}

Complex i_times(const Real& v) { return Complex(Real(0), v); }

std::vector<IdentityRecord> eichler_special()
{
    Builder b("eichler-special");
    const char* e4 = "weight-4 Eichler integral at CM points";
    const char* e4pp = "second derivative of the weight-4 Eichler integral at CM points";
    const char* e6 = "weight-6 Eichler integral derivatives at CM points";
    const char* indep = "lhs: eichler; rhs: constants, dirichlet_l";
    auto rho = [](long d) { return UhpPoint(half(), root(d) / 2); };
    auto imag_at = [](const Real& v) { return UhpPoint(Real(0), v); };
    auto z3 = [](const Ctx& c) { return zeta_(3, c); };
    auto pi3 = [](const Ctx& c) { return pow(pi_(c), 3L); };

    // zeta(3)-over-pi^3 term divided by i.
    auto zeta_over_i = [=](long m, const Ctx& c) { return i_times(-m * z3(c) / pi3(c)); };

    b.add("e4-rho3", "E4((1+sqrt(3)i)/2) = 2i/sqrt3 + 30 zeta(3)/(pi^3 i)",
          [=](const Ctx& c) { return eichler4(rho(3), 0, c); },
          [=](const Ctx& c) { return i_times(2 / root(3)) + zeta_over_i(30, c); }, e4, indep);
    b.add("e4-rho7", "12 E4((1+sqrt(7)i)/2) - E4(sqrt(7)i) = 29 sqrt(7)i/6 + 330 zeta(3)/(pi^3 i)",
          [=](const Ctx& c) { return 12 * eichler4(rho(7), 0, c) - eichler4(imag_at(root(7)), 0, c); },
          [=](const Ctx& c) { return i_times(29 * root(7) / 6) + zeta_over_i(330, c); }, e4, indep);
    b.add("e4-sqrt2", "2 E4(i/sqrt2) + E4(sqrt(2)i) = 5i/sqrt2 + 90 zeta(3)/(pi^3 i)",
          [=](const Ctx& c) {
              return 2 * eichler4(imag_at(sqrt(half())), 0, c) + eichler4(imag_at(root(2)), 0, c);
          },
          [=](const Ctx& c) { return i_times(5 / root(2)) + zeta_over_i(90, c); }, e4, indep);
    b.add("e4-i", "E4(i) = 7i/6 + 30 zeta(3)/(pi^3 i)",
          [=](const Ctx& c) { return eichler4(imag_at(Real(1)), 0, c); },
          [=](const Ctx& c) { return i_times(Rational(7, 6).to_real()) + zeta_over_i(30, c); }, e4, indep);

    // L-value over pi^2 i.
    auto l_over_i = [](const Real& v, const Ctx& c) { return i_times(-v / sqr(pi_(c))); };
    b.add("e4pp-rho3", "E4''((1+sqrt(3)i)/2) = -15 sqrt3 L-3(2)/(pi^2 i) - sqrt(3)i",
          [=](const Ctx& c) { return eichler4(rho(3), 2, c); },
          [=](const Ctx& c) { return l_over_i(-15 * root(3) * l_(-3, 2, c), c) - i_times(root(3)); }, e4pp, indep);
    b.add("e4pp-rho7", "3 E4''((1+sqrt(7)i)/2) - E4''(sqrt(7)i) = -35 sqrt7 L-7(2)/(4 pi^2 i) - sqrt(7)i",
          [=](const Ctx& c) { return 3 * eichler4(rho(7), 2, c) - eichler4(imag_at(root(7)), 2, c); },
          [=](const Ctx& c) { return l_over_i(-35 * root(7) * l_(-7, 2, c) / 4, c) - i_times(root(7)); }, e4pp,
          indep);
    b.add("e4pp-sqrt2", "E4''(i/sqrt2) + 2 E4''(sqrt(2)i) = -40 sqrt2 L-8(2)/(pi^2 i) - 5 sqrt(2)i",
          [=](const Ctx& c) {
              return eichler4(imag_at(sqrt(half())), 2, c) + 2 * eichler4(imag_at(root(2)), 2, c);
          },
          [=](const Ctx& c) { return l_over_i(-40 * root(2) * l_(-8, 2, c), c) - i_times(5 * root(2)); }, e4pp,
          indep);
    b.add("e4pp-i", "E4''(i) = -20G/(pi^2 i) - 2i",
          [=](const Ctx& c) { return eichler4(imag_at(Real(1)), 2, c); },
          [=](const Ctx& c) { return l_over_i(-20 * catalan_(c), c) - i_times(Real(2)); }, e4pp, indep);

    b.add("e6-rho3", "i E6''(rho3) + (sqrt3/2) E6'''(rho3) = 3 sqrt3 - 168 zeta(3)/pi^3",
          [=](const Ctx& c) {
              UhpPoint z = rho(3);
              return mul_i(eichler6(z, 2, c)) + eichler6(z, 3, c) * (root(3) / 2);
          },
          [=](const Ctx& c) { return Complex(3 * root(3) - 168 * z3(c) / pi3(c)); }, e6, indep);
    b.add("e6-rho7",
          "2i[39 E6''(rho7) - 4 E6''(sqrt(7)i)] + sqrt7[39 E6'''(rho7) - 8 E6'''(sqrt(7)i)] = 98 sqrt7 - 6912 zeta(3)/pi^3",
          [=](const Ctx& c) {
              UhpPoint a = rho(7);
              UhpPoint s = imag_at(root(7));
              Complex d2 = 39 * eichler6(a, 2, c) - 4 * eichler6(s, 2, c);
              Complex d3 = 39 * eichler6(a, 3, c) - 8 * eichler6(s, 3, c);
              return 2 * mul_i(d2) + d3 * root(7);
          },
          [=](const Ctx& c) { return Complex(98 * root(7) - 6912 * z3(c) / pi3(c)); }, e6, indep);
    b.add("e6-sqrt2",
          "i E6''(i/sqrt2) + i E6''(sqrt(2)i) + E6'''(i/sqrt2)/sqrt2 + sqrt2 E6'''(sqrt(2)i) = 18 sqrt2 - 567 zeta(3)/pi^3",
          [=](const Ctx& c) {
              UhpPoint a = imag_at(sqrt(half()));
              UhpPoint s = imag_at(root(2));
              return mul_i(eichler6(a, 2, c) + eichler6(s, 2, c)) + eichler6(a, 3, c) / root(2) +
                     eichler6(s, 3, c) * root(2);
          },
          [=](const Ctx& c) { return Complex(18 * root(2) - 567 * z3(c) / pi3(c)); }, e6, indep);
    b.add("e6-i", "i E6''(i) + E6'''(i) = 8 - 189 zeta(3)/pi^3",
          [=](const Ctx& c) {
              UhpPoint z = imag_at(Real(1));
              return mul_i(eichler6(z, 2, c)) + eichler6(z, 3, c);
          },
          [=](const Ctx& c) { return Complex(8 - 189 * z3(c) / pi3(c)); }, e6, indep);
    b.add("e6p-rho3", "E6'(rho3) = 1/30", [=](const Ctx& c) { return eichler6(rho(3), 1, c); },
          [](const Ctx&) { return Complex(Rational(1, 30).to_real()); }, e6, indep);
    b.add("e6pp-rho3", "E6''(rho3) = 84 zeta(3)/(pi^3 i) + 2 sqrt(3)i",
          [=](const Ctx& c) { return eichler6(rho(3), 2, c); },
          [=](const Ctx& c) { return zeta_over_i(84, c) + i_times(2 * root(3)); }, e6, indep);
    b.add("e6ppp-rho3", "E6'''(rho3) = 10 - 168 sqrt3 zeta(3)/pi^3",
          [=](const Ctx& c) { return eichler6(rho(3), 3, c); },
          [=](const Ctx& c) { return Complex(10 - 168 * root(3) * z3(c) / pi3(c)); }, e6, indep);
    return b.take();
}

std::vector<NamedPoint> random_points(const RegistryOptions& opts)
{
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> re(-0.5, 0.5);
    std::uniform_real_distribution<double> im(0.75, 1.5);
    std::vector<NamedPoint> pts;
    for (int i = 0; i < opts.random_points; ++i) {
        char a[32], b[32];
        std::snprintf(a, sizeof a, "%.6f", re(rng));
        std::snprintf(b, sizeof b, "%.6f", im(rng));
        pts.push_back(decimal_point(a, b));
    }
    return pts;
}

// a E(z+1/2) + b E(z) + c E(2z) + d E(4z) for any point function E.
template <class F>
auto four_term(const UhpPoint& z, const long (&k)[4], F f)
{
    return k[0] * f(at(z, 1, true)) + k[1] * f(z) + k[2] * f(at(z, 2)) + k[3] * f(at(z, 4));
}

std::vector<IdentityRecord> sum_rules(const RegistryOptions& opts)
{
    Builder b("sum-rules");
    auto pts = random_points(opts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        char tag[16];
        std::snprintf(tag, sizeof tag, "z%02zu/", i);
        std::string p = tag;
        PointFn z = pts[i].make;
        std::string at_z = " at z=" + pts[i].label;
        const char* refl = "modular reflection of Eichler integrals";
        const char* four = "four-term level-4 relations";

        b.add(p + "eichler4-reflection", "E4(z) - z^2 E4(-1/z) = -(z^4-5z^2+1)/(3z) - 30 zeta(3)(z^2-1)/(pi^3 i)" + at_z,
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return eichler4(zz, 0, c) - sqr(zz.z()) * eichler4(inverted(zz), 0, c);
              },
              [z](const Ctx& c) {
                  Complex w = z().z();
                  Complex w2 = sqr(w);
                  Complex poly = -(sqr(w2) - 5 * w2 + 1) / (3 * w);
                  return poly + mul_i((w2 - 1) * zeta_(3, c)) * (30 / pow(pi_(c), 3L));
              },
              refl, "lhs: eichler4 at z and -1/z; rhs: polynomial, zeta(3)");
        b.add(p + "eichler6-reflection",
              "E6(z) - z^4 E6(-1/z) = -(z^2+1)(2z^4-9z^2+2)/(10z) - 189 zeta(5)(z^4-1)/(pi^5 i)" + at_z,
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return eichler6(zz, 0, c) - pow(zz.z(), 4L) * eichler6(inverted(zz), 0, c);
              },
              [z](const Ctx& c) {
                  Complex w = z().z();
                  Complex w2 = sqr(w);
                  Complex poly = -(w2 + 1) * (2 * sqr(w2) - 9 * w2 + 2) / (10 * w);
                  return poly + mul_i((sqr(w2) - 1) * zeta_(5, c)) * (189 / pow(pi_(c), 5L));
              },
              refl, "lhs: eichler6 at z and -1/z; rhs: polynomial, zeta(5)");
        b.add(p + "eichler4pp-reflection",
              "E4''(z) - E4''(-1/z)/z^2 - 2 E4(-1/z) - 2 E4'(-1/z)/z = -2/(3z^3) - 2z - 60 zeta(3)/(pi^3 i)" + at_z,
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  UhpPoint w = inverted(zz);
                  const Complex& v = zz.z();
                  return eichler4(zz, 2, c) - eichler4(w, 2, c) / sqr(v) - 2 * eichler4(w, 0, c) -
                         2 * eichler4(w, 1, c) / v;
              },
              [z](const Ctx& c) {
                  Complex v = z().z();
                  Complex poly = -2 / (3 * pow(v, 3L)) - 2 * v;
                  return poly + i_times(60 * zeta_(3, c) / pow(pi_(c), 3L));
              },
              refl, "lhs: eichler4 orders 0..2; rhs: polynomial, zeta(3)");
        b.add(p + "eisenstein4-four-term", "E4(z+1/2) + E4(z) - 18 E4(2z) + 16 E4(4z) = 0" + at_z,
              [z](const Ctx& c) {
                  return four_term(z(), {1, 1, -18, 16}, [&](const UhpPoint& w) { return eisenstein(w, 4, c); });
              },
              zero, four, "lhs: Lambert series; rhs: 0");
        b.add(p + "eichler4-four-term", "4 E4(z+1/2) + 4 E4(z) - 9 E4(2z) + E4(4z) = 0 for Eichler integrals" + at_z,
              [z](const Ctx& c) {
                  return four_term(z(), {4, 4, -9, 1}, [&](const UhpPoint& w) { return eichler4(w, 0, c); });
              },
              zero, four, "lhs: eichler4; rhs: 0");
        b.add(p + "epstein2-four-term", "2 E(z+1/2,2) + 2 E(z,2) - 9 E(2z,2) + 2 E(4z,2) = 0" + at_z,
              [z](const Ctx& c) {
                  return Complex(
                      four_term(z(), {2, 2, -9, 2}, [&](const UhpPoint& w) { return epstein2(w, c); }));
              },
              zero, four, "lhs: epstein2; rhs: 0");
        b.add(p + "eisenstein6-four-term", "E6(z+1/2) + E6(z) - 66 E6(2z) + 64 E6(4z) = 0" + at_z,
              [z](const Ctx& c) {
                  return four_term(z(), {1, 1, -66, 64}, [&](const UhpPoint& w) { return eisenstein(w, 6, c); });
              },
              zero, four, "lhs: Lambert series; rhs: 0");
        b.add(p + "eichler6-four-term", "16 E6(z+1/2) + 16 E6(z) - 33 E6(2z) + E6(4z) = 0 for Eichler integrals" + at_z,
              [z](const Ctx& c) {
                  return four_term(z(), {16, 16, -33, 1}, [&](const UhpPoint& w) { return eichler6(w, 0, c); });
              },
              zero, four, "lhs: eichler6; rhs: 0");
        b.add(p + "epstein3-four-term", "4 E(z+1/2,3) + 4 E(z,3) - 33 E(2z,3) + 4 E(4z,3) = 0" + at_z,
              [z](const Ctx& c) {
                  return Complex(
                      four_term(z(), {4, 4, -33, 4}, [&](const UhpPoint& w) { return epstein3(w, c); }));
              },
              zero, four, "lhs: epstein3; rhs: 0");
        b.add(p + "lambda-reflection", "lambda(z) + lambda(-1/z) = 1" + at_z,
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return lambda_fn(zz, c) + lambda_fn(inverted(zz), c);
              },
              [](const Ctx&) { return Complex(1); }, "modular lambda", "lhs: eta quotients; rhs: 1");
        b.add(p + "epstein2-inversion", "E(-1/z,2) = E(z,2)" + at_z,
              [z](const Ctx& c) { return Complex(epstein2(inverted(z()), c)); },
              [z](const Ctx& c) { return Complex(epstein2(z(), c)); }, "Epstein zeta invariance",
              "lhs and rhs: epstein2 at different nomes");
        b.add(p + "epstein3-inversion", "E(-1/z,3) = E(z,3)" + at_z,
              [z](const Ctx& c) { return Complex(epstein3(inverted(z()), c)); },
              [z](const Ctx& c) { return Complex(epstein3(z(), c)); }, "Epstein zeta invariance",
              "lhs and rhs: epstein3 at different nomes");
        b.add(p + "eisenstein4-eta-quotient", "Lambert-series E4 = eta-quotient E4" + at_z,
              [z](const Ctx& c) { return eisenstein(z(), 4, c); },
              [z](const Ctx& c) { return eisenstein4_eta_quotient(z(), c); }, "Eisenstein series",
              "lhs: Lambert series; rhs: eta products");
        b.add(p + "eisenstein6-eta-quotient", "Lambert-series E6 = eta-quotient E6" + at_z,
              [z](const Ctx& c) { return eisenstein(z(), 6, c); },
              [z](const Ctx& c) { return eisenstein6_eta_quotient(z(), c); }, "Eisenstein series",
              "lhs: Lambert series; rhs: eta products");
    }
    return b.take();
}

std::vector<IdentityRecord> epstein_gz()
{
    Builder b("epstein-gz");
    const char* anchor = "tabulated Epstein zeta values";
    const char* indep = "lhs: q-series; rhs: zeta, dirichlet_l";
    auto imag_at = [](const Real& v) { return UhpPoint(Real(0), v); };
    b.add("i-2", "E(i,2) = 30G/pi^2", [=](const Ctx& c) { return Complex(epstein2(imag_at(Real(1)), c)); },
          [](const Ctx& c) { return Complex(30 * catalan_(c) / sqr(pi_(c))); }, anchor, indep);
    b.add("i-half-2", "E(i/2,2) = 105G/(2 pi^2)", [=](const Ctx& c) { return Complex(epstein2(imag_at(half()), c)); },
          [](const Ctx& c) { return Complex(105 * catalan_(c) / (2 * sqr(pi_(c)))); }, anchor, indep);
    b.add("2i-2", "E(2i,2) = 105G/(2 pi^2)", [=](const Ctx& c) { return Complex(epstein2(imag_at(Real(2)), c)); },
          [](const Ctx& c) { return Complex(105 * catalan_(c) / (2 * sqr(pi_(c)))); }, anchor, indep);

    auto sqrt7_value = [](long s, const Ctx& c) {
        Real two = Real(2);
        Real f = 1 - pow(two, 1 - s) + pow(two, 1 - 2 * s);
        return pow(root(7), s) * f * zeta_(s, c) * l_(-7, s, c) / zeta_(2 * s, c);
    };
    auto two_sqrt7_value = [](long s, const Ctx& c) {
        Real two = Real(2);
        Real f = 1 - pow(two, 1 - s) + 3 * pow(two, -2 * s) - pow(two, 2 - 3 * s) + pow(two, 2 - 4 * s);
        Real brace = f * zeta_(s, c) * l_(-7, s, c) + l_(-4, s, c) * l_(28, s, c);
        return pow(2 * root(7), s) * brace / (2 * zeta_(2 * s, c));
    };
    for (long s : {2L, 3L}) {
        std::string ss = std::to_string(s);
        auto eval = [s](const UhpPoint& z, const Ctx& c) {
            return Complex(s == 2 ? epstein2(z, c) : epstein3(z, c));
        };
        b.add("sqrt7i-" + ss, "E(sqrt(7)i," + ss + ") from zeta and L-7",
              [=](const Ctx& c) { return eval(imag_at(root(7)), c); },
              [=](const Ctx& c) { return Complex(sqrt7_value(s, c)); }, anchor, indep);
        b.add("2sqrt7i-" + ss, "E(2 sqrt(7)i," + ss + ") from zeta, L-7, L-4 and L28",
              [=](const Ctx& c) { return eval(imag_at(2 * root(7)), c); },
              [=](const Ctx& c) { return Complex(two_sqrt7_value(s, c)); }, anchor, indep);
    }
    b.add("l28-2", "L28(2) = 2 pi^2/(7 sqrt7)", [](const Ctx& c) { return Complex(l_(28, 2, c)); },
          [](const Ctx& c) { return Complex(2 * sqr(pi_(c)) / (7 * root(7))); }, anchor,
          "lhs: Hurwitz zeta; rhs: pi");

    const char* lattice = "brute-force lattice sum against the q-expansion";
    const std::vector<std::pair<const char*, const char*>> pts = {
        {"0", "1"}, {"0", "1.3"}, {"0.5", "0.9"}, {"0.2", "1.1"}, {"-0.35", "0.8"}};
    for (const auto& [re, im] : pts) {
        NamedPoint np = decimal_point(re, im);
        b.add("lattice/" + np.label, "lattice sum radius 2000 vs E(z,2) at z=" + np.label,
              [z = np.make](const Ctx& c) { return Complex(epstein_lattice(z(), 2, 2000, c).value); },
              [z = np.make](const Ctx& c) { return Complex(epstein2(z(), c)); }, lattice,
              "lhs: hardware-float lattice; rhs: q-series", Tolerance::LATTICE);
    }
    return b.take();
}

// Fourth-order central second derivative of f at x0 with step h.
template <class F>
Complex second_difference(F f, const Real& x0, const Real& h)
{
    Complex f2m = f(x0 - 2 * h), f1m = f(x0 - h), f0 = f(x0), f1p = f(x0 + h), f2p = f(x0 + 2 * h);
    return (16 * (f1m + f1p) - 30 * f0 - f2m - f2p) / (12 * sqr(h));
}

std::vector<IdentityRecord> lemma_oracles()
{
    Builder b("lemma-oracles");
    const char* anchor = "integral representations of harmonic-weighted series";
    const char* indep = "lhs: tanh-sinh quadrature over elliptic K; rhs: series";
    struct Lemma {
        const char* id;
        LemmaIntegral which;
        WeightSpec w;
        const char* weight;
    };
    const std::vector<Lemma> lemmas = {
        {"nu2", LemmaIntegral::NU2, {{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}}, "H2(2k) - H2(k)/4"},
        {"eps2", LemmaIntegral::EPS2, {{Rational(1), Basis::H2_K}}, "H2(k)"},
        {"h3-mixed", LemmaIntegral::H3INT1, {{Rational(1), Basis::H3_2K}, {Rational(-1, 8), Basis::H3_K}},
         "H3(2k) - H3(k)/8"},
        {"h3", LemmaIntegral::H3INT2, {{Rational(1), Basis::H3_K}}, "H3(k)"},
    };
    const std::vector<const char*> ts = {"0.1", "0.3"};
    for (const Lemma& lm : lemmas) {
        for (const char* t : ts) {
            b.add(std::string(lm.id) + "/t=" + t,
                  std::string("integral form of sum C(2k,k)^3 [") + lm.weight + "] (t(1-t)/16)^k at t=" + t,
                  [which = lm.which, t](const Ctx& c) { return lemma_integral(which, Complex(Real(t)), c).value; },
                  [w = lm.w, t](const Ctx& c) {
                      Complex tt{Real(t)};
                      return binom3_series(tt * (1 - tt) / 16, LinearFactor::of(0, 1), w, c);
                  },
                  anchor, indep);
        }
    }

    auto P = [](const Complex& t, const Ctx& c) { return ell_k(t, c) * 2 / const_pi(c); };
    for (const char* t : ts) {
        b.add(std::string("mixed-weight/t=") + t,
              std::string("32 sum C(2k,k)^3 {H3 mix - 3/2 [H2 mix](H(2k)-H(k))} x^k against Legendre data at t=") + t,
              [t](const Ctx& c) {
                  Complex tt{Real(t)};
                  WeightSpec w{{Rational(1), Basis::H3_2K},
                               {Rational(-1, 8), Basis::H3_K},
                               {Rational(-3, 2), Basis::H2_2K_TIMES_DH1},
                               {Rational(3, 8), Basis::H2_K_TIMES_DH1}};
                  return binom3_series(tt * (1 - tt) / 16, LinearFactor::of(0, 1), w, c) * 32;
              },
              [P, t](const Ctx& c) {
                  Complex tt{Real(t)};
                  Real pi = const_pi(c);
                  Complex p1 = P(tt, c), p2 = P(1 - tt, c);
                  // d^2/dnu^2 P at t from the quadrature of the nu-lemma.
                  Complex d1 = -4 * lemma_integral(LemmaIntegral::NU2, tt, c).value / p1;
                  Complex d2 = legendre_p_nu2(1 - tt, c);
                  return 28 * zeta_(3, c) * sqr(p1) - pi * p2 * d1 - pi * p1 * d2 -
                         p1 * (pow(pi, 3L) * p2 + 2 * d1 * log(tt * (1 - tt) / 16));
              },
              "Legendre-function form of a mixed harmonic series",
              "lhs: series; rhs: elliptic K, quadrature, Legendre series at 1-t");
    }

    b.add("mixed-tail/t=0.3+0.05i", "4 sum C(2k,k)^3 [H3(k) - 3 H2(k)(H(2k)-H(k))] x^k with its tail integral",
          [](const Ctx& c) {
              Complex t(Real("0.3"), Real("0.05"));
              return binom3_series(t * (1 - t) / 16, LinearFactor::of(0, 1), {{Rational(1), Basis::H3MIX}}, c) * 4;
          },
          [P](const Ctx& c) {
              Complex t(Real("0.3"), Real("0.05"));
              Real pi = const_pi(c);
              Real pi2 = sqr(pi), pi3 = pow(pi, 3L);
              Real z3 = zeta_(3, c);
              Complex T = 1 / (t * (1 - t) * 4);
              Complex sig = i_times(Real(T.im.sign()));
              Complex lg = log(-T * 64);
              Complex sq = sqrt(1 - T);
              Complex smt = sqrt(-T);
              Complex tp = (1 - sq) / 2, tm = (1 + sq) / 2;
              Complex pp = P(tp, c), pm = P(tm, c);
              Complex dp = legendre_p_nu2(tp, c), dm = legendre_p_nu2(tm, c);
              Complex tail = h3mix_tail_integral(t, c).value;
              return tail + smt * pp * pm / 3 * (pi3 - sig * (pi2 * lg - 12 * z3)) +
                     smt * 2 / 3 * (sqr(pp) - sqr(pm)) * (pi2 * lg - 3 * z3) - smt * pi3 * 2 / 3 * sig * sqr(pp) +
                     smt * (pp * (pi - sig * lg) - pm * lg) * dm +
                     smt * (pm * (pi - sig * lg) + pp * (lg + sig * pi * 2)) * dp;
          },
          "mixed harmonic series off the real axis", "lhs: series; rhs: quadrature, Legendre series");

    // Parameter derivatives by finite differences at doubled precision.
    const char* fd = "finite-difference parameter derivatives of hypergeometric forms";
    for (const char* t : ts) {
        b.add(std::string("fd-nu2/t=") + t, std::string("d^2/dnu^2 P_nu(1-2t) at nu=-1/2 by differences, t=") + t,
              [t](const Ctx& c) {
                  Ctx wide(2 * c.digits, c.guard);
                  PrecisionScope scope(wide);
                  Complex tt{Real(t)};
                  Real h = pow10(-(c.digits / 4));
                  auto f = [&](const Real& nu) { return legendre_p_def(nu, Real(0), tt, wide); };
                  return second_difference(f, -half(), h);
              },
              [t](const Ctx& c) { return legendre_p_nu2(Complex(Real(t)), c); }, fd,
              "lhs: Gauss series in nu; rhs: harmonic-weighted series", Tolerance::HALF);
        b.add(std::string("fd-clausen/t=") + t,
              std::string("-(1/8) d^2/dnu^2 [P_nu(1-2t)]^2 against the weight-2 cube series, t=") + t,
              [t](const Ctx& c) {
                  Ctx wide(2 * c.digits, c.guard);
                  PrecisionScope scope(wide);
                  Complex tt{Real(t)};
                  Real h = pow10(-(c.digits / 4));
                  auto f = [&](const Real& nu) { return sqr(legendre_p_def(nu, Real(0), tt, wide)); };
                  return second_difference(f, -half(), h) / -8;
              },
              [t](const Ctx& c) {
                  Complex tt{Real(t)};
                  return binom3_series(tt * (1 - tt) / 16, LinearFactor::of(0, 1),
                                       {{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}}, c);
              },
              fd, "lhs: Gauss series in nu; rhs: harmonic-weighted cube series", Tolerance::HALF);
    }
    return b.take();
}

std::vector<IdentityRecord> sec4()
{
    Builder b("sec4");
    const std::vector<NamedPoint> pts = {decimal_point("0", "0.8"), decimal_point("0", "1.3"),
                                         decimal_point("0.5", "0.9")};
    for (const NamedPoint& np : pts) {
        PointFn z = np.make;
        std::string p = np.label + "/";
        std::string at_z = " at z=" + np.label;
        const char* sq = "square central binomial series against hyperbolic sums";

        b.add(p + "square-mixed", "binom2 ratio with H2(2k) - H2(k)/4 = sum 1/((2n+1)^2 cosh^2)" + at_z,
              [z](const Ctx& c) {
                  Complex a = alpha4(z(), c);
                  return binom2_series(a / 16, {{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}}, c) /
                         (ell_k(a, c) * 2 / const_pi(c));
              },
              [z](const Ctx& c) { return hyp_lambert(z(), {HypKind::COSH_SQ, Parity::ODD, 2}, c); }, sq,
              "lhs: series, elliptic K; rhs: hyperbolic sums");
        b.add(p + "square-h2", "binom2 ratio with H2(k) = sum 2/(n^2 cosh) - sum 1/(n^2 cosh^2)" + at_z,
              [z](const Ctx& c) {
                  Complex a = alpha4(z(), c);
                  return binom2_series(a / 16, {{Rational(1), Basis::H2_K}}, c) / (ell_k(a, c) * 2 / const_pi(c));
              },
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return 2 * hyp_lambert(zz, {HypKind::COSH_1, Parity::ALL, 2, Rational(2)}, c) -
                         hyp_lambert(zz, {HypKind::COSH_SQ, Parity::ALL, 2, Rational(2)}, c);
              },
              sq, "lhs: series, elliptic K; rhs: hyperbolic sums");
        b.add(p + "odd-cosh-sq-eichler", "sum 1/((2n+1)^2 cosh^2) = pi^2 [4 E4'(z+1/2) - E4'(2z)]/120" + at_z,
              [z](const Ctx& c) { return hyp_lambert(z(), {HypKind::COSH_SQ, Parity::ODD, 2}, c); },
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return (4 * eichler4(at(zz, 1, true), 1, c) - eichler4(at(zz, 2), 1, c)) * sqr(const_pi(c)) / 120;
              },
              "hyperbolic sums as Eichler integral derivatives", "lhs: hyperbolic sums; rhs: eichler4");
        b.add(p + "even-cosh-sq-eichler", "sum 1/(n^2 cosh^2(2n pi z/i)) = pi^2 [4 E4'(4z) - E4'(2z)]/30" + at_z,
              [z](const Ctx& c) {
                  return hyp_lambert(z(), {HypKind::COSH_SQ, Parity::ALL, 2, Rational(2)}, c);
              },
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return (4 * eichler4(at(zz, 4), 1, c) - eichler4(at(zz, 2), 1, c)) * sqr(const_pi(c)) / 30;
              },
              "hyperbolic sums as Eichler integral derivatives", "lhs: hyperbolic sums; rhs: eichler4");
        b.add(p + "nu2-over-p-eichler", "(1/P) d^2/dnu^2 P_nu(1-2 alpha4) = -pi^2 [4 E4'(z+1/2) - E4'(2z)]/15" + at_z,
              [z](const Ctx& c) {
                  Complex a = alpha4(z(), c);
                  return legendre_p_nu2(a, c) / (ell_k(a, c) * 2 / const_pi(c));
              },
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return -(4 * eichler4(at(zz, 1, true), 1, c) - eichler4(at(zz, 2), 1, c)) * sqr(const_pi(c)) / 15;
              },
              "Legendre second derivative as Eichler integral derivatives",
              "lhs: harmonic-weighted series, elliptic K; rhs: eichler4");
        b.add(p + "sech-transform", "sum 1/(n^2 cosh(2n pi z/i)) via its transformed odd alternating sum" + at_z,
              [z](const Ctx& c) {
                  return hyp_lambert(z(), {HypKind::COSH_1, Parity::ALL, 2, Rational(2)}, c);
              },
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  const Complex& v = zz.z();
                  Real pi = const_pi(c);
                  UhpPoint w(-inv(v * 4));
                  Complex alt = hyp_lambert(w, {HypKind::EXPM1_ALT, Parity::ODD, 2}, c);
                  // dividing by i is multiplying by -i
                  Complex over_i = -mul_i(v);
                  return sqr(pi) * (1 - 6 * sqr(v)) / 6 - over_i * (8 * const_catalan(c)) - 16 * over_i * alt;
              },
              "modular transformation of a sech sum", "lhs: hyperbolic sums at z; rhs: Lambert sums at -1/(4z)");
        b.add(p + "alternating-eli", "odd alternating sum as elliptic polylogarithms with q = exp(-pi i/(2z))" + at_z,
              [z](const Ctx& c) {
                  UhpPoint w(-inv(z().z() * 4));
                  return hyp_lambert(w, {HypKind::EXPM1_ALT, Parity::ODD, 2}, c);
              },
              [z](const Ctx& c) {
                  Complex v = z().z();
                  Real pi = const_pi(c);
                  Complex q = exp(-mul_i(Complex(pi)) / (2 * v));
                  Complex one(1), i = imag_unit();
                  Complex s = 8 * eli(0, 2, one, i, q, c) + 2 * eli(0, 2, one, one, sqr(q), c) -
                              eli(0, 2, one, one, pow(q, 4L), c);
                  return s / (8 * i);
              },
              "elliptic polylogarithm form", "lhs: hyperbolic sums; rhs: double series");
    }
    for (const char* im : {"0.8", "1.3", "2"}) {
        NamedPoint np = decimal_point("0", im);
        b.add(np.label + "/inverse-square", "sum (16t)^k/(k^2 C(2k,k)^2) at t = alpha4(z) against a nome series, z=" + np.label,
              [z = np.make](const Ctx& c) { return Complex(inv_binom2_series(alpha4(z(), c).re, c)); },
              [z = np.make](const Ctx& c) {
                  UhpPoint zz = z();
                  Real t = alpha4(zz, c).re;
                  Real k = ell_k(t, c);
                  Complex s = hyp_lambert(zz, {HypKind::HALF_ODD_COSH, Parity::ODD, 2}, c);
                  return s * (32 * sqrt(t) * k / const_pi(c));
              },
              "inverse square binomial series", "lhs: series; rhs: elliptic K, nome series");
    }
    const char* integrals = "K-power integrals for odd zeta values";
    b.add("zeta5-integral", "zeta(5) from its elliptic integral", [](const Ctx& c) {
        return Complex(zeta5_integral(c).value);
    }, [](const Ctx& c) { return Complex(zeta_(5, c)); }, integrals, "lhs: quadrature; rhs: zeta");
    b.add("zeta7-integral", "zeta(7) from its elliptic integral", [](const Ctx& c) {
        return Complex(zeta7_integral(c).value);
    }, [](const Ctx& c) { return Complex(zeta_(7, c)); }, integrals, "lhs: quadrature; rhs: zeta");
    b.add("lm4-4-integral", "L-4(4) from its elliptic integral", [](const Ctx& c) {
        return Complex(lminus4_4_integral(c).value);
    }, [](const Ctx& c) { return Complex(l_(-4, 4, c)); }, integrals, "lhs: quadrature; rhs: dirichlet_l");
    return b.take();
}

std::vector<IdentityRecord> theorems_random()
{
    Builder b("theorems-random");
    const std::vector<NamedPoint> pts = {
        decimal_point("0", "1.05"), decimal_point("0", "1.3"), decimal_point("0", "2"),
        decimal_point("0.5", "0.75"), kHalfCorner, decimal_point("0.5", "1.4")};
    const char* anchor = "harmonic ratios and linear sums as Eichler integrals";
    const char* indep = "lhs: series, elliptic K, modular; rhs: eichler, epstein2, zeta(3)";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        PointFn z = pts[i].make;
        std::string p = pts[i].label + "/";
        std::string at_z = " at z=" + pts[i].label;
        Tolerance tol = i == 4 ? Tolerance::BOUNDARY : Tolerance::FULL;

        b.add(p + "q1", "weight-2 mixed ratio" + at_z, [z](const Ctx& c) { return q_ratios(z(), c).q1_lhs; },
              [z](const Ctx& c) { return q_ratios(z(), c).q1_rhs; }, anchor, indep, tol);
        b.add(p + "q2", "weight-2 H2(k) ratio" + at_z, [z](const Ctx& c) { return q_ratios(z(), c).q2_lhs; },
              [z](const Ctx& c) { return q_ratios(z(), c).q2_rhs; }, anchor, indep, tol);
        b.add(p + "r1", "weight-2 mixed linear sum" + at_z, [z](const Ctx& c) { return r_linear(z(), c).r1_lhs; },
              [z](const Ctx& c) { return r_linear(z(), c).r1_rhs; }, anchor, indep, tol);
        b.add(p + "r2", "weight-2 H2(k) linear sum" + at_z, [z](const Ctx& c) { return r_linear(z(), c).r2_lhs; },
              [z](const Ctx& c) { return r_linear(z(), c).r2_rhs; }, anchor, indep, tol);
        b.add(p + "h3-ratio1", "weight-3 mixed ratio" + at_z, [z](const Ctx& c) { return h3_ratios(z(), c).lhs1; },
              [z](const Ctx& c) { return h3_ratios(z(), c).rhs1; }, anchor, indep, tol);
        b.add(p + "h3-ratio2", "weight-3 H3(k) ratio" + at_z, [z](const Ctx& c) { return h3_ratios(z(), c).lhs2; },
              [z](const Ctx& c) { return h3_ratios(z(), c).rhs2; }, anchor, indep, tol);
        b.add(p + "h3-linear1", "weight-3 mixed linear sum" + at_z,
              [z](const Ctx& c) { return h3_linear(z(), c).lhs1; },
              [z](const Ctx& c) { return h3_linear(z(), c).rhs1; }, anchor, indep, tol);
        b.add(p + "h3-linear2", "weight-3 H3(k) linear sum" + at_z,
              [z](const Ctx& c) { return h3_linear(z(), c).lhs2; },
              [z](const Ctx& c) { return h3_linear(z(), c).rhs2; }, anchor, indep, tol);

        const char* hyp = "harmonic ratios as hyperbolic sums";
        b.add(p + "ratio1-hyperbolic", "weight-2 mixed ratio = sum 2/((2n+1)^2 cosh^2)" + at_z,
              [z](const Ctx& c) { return q_ratios(z(), c).q1_lhs; },
              [z](const Ctx& c) { return 2 * hyp_lambert(z(), {HypKind::COSH_SQ, Parity::ODD, 2}, c); }, hyp,
              "lhs: series; rhs: hyperbolic sums", tol);
        b.add(p + "ratio2-hyperbolic", "weight-2 H2(k) ratio = three sinh^-2 sums" + at_z,
              [z](const Ctx& c) { return q_ratios(z(), c).q2_lhs; },
              [z](const Ctx& c) {
                  UhpPoint zz = z();
                  return 2 * hyp_lambert(zz, {HypKind::SINH_SQ, Parity::ALL, 2, Rational(4)}, c) -
                         hyp_lambert(zz, {HypKind::SINH_SQ, Parity::ALL, 2, Rational(2)}, c) / 2 +
                         2 * hyp_lambert(zz, {HypKind::SINH_SQ, Parity::ODD, 2}, c);
              },
              hyp, "lhs: series; rhs: hyperbolic sums", tol);
    }
    return b.take();
}

const std::vector<std::string>& names()
{
    static const std::vector<std::string> n = {
        "ramanujan-classical", "h2-variants", "sun-h2",      "h3",        "table-h2",        "table-h3",
        "eichler-special",     "sum-rules",   "epstein-gz",  "lemma-oracles", "sec4",       "theorems-random",
        "all"};
    return n;
}

}  // namespace

std::vector<std::string> suite_names()
{
    return names();
}

bool is_suite(const std::string& name)
{
    const auto& n = names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<IdentityRecord> suite_records(const std::string& suite, const RegistryOptions& opts)
{
    if (suite == "ramanujan-classical") return classical();
    if (suite == "h2-variants") return h2_variants();
    if (suite == "sun-h2") return sun_h2();
    if (suite == "h3") return h3_family();
    if (suite == "table-h2") return table_h2();
    if (suite == "table-h3") return table_h3();
    if (suite == "eichler-special") return eichler_special();
    if (suite == "sum-rules") return sum_rules(opts);
    if (suite == "epstein-gz") return epstein_gz();
    if (suite == "lemma-oracles") return lemma_oracles();
    if (suite == "sec4") return sec4();
    if (suite == "theorems-random") return theorems_random();
    if (suite == "all") {
        std::vector<IdentityRecord> all;
        for (const std::string& s : names()) {
            if (s == "all")
                continue;
            auto part = suite_records(s, opts);
            std::move(part.begin(), part.end(), std::back_inserter(all));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace modzeta
