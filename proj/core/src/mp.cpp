#include "modzeta/mp.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

namespace modzeta {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
thread_local mpfr_prec_t t_bits = 256;

}  // namespace

mpfr_prec_t bits_for_digits(int decimal_digits)
{
    // log2(10) rounded up generously so the conversion never loses a digit.
    double b = std::ceil(decimal_digits * 3.3219280948873626) + 4;
    return static_cast<mpfr_prec_t>(b);
}

PrecisionCtx::PrecisionCtx(int digits_, int guard_) : digits(digits_), guard(guard_)
{
    if (digits < 10)
        throw DomainError("precision: digits must be at least 10");
    if (guard < 0)
        throw DomainError("precision: guard must be non-negative");
}

mpfr_prec_t PrecisionCtx::bits() const { return bits_for_digits(working_digits()); }

mpfr_prec_t working_bits() { return t_bits; }

PrecisionScope::PrecisionScope(const PrecisionCtx& ctx) : saved_(t_bits) { t_bits = ctx.bits(); }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(t_bits) { t_bits = bits; }

PrecisionScope::~PrecisionScope() { t_bits = saved_; }

// ---------------------------------------------------------------- Real

Real::Real()
{
    mpfr_init2(v_, t_bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(int v)
{
    mpfr_init2(v_, t_bits);
    mpfr_set_si(v_, v, kRnd);
}

Real::Real(long v)
{
    mpfr_init2(v_, t_bits);
    mpfr_set_si(v_, v, kRnd);
}

Real::Real(unsigned long v)
{
    mpfr_init2(v_, t_bits);
    mpfr_set_ui(v_, v, kRnd);
}

Real::Real(long long v)
{
    mpfr_init2(v_, t_bits);
    mpfr_set_sj(v_, static_cast<intmax_t>(v), kRnd);
}

Real::Real(double v)
{
    mpfr_init2(v_, t_bits);
    mpfr_set_d(v_, v, kRnd);
}

Real::Real(std::string_view decimal)
{
    mpfr_init2(v_, t_bits);
    std::string s(decimal);
    if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, kRnd) != 0) {
        mpfr_clear(v_);
        throw DomainError("cannot parse real number '" + s + "'");
    }
}

Real::Real(const Real& other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept
{
    v_[0] = other.v_[0];
    other.v_[0]._mpfr_d = nullptr;
}

Real::~Real()
{
    if (v_[0]._mpfr_d != nullptr)
        mpfr_clear(v_);
}

Real& Real::operator=(const Real& other)
{
    if (this == &other)
        return *this;
    if (v_[0]._mpfr_d == nullptr)
        mpfr_init2(v_, mpfr_get_prec(other.v_));
    else
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    std::swap(v_[0], other.v_[0]);
    return *this;
}

void Real::adopt_working()
{
    if (mpfr_get_prec(v_) != t_bits)
        mpfr_prec_round(v_, t_bits, kRnd);
}

Real& Real::operator+=(const Real& o)
{
    adopt_working();
    mpfr_add(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    adopt_working();
    mpfr_sub(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    adopt_working();
    mpfr_mul(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    adopt_working();
    mpfr_div(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator+=(long o)
{
    adopt_working();
    mpfr_add_si(v_, v_, o, kRnd);
    return *this;
}

Real& Real::operator-=(long o)
{
    adopt_working();
    mpfr_sub_si(v_, v_, o, kRnd);
    return *this;
}

Real& Real::operator*=(long o)
{
    adopt_working();
    mpfr_mul_si(v_, v_, o, kRnd);
    return *this;
}

Real& Real::operator/=(long o)
{
    if (o == 0)
        throw DomainError("division by zero");
    adopt_working();
    mpfr_div_si(v_, v_, o, kRnd);
    return *this;
}

Real Real::operator-() const
{
    Real r;
    mpfr_neg(r.v_, v_, kRnd);
    return r;
}

double Real::log10_abs() const
{
    if (is_zero())
        return -1e9;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, kRnd);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

Real operator+(const Real& a, const Real& b)
{
    Real r;
    mpfr_add(r.raw(), a.raw(), b.raw(), kRnd);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r;
    mpfr_sub(r.raw(), a.raw(), b.raw(), kRnd);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r;
    mpfr_mul(r.raw(), a.raw(), b.raw(), kRnd);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    if (b.is_zero())
        throw DomainError("division by zero");
    Real r;
    mpfr_div(r.raw(), a.raw(), b.raw(), kRnd);
    return r;
}

Real operator+(Real&& a, const Real& b) { return std::move(a += b); }
Real operator-(Real&& a, const Real& b) { return std::move(a -= b); }
Real operator*(Real&& a, const Real& b) { return std::move(a *= b); }
Real operator/(Real&& a, const Real& b) { return std::move(a /= b); }

Real operator+(Real&& a, long b) { return std::move(a += b); }
Real operator-(Real&& a, long b) { return std::move(a -= b); }
Real operator*(Real&& a, long b) { return std::move(a *= b); }
Real operator/(Real&& a, long b) { return std::move(a /= b); }

Real operator+(const Real& a, long b)
{
    Real r;
    mpfr_add_si(r.raw(), a.raw(), b, kRnd);
    return r;
}

Real operator-(const Real& a, long b)
{
    Real r;
    mpfr_sub_si(r.raw(), a.raw(), b, kRnd);
    return r;
}

Real operator*(const Real& a, long b)
{
    Real r;
    mpfr_mul_si(r.raw(), a.raw(), b, kRnd);
    return r;
}

Real operator/(const Real& a, long b)
{
    if (b == 0)
        throw DomainError("division by zero");
    Real r;
    mpfr_div_si(r.raw(), a.raw(), b, kRnd);
    return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b)
{
    Real r;
    mpfr_si_sub(r.raw(), a, b.raw(), kRnd);
    return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b)
{
    if (b.is_zero())
        throw DomainError("division by zero");
    Real r;
    mpfr_si_div(r.raw(), a, b.raw(), kRnd);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }

namespace {

template <class F>
Real unary(const Real& x, F f)
{
    Real r;
    f(r.raw(), x.raw(), kRnd);
    return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqr(const Real& x) { return unary(x, mpfr_sqr); }

Real sqrt(const Real& x)
{
    if (x.sign() < 0)
        throw DomainError("sqrt of a negative real");
    return unary(x, mpfr_sqrt);
}

Real cbrt(const Real& x) { return unary(x, mpfr_cbrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }

Real log(const Real& x)
{
    if (x.sign() <= 0)
        throw DomainError("log of a non-positive real");
    return unary(x, mpfr_log);
}

Real log1p(const Real& x)
{
    if (x <= Real(-1))
        throw DomainError("log1p argument out of domain");
    return unary(x, mpfr_log1p);
}

Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }

Real atan2(const Real& y, const Real& x)
{
    Real r;
    mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
    return r;
}

Real pow(const Real& x, long n)
{
    if (n < 0 && x.is_zero())
        throw DomainError("zero to a negative power");
    Real r;
    mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
    return r;
}

Real pow(const Real& x, const Real& y)
{
    if (x.sign() < 0 && !y.is_integer())
        throw DomainError("negative base with non-integer exponent");
    Real r;
    mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
    return r;
}

Real ldexp(const Real& x, long e)
{
    Real r;
    mpfr_mul_2si(r.raw(), x.raw(), e, kRnd);
    return r;
}

Real floor(const Real& x)
{
    Real r;
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pow10(long e)
{
    Real r;
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), kRnd);
    if (e < 0)
        mpfr_ui_div(r.raw(), 1, r.raw(), kRnd);
    return r;
}

std::string to_string(const Real& x, int digits)
{
    if (digits < 1)
        digits = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, x.raw());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Real& x)
{
    return os << to_string(x, static_cast<int>(os.precision()));
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long n, long d) : num(n), den(d)
{
    if (d == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    char* end = nullptr;
    if (slash == std::string::npos) {
        long n = std::strtol(s.c_str(), &end, 10);
        if (s.empty() || *end != '\0')
            throw DomainError("cannot parse rational '" + s + "'");
        return Rational(n);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long n = std::strtol(a.c_str(), &end, 10);
    if (a.empty() || *end != '\0')
        throw DomainError("cannot parse rational '" + s + "'");
    long d = std::strtol(b.c_str(), &end, 10);
    if (b.empty() || *end != '\0')
        throw DomainError("cannot parse rational '" + s + "'");
    return Rational(n, d);
}

Real Rational::to_real() const { return Real(num) / den; }

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// ---------------------------------------------------------------- Complex

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    *this = *this / o;
    return *this;
}

Complex& Complex::operator*=(const Real& o)
{
    re *= o;
    im *= o;
    return *this;
}

Complex& Complex::operator/=(const Real& o)
{
    re /= o;
    im /= o;
    return *this;
}

Complex& Complex::operator*=(long o)
{
    re *= o;
    im *= o;
    return *this;
}

Complex& Complex::operator/=(long o)
{
    re /= o;
    im /= o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }

Complex operator*(const Complex& a, const Complex& b)
{
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b)
{
    Real d = norm(b);
    if (d.is_zero())
        throw DomainError("complex division by zero");
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex operator+(const Complex& a, const Real& b) { return Complex(a.re + b, a.im); }
Complex operator-(const Complex& a, const Real& b) { return Complex(a.re - b, a.im); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
Complex operator+(const Real& a, const Complex& b) { return Complex(a + b.re, b.im); }
Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re, -b.im); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
Complex operator+(const Complex& a, long b) { return Complex(a.re + b, a.im); }
Complex operator-(const Complex& a, long b) { return Complex(a.re - b, a.im); }
Complex operator*(const Complex& a, long b) { return Complex(a.re * b, a.im * b); }
Complex operator/(const Complex& a, long b) { return Complex(a.re / b, a.im / b); }
Complex operator+(long a, const Complex& b) { return Complex(b.re + a, b.im); }
Complex operator-(long a, const Complex& b) { return Complex(a - b.re, -b.im); }
Complex operator*(long a, const Complex& b) { return Complex(b.re * a, b.im * a); }
Complex operator/(long a, const Complex& b) { return Complex(Real(a)) / b; }

Complex imag_unit() { return Complex(Real(0), Real(1)); }
Complex mul_i(const Complex& z) { return Complex(-z.im, z.re); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real abs(const Complex& z)
{
    Real r;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), kRnd);
    return r;
}

Real norm(const Complex& z) { return sqr(z.re) + sqr(z.im); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex sqr(const Complex& z)
{
    return Complex(sqr(z.re) - sqr(z.im), ldexp(z.re * z.im, 1));
}

Complex inv(const Complex& z) { return Complex(Real(1)) / z; }

Complex exp(const Complex& z)
{
    Real m = exp(z.re);
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), kRnd);
    return Complex(m * c, m * s);
}

Complex log(const Complex& z)
{
    if (z.re.is_zero() && z.im.is_zero())
        throw DomainError("log of zero");
    return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z)
{
    // Principal branch, computed without cancellation.
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0)
            return Complex(sqrt(z.re), Real(0));
        return Complex(Real(0), sqrt(-z.re));
    }
    Real m = abs(z);
    Real t = sqrt(ldexp(m + abs(z.re), -1));
    if (z.re.sign() >= 0)
        return Complex(t, z.im / ldexp(t, 1));
    Real u = z.im.sign() >= 0 ? t : -t;
    return Complex(abs(z.im) / ldexp(t, 1), u);
}

Complex pow(const Complex& z, long n)
{
    if (n < 0)
        return inv(pow(z, -n));
    Complex result(Real(1));
    Complex base = z;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base = sqr(base);
    }
    return result;
}

Complex pow(const Complex& z, const Real& p) { return exp(log(z) * p); }

Complex sinh(const Complex& z)
{
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), kRnd);
    return Complex(sinh(z.re) * c, cosh(z.re) * s);
}

Complex cosh(const Complex& z)
{
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), kRnd);
    return Complex(cosh(z.re) * c, sinh(z.re) * s);
}

std::string to_string(const Complex& z, int digits)
{
    std::string r = to_string(z.re, digits);
    std::string i = to_string(abs(z.im), digits);
    return r + (z.im.sign() < 0 ? "-" : "+") + i + "i";
}

std::ostream& operator<<(std::ostream& os, const Complex& z)
{
    return os << to_string(z, static_cast<int>(os.precision()));
}

}  // namespace modzeta
