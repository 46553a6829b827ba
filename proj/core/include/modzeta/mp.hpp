#pragma once

#include <cstdint>

#include <mpfr.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace modzeta {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegeneratePointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested decimal digits plus guard digits. All public operations take one
// of these and compute internally at digits + guard decimal digits.
struct PrecisionCtx {
    int digits = 50;
    int guard = 15;

    PrecisionCtx() = default;
    explicit PrecisionCtx(int digits_, int guard_ = 15);

    int working_digits() const { return digits + guard; }
    mpfr_prec_t bits() const;
    PrecisionCtx scaled(int factor) const { return PrecisionCtx(digits * factor, guard); }
};

mpfr_prec_t working_bits();
mpfr_prec_t bits_for_digits(int decimal_digits);

// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionCtx& ctx);
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    Real(long long v);
    explicit Real(double v);
    explicit Real(std::string_view decimal);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    ~Real();

    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long o);
    Real& operator-=(long o);
    Real& operator*=(long o);
    Real& operator/=(long o);

    Real operator-() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // log10 of |x|, -inf-ish large negative for zero.
    double log10_abs() const;

private:
    void adopt_working();
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(Real&& a, const Real& b);
Real operator-(Real&& a, const Real& b);
Real operator*(Real&& a, const Real& b);
Real operator/(Real&& a, const Real& b);
Real operator+(Real&& a, long b);
Real operator-(Real&& a, long b);
Real operator*(Real&& a, long b);
Real operator/(Real&& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);

Real abs(const Real& x);
Real sqr(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real ldexp(const Real& x, long e);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real pow10(long e);

// Scientific notation with `digits` significant digits.
std::string to_string(const Real& x, int digits);
std::ostream& operator<<(std::ostream& os, const Real& x);

struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n) : num(n) {}
    Rational(long n, long d);
    static Rational parse(std::string_view text);

    Real to_real() const;
    std::string str() const;
};

class Complex {
public:
    Real re;
    Real im;

    Complex() = default;
    Complex(int v) : re(v) {}
    Complex(long v) : re(v) {}
    Complex(const Real& r) : re(r) {}
    Complex(Real&& r) : re(std::move(r)) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(Real&& r, Real&& i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex& operator/=(const Real& o);
    Complex& operator*=(long o);
    Complex& operator/=(long o);
    Complex operator-() const { return Complex(-re, -im); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
Complex operator+(long a, const Complex& b);
Complex operator-(long a, const Complex& b);
Complex operator*(long a, const Complex& b);
Complex operator/(long a, const Complex& b);

Complex imag_unit();
Complex mul_i(const Complex& z);
Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex sqr(const Complex& z);
Complex inv(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
Complex pow(const Complex& z, const Real& p);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);

std::string to_string(const Complex& z, int digits);
std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace modzeta
