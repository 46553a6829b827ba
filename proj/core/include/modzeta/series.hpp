#pragma once

#include <string>
#include <vector>

#include "modzeta/modular.hpp"

namespace modzeta {

// K(sqrt(t)) by the arithmetic-geometric mean with principal square roots.
Complex ell_k(const Complex& t, const PrecisionCtx& ctx);
Real ell_k(const Real& t, const PrecisionCtx& ctx);
// K(sqrt(1 - u)) computed from u itself, accurate when u is tiny.
Complex ell_k_comp(const Complex& u, const PrecisionCtx& ctx);
Real ell_k_comp(const Real& u, const PrecisionCtx& ctx);

// P_nu^{-eps}(1 - 2t) through its Gauss hypergeometric form.
Complex legendre_p_def(const Real& nu, const Real& eps, const Complex& t, const PrecisionCtx& ctx);

// Second nu-derivative of P_nu(1 - 2t) at nu = -1/2, summed from the
// harmonic-weighted central binomial series.
Complex legendre_p_nu2(const Complex& t, const PrecisionCtx& ctx);

enum class Basis {
    ONE,
    H1_K,
    H1_2K,
    H2_K,
    H2_2K,
    H3_K,
    H3_2K,
    INVSQ_2K1,         // 1/(2k+1)^2
    H2_2K_TIMES_DH1,   // H2_{2k} (H_{2k} - H_k)
    H2_K_TIMES_DH1,    // H2_k (H_{2k} - H_k)
    H3MIX,             // H3_k - 3 H2_k (H_{2k} - H_k)
};

std::string basis_name(Basis b);

struct WeightTerm {
    Rational coeff;
    Basis basis;
};

class WeightSpec {
public:
    WeightSpec() = default;
    WeightSpec(std::initializer_list<WeightTerm> terms) : terms_(terms) {}
    static WeightSpec one() { return WeightSpec{{Rational(1), Basis::ONE}}; }

    WeightSpec& add(Rational coeff, Basis basis);
    const std::vector<WeightTerm>& terms() const { return terms_; }
    std::string str() const;

private:
    std::vector<WeightTerm> terms_;
};

struct LinearFactor {
    Complex a;
    Complex b;

    static LinearFactor constant(const Complex& b) { return {Complex(), b}; }
    static LinearFactor of(long a, long b) { return {Complex(a), Complex(b)}; }
};

// sum_k C(2k,k)^3 (a k + b) w(k) x^k. Points with |64x| = 1 need
// `accelerate`, which sums the alternating boundary series by CVZ.
Complex binom3_series(const Complex& x, const LinearFactor& factor, const WeightSpec& w,
                      const PrecisionCtx& ctx, bool accelerate = false);
// Single term recomputed from scratch (exact binomials, direct harmonic sums).
Complex binom3_term(const Complex& x, const LinearFactor& factor, const WeightSpec& w, long k,
                    const PrecisionCtx& ctx);

// sum_k C(2k,k)^2 w(k) x^k for |16x| < 1.
Complex binom2_series(const Complex& x, const WeightSpec& w, const PrecisionCtx& ctx);

// sum_{k>=1} (16t)^k / (k^2 C(2k,k)^2), t in (0,1).
Real inv_binom2_series(const Real& t, const PrecisionCtx& ctx);

enum class HypKind {
    EXPM1,               // 1/(e^{2x} - 1)
    EXPM1_ALT,           // (-1)^n/(e^{2x} - 1)
    COSH_SQ,             // 1/cosh^2 x
    SINH_SQ,             // 1/sinh^2 x
    COSH_1,              // 1/cosh x
    TANH_OVER_COSH_SQ,   // tanh x / cosh^2 x
    COTH_OVER_SINH_SQ,   // coth x / sinh^2 x
    HALF_ODD_COSH,       // 1/(2 cosh x) = q^{m/2}/(1+q^m)
};

enum class Parity { ODD, ALL };

// Summand kernel(x_m)/m^a with x_m = scale * m * pi * z / i, where m runs
// over 2n+1 (n >= 0) for ODD and n (n >= 1) for ALL.
struct HypKernel {
    HypKind kind;
    Parity parity;
    int a;
    Rational scale = Rational(1);
};

Complex hyp_lambert(const UhpPoint& z, const HypKernel& kernel, const PrecisionCtx& ctx);

// sum_{j>=1} x^j / j^n Li_m(y q^j)
Complex eli(int n, int m, const Complex& x, const Complex& y, const Complex& q, const PrecisionCtx& ctx);

// Accelerated value of sum_k terms[k] for terms alternating in sign beyond a
// burn-in; the number of supplied terms fixes the CVZ degree.
Real cvz_alt_sum(const std::vector<Real>& terms, const PrecisionCtx& ctx);
Complex cvz_alt_sum(const std::vector<Complex>& terms, const PrecisionCtx& ctx);
// CVZ degree used for a given precision.
long cvz_degree(const PrecisionCtx& ctx);

}  // namespace modzeta
