#pragma once

#include <functional>

#include "modzeta/mp.hpp"

namespace modzeta {

template <class T>
struct QuadResult {
    T value;
    Real err_estimate;  // difference of the last two refinement levels
    int levels_used = 0;
    bool converged = false;
};

// Integrands receive the abscissa together with its distances from both
// endpoints, each computed without cancellation.
using RealIntegrand = std::function<Real(const Real& x, const Real& from_a, const Real& to_b)>;
using PathIntegrand = std::function<Complex(const Complex& s, const Complex& from_a, const Complex& to_b)>;

constexpr int kMaxQuadLevel = 12;

QuadResult<Real> tanh_sinh(const RealIntegrand& f, const Real& a, const Real& b, const PrecisionCtx& ctx);
// Straight segment from a to b in the complex plane.
QuadResult<Complex> tanh_sinh(const PathIntegrand& f, const Complex& a, const Complex& b,
                              const PrecisionCtx& ctx);

enum class LemmaIntegral { NU2, EPS2, H3INT1, H3INT2 };

// Integral side of the K-product representations, trailing terms included.
QuadResult<Complex> lemma_integral(LemmaIntegral which, const Complex& t, const PrecisionCtx& ctx);

// -(2/pi)^2 int_t^{t+inf} 4(1-2s)/(s(1-s)) [K'(s)K(t) - K(s)K'(t)]^2 ds along
// the horizontal ray from t, where K(s) = K(sqrt s) and K'(s) = K(sqrt(1-s)).
QuadResult<Complex> h3mix_tail_integral(const Complex& t, const PrecisionCtx& ctx);

QuadResult<Real> zeta5_integral(const PrecisionCtx& ctx);
QuadResult<Real> zeta7_integral(const PrecisionCtx& ctx);
// L_{-4}(4) recovered from its K^6 integral over [0, 1/2].
QuadResult<Real> lminus4_4_integral(const PrecisionCtx& ctx);

}  // namespace modzeta
