#pragma once

#include "modzeta/mp.hpp"

namespace modzeta {

// A point of the upper half-plane. Construction rejects Im z <= 0.
class UhpPoint {
public:
    UhpPoint(Complex z);
    UhpPoint(const Real& re, const Real& im);

    const Complex& z() const { return z_; }
    const Real& re() const { return z_.re; }
    const Real& im() const { return z_.im; }

    // Theorem hypothesis: Re z = 0 with Im z >= 1/2, or Re z = 1/2 with
    // Im z >= 1/sqrt(2). Equality is tested to within 10^-(digits) so that
    // points built from irrational closed forms qualify.
    bool admissible_h2(const PrecisionCtx& ctx) const;
    // True for the Re z = 1/2, Im z = 1/sqrt(2) corner where the theorem
    // series converge only conditionally.
    bool on_boundary(const PrecisionCtx& ctx) const;

private:
    Complex z_;
};

Complex nome(const UhpPoint& z, const PrecisionCtx& ctx);
Complex eta(const UhpPoint& z, const PrecisionCtx& ctx);
Complex lambda_fn(const UhpPoint& z, const PrecisionCtx& ctx);
Complex alpha4(const UhpPoint& z, const PrecisionCtx& ctx);

// weight 2 includes the -3/(pi Im z) completion.
Complex eisenstein(const UhpPoint& z, int weight, const PrecisionCtx& ctx);
Complex eisenstein4_eta_quotient(const UhpPoint& z, const PrecisionCtx& ctx);
Complex eisenstein6_eta_quotient(const UhpPoint& z, const PrecisionCtx& ctx);

// R_{-1/2}(1 - 2 alpha4(z)) from E2 and E4 at z and 4z.
Complex r_half(const UhpPoint& z, const PrecisionCtx& ctx);

}  // namespace modzeta
