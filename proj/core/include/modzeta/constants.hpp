#pragma once

#include "modzeta/mp.hpp"

namespace modzeta {

Real const_pi(const PrecisionCtx& ctx);
Real const_zeta(long n, const PrecisionCtx& ctx);
Real const_catalan(const PrecisionCtx& ctx);
Real const_euler_gamma(const PrecisionCtx& ctx);

}  // namespace modzeta
