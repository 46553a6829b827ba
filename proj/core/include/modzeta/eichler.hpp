#pragma once

#include "modzeta/modular.hpp"

namespace modzeta {

// order-th derivative of the weight-4 Eichler integral, order in 0..2.
Complex eichler4(const UhpPoint& z, int order, const PrecisionCtx& ctx);
// order-th derivative of the weight-6 Eichler integral, order in 0..3.
Complex eichler6(const UhpPoint& z, int order, const PrecisionCtx& ctx);

}  // namespace modzeta
