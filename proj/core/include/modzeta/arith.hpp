#pragma once

#include <gmpxx.h>

#include "modzeta/modular.hpp"

namespace modzeta {

int kronecker(long d, long n);

// Exact Bernoulli number B_n (B_1 = -1/2). Throws past `cap`.
mpq_class bernoulli(int n, int cap = 512);

Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionCtx& ctx);
Real dirichlet_l(long d, long s, const PrecisionCtx& ctx);

Real epstein2(const UhpPoint& z, const PrecisionCtx& ctx);

struct Epstein3Value {
    Real value;
    // Imaginary part of the braced Eichler combination; zero when 2 Re z is an
    // integer, reported otherwise.
    Real imag_residual;
};

Epstein3Value epstein3_detail(const UhpPoint& z, const PrecisionCtx& ctx);
Real epstein3(const UhpPoint& z, const PrecisionCtx& ctx);

struct LatticeSum {
    Real value;
    double err_estimate;
};

// Brute-force lattice sum in hardware floating point over the square
// max(|m|,|n|) <= radius. Slow, low precision, independent of everything else.
LatticeSum epstein_lattice(const UhpPoint& z, int s, long radius, const PrecisionCtx& ctx);

}  // namespace modzeta
