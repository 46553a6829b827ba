#pragma once

#include "modzeta/mp.hpp"

namespace modzeta::detail {

// Smallest N with sum_{n>N} C n^p r^n / (1-r)^e below 10^-digits, where
// r = exp(-rate). Throws DomainError when the rate is too small to be useful.
long geometric_terms(double rate, int p, int e, double log10_c, int digits);

// q = exp(2 pi i z) for a point with Im z = y.
Complex nome_of(const Complex& z);

// sum_{n>=1} n^power * u A(u) / (1-u)^(order+1), u = q^n, A the Eulerian
// polynomial of the given order (order 0..3). `rate` is -log|q|.
Complex lambert_sum(const Complex& q, double rate, int power, int order, double log10_c,
                    const PrecisionCtx& ctx);

// n^k as a Real, exact for moderate n.
Real int_power(long n, int k);

}  // namespace modzeta::detail
