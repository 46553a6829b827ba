#pragma once

#include <string>

#include "doctest.h"
#include "modzeta/mp.hpp"

namespace oracle {

using modzeta::Complex;
using modzeta::Real;

inline double digits_of_agreement(const Complex& a, const Complex& b)
{
    Real d = modzeta::abs(a - b);
    if (d.is_zero())
        return 1e9;
    return -d.log10_abs();
}

// Gamma and friends straight from MPFR, bypassing the library.
inline Real mpfr_gamma_of(const Real& x)
{
    Real out;
    mpfr_gamma(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

inline Real mpfr_const_pi_raw()
{
    Real out;
    mpfr_const_pi(out.raw(), MPFR_RNDN);
    return out;
}

}  // namespace oracle

#define CHECK_DIGITS(a, b, n) CHECK(oracle::digits_of_agreement((a), (b)) > (n))
