#pragma once

#include <vector>

#include "modzeta/series.hpp"

namespace modzeta::detail {

// Running harmonic sums for term index k, advanced one k at a time.
class HarmonicState {
public:
    HarmonicState();
    void advance();  // k -> k + 1
    long k() const { return k_; }
    Real basis(Basis b) const;

private:
    long k_ = 0;
    Real h1_k_, h2_k_, h3_k_;
    Real h1_2k_, h2_2k_, h3_2k_;
};

Real int_power_real(long n, int r);

// Harmonic sums computed directly for a single k.
Real basis_direct(Basis b, long k);

// Evaluates a weight spec against the running state.
class WeightEval {
public:
    explicit WeightEval(const WeightSpec& w);
    Real operator()(const HarmonicState& h) const;
    Real direct(long k) const;
    // Upper bound for |w(j)| valid for all j <= k (and growing slowly beyond).
    double bound(long k) const;

private:
    std::vector<Real> coeffs_;
    std::vector<Basis> bases_;
    std::vector<double> abs_coeffs_;
};

}  // namespace modzeta::detail
