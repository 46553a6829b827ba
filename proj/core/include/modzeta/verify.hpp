#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "modzeta/series.hpp"

namespace modzeta {

// Weight-2 harmonic ratios over the central binomial cube and their Eichler
// integral counterparts.
struct QRatios {
    Complex q1_lhs, q1_rhs;
    Complex q2_lhs, q2_rhs;
};

struct RLinear {
    Complex r1_lhs, r1_rhs;
    Complex r2_lhs, r2_rhs;
};

struct H3Values {
    Complex lhs1, rhs1;
    Complex lhs2, rhs2;
};

QRatios q_ratios(const UhpPoint& z, const PrecisionCtx& ctx);
RLinear r_linear(const UhpPoint& z, const PrecisionCtx& ctx);
// Eichler-side combination that becomes a rational multiple of pi^2 at the
// special points for the right r.
Complex s_r(const UhpPoint& z, const Rational& r, const PrecisionCtx& ctx);
// Series-side r1 - r * r2.
Complex t_r(const UhpPoint& z, const Rational& r, const PrecisionCtx& ctx);
H3Values h3_ratios(const UhpPoint& z, const PrecisionCtx& ctx);
H3Values h3_linear(const UhpPoint& z, const PrecisionCtx& ctx);
// Eichler-side weight-3 linear combination lhs1 + r (lhs2 + Epstein part).
Complex u_check(const UhpPoint& z, const Rational& r, const PrecisionCtx& ctx);

// Linear factor (2(1 - 2 alpha4) k + R) / Im z used by the linear-in-k sums.
LinearFactor theorem_factor(const UhpPoint& z, const PrecisionCtx& ctx);

enum class Tolerance {
    FULL,       // digits - 5
    BOUNDARY,   // alternating boundary series, at most 30 digits required
    HALF,       // finite differences, digits / 2
    LATTICE,    // hardware-float lattice sums, 6 digits
};

int tolerance_digits(Tolerance t, int digits);
std::string tolerance_name(Tolerance t);

using Evaluator = std::function<Complex(const PrecisionCtx&)>;

struct IdentityRecord {
    std::string id;
    std::string suite;
    std::string description;
    Evaluator lhs;
    Evaluator rhs;
    std::string anchor;
    std::string independence;
    Tolerance tolerance = Tolerance::FULL;
};

struct RegistryOptions {
    std::uint64_t seed = 20250101;
    int random_points = 20;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite.
std::vector<IdentityRecord> suite_records(const std::string& suite, const RegistryOptions& opts = {});

struct IdentityResult {
    std::string id;
    std::string suite;
    std::string description;
    std::string lhs;
    std::string rhs;
    std::string abs_residual;
    double residual_log10 = 0;
    int required_digits = 0;
    bool pass = false;
    double elapsed_ms = 0;
    std::string error;
};

struct Report {
    std::string suite;
    int digits = 0;
    std::vector<IdentityResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string max_residual;
    double max_residual_log10 = 0;
    double elapsed_ms = 0;

    bool all_pass() const { return failed == 0; }
};

Report run_records(const std::string& suite, const std::vector<IdentityRecord>& records,
                   const PrecisionCtx& ctx, int jobs);
Report run_suite(const std::string& suite, const PrecisionCtx& ctx, int jobs,
                 const RegistryOptions& opts = {});

std::string report_json(const Report& report);
std::string report_text(const Report& report);

}  // namespace modzeta
