#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "modzeta/verify.hpp"

namespace modzeta {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string value_string(const Complex& z, int digits)
{
    if (z.im.is_zero())
        return to_string(z.re, digits);
    return to_string(z, digits);
}

IdentityResult evaluate(const IdentityRecord& rec, const PrecisionCtx& ctx)
{
    IdentityResult r;
    r.id = rec.id;
    r.suite = rec.suite;
    r.description = rec.description;
    r.required_digits = tolerance_digits(rec.tolerance, ctx.digits);
    auto t0 = Clock::now();
    try {
        PrecisionScope scope(ctx);
        Complex lhs = rec.lhs(ctx);
        Complex rhs = rec.rhs(ctx);
        Real res = abs(lhs - rhs);
        r.lhs = value_string(lhs, ctx.digits);
        r.rhs = value_string(rhs, ctx.digits);
        r.abs_residual = to_string(res, 6);
        r.residual_log10 = res.is_zero() ? -double(ctx.working_digits()) : res.log10_abs();
        r.pass = r.residual_log10 < -r.required_digits;
    } catch (const std::exception& e) {
        r.error = e.what();
        r.pass = false;
        r.residual_log10 = 0;
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace

Report run_records(const std::string& suite, const std::vector<IdentityRecord>& records, const PrecisionCtx& ctx,
                   int jobs)
{
    auto t0 = Clock::now();
    Report report;
    report.suite = suite;
    report.digits = ctx.digits;
    report.results.resize(records.size());

    std::size_t workers = std::max(1, jobs);
    workers = std::min(workers, std::max<std::size_t>(1, records.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++)
            report.results[i] = evaluate(records[i], ctx);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    std::sort(report.results.begin(), report.results.end(),
              [](const IdentityResult& a, const IdentityResult& b) { return a.id < b.id; });
    report.max_residual_log10 = -1e9;
    report.max_residual = "0";
    for (const auto& r : report.results) {
        (r.pass ? report.passed : report.failed)++;
        if (r.error.empty() && r.residual_log10 > report.max_residual_log10) {
            report.max_residual_log10 = r.residual_log10;
            report.max_residual = r.abs_residual;
        }
    }
    report.elapsed_ms = ms_since(t0);
    return report;
}

Report run_suite(const std::string& suite, const PrecisionCtx& ctx, int jobs, const RegistryOptions& opts)
{
    return run_records(suite, suite_records(suite, opts), ctx, jobs);
}

std::string report_json(const Report& report)
{
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["suite"] = r.suite;
        j["description"] = r.description;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["abs_residual"] = r.abs_residual;
        j["required_digits"] = r.required_digits;
        j["pass"] = r.pass;
        j["elapsed_ms"] = r.elapsed_ms;
        if (!r.error.empty())
            j["error"] = r.error;
        results.push_back(std::move(j));
    }
    nlohmann::ordered_json summary;
    summary["suite"] = report.suite;
    summary["digits"] = report.digits;
    summary["total"] = report.results.size();
    summary["passed"] = report.passed;
    summary["failed"] = report.failed;
    summary["max_residual"] = report.max_residual;
    summary["elapsed_ms"] = report.elapsed_ms;

    nlohmann::ordered_json out;
    out["results"] = std::move(results);
    out["summary"] = std::move(summary);
    return out.dump(2) + "\n";
}

std::string report_text(const Report& report)
{
    std::size_t width = 2;
    for (const auto& r : report.results)
        width = std::max(width, r.id.size());
    std::ostringstream os;
    char line[512];
    std::snprintf(line, sizeof line, "%-*s  %-4s  %-13s  %4s  %10s\n", int(width), "id", "ok", "residual", "need",
                  "ms");
    os << line;
    for (const auto& r : report.results) {
        std::string res = r.error.empty() ? r.abs_residual : "error";
        std::snprintf(line, sizeof line, "%-*s  %-4s  %-13s  %4d  %10.1f\n", int(width), r.id.c_str(),
                      r.pass ? "pass" : "FAIL", res.c_str(), r.required_digits, r.elapsed_ms);
        os << line;
        if (!r.error.empty())
            os << "    " << r.error << "\n";
    }
    os << "\n" << report.passed << "/" << report.results.size() << " passed, suite " << report.suite << ", "
       << report.digits << " digits, max residual " << report.max_residual << ", "
       << static_cast<long>(std::lround(report.elapsed_ms)) << " ms\n";
    return os.str();
}

}  // namespace modzeta
