#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "modzeta/verify.hpp"

using namespace modzeta;

namespace {

using Clock = std::chrono::steady_clock;

struct Group {
    std::string label;
    std::string suite;
    std::function<bool(const std::string&)> keep;
    // required digits for an entry; boundary entries may ask for less
    std::function<int(const IdentityRecord&)> need;
    double max_entry_ms = 0;  // 0: no per-entry limit
    double max_total_ms = 0;  // 0: no limit on the group
    int min_count = 1;
};

struct Outcome {
    bool pass = true;
    int count = 0;
    double worst_margin = 1e9;  // digits beyond the requirement, smallest over entries
    std::string worst_id;
    double slowest_ms = 0;
    double total_ms = 0;
    std::vector<std::string> problems;
};

bool contains(const std::string& s, const char* part)
{
    return s.find(part) != std::string::npos;
}

Outcome run_group(const Group& g, const PrecisionCtx& ctx, int jobs)
{
    Outcome o;
    std::vector<IdentityRecord> recs;
    for (auto& r : suite_records(g.suite))
        if (g.keep(r.id))
            recs.push_back(std::move(r));
    std::vector<int> need(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i)
        need[i] = g.need(recs[i]);

    auto t0 = Clock::now();
    Report rep = run_records(g.suite, recs, ctx, jobs);
    o.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    o.count = static_cast<int>(rep.results.size());
    if (o.count < g.min_count) {
        o.pass = false;
        o.problems.push_back("expected at least " + std::to_string(g.min_count) + " entries");
    }
    // results come back sorted by id; look requirements up by id
    for (const auto& r : rep.results) {
        auto it = std::find_if(recs.begin(), recs.end(), [&](const IdentityRecord& x) { return x.id == r.id; });
        int req = need[it - recs.begin()];
        double margin = -r.residual_log10 - req;
        if (!r.error.empty()) {
            o.pass = false;
            o.problems.push_back(r.id + ": " + r.error);
            continue;
        }
        if (margin < o.worst_margin) {
            o.worst_margin = margin;
            o.worst_id = r.id;
        }
        if (margin <= 0) {
            o.pass = false;
            o.problems.push_back(r.id + ": residual " + r.abs_residual + " needs " + std::to_string(req) + " digits");
        }
        o.slowest_ms = std::max(o.slowest_ms, r.elapsed_ms);
        if (g.max_entry_ms > 0 && r.elapsed_ms > g.max_entry_ms) {
            o.pass = false;
            o.problems.push_back(r.id + ": took " + std::to_string(r.elapsed_ms) + " ms");
        }
    }
    if (g.max_total_ms > 0 && o.total_ms > g.max_total_ms) {
        o.pass = false;
        o.problems.push_back("group took " + std::to_string(o.total_ms) + " ms");
    }
    return o;
}

auto everything = [](const std::string&) { return true; };

std::function<int(const IdentityRecord&)> fixed(int d)
{
    return [d](const IdentityRecord&) { return d; };
}

// 45 digits, relaxed to 30 for the conditionally convergent boundary rate.
std::function<int(const IdentityRecord&)> full_or_boundary()
{
    return [](const IdentityRecord& r) { return r.tolerance == Tolerance::BOUNDARY ? 30 : 45; };
}

}  // namespace

int main()
{
    const PrecisionCtx ctx(50);
    const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    struct Criterion {
        int number;
        std::string title;
        std::vector<Group> groups;
    };

    auto lattice = [](const std::string& id) { return contains(id, "/lattice/"); };
    auto fd = [](const std::string& id) { return contains(id, "/fd-"); };
    auto integral = [](const std::string& id) { return contains(id, "-integral"); };

    std::vector<Criterion> criteria = {
        {1,
         "16/pi series at 50 digits, residual < 1e-45, < 1 s",
         {{"rate 4096", "ramanujan-classical", [](const std::string& id) { return contains(id, "/rate-4096"); },
           fixed(45), 1000, 1000, 1}}},
        {2,
         "weight-2 harmonic sums vanish, |sum| < 1e-45 (boundary >= 30 digits)",
         {{"sums", "sun-h2", everything, full_or_boundary(), 0, 0, 4}}},
        {3,
         "H2 variants, residual < 1e-45 (boundary >= 30 digits)",
         {{"variants", "h2-variants", everything, full_or_boundary(), 0, 0, 4}}},
        {4,
         "H3 family, residual < 1e-45 (boundary >= 30 digits)",
         {{"family", "h3", everything, full_or_boundary(), 0, 0, 6}}},
        {5,
         "main theorems at 6 points, >= 40 digits each, suite < 60 s",
         {{"points", "theorems-random", everything, fixed(40), 0, 60000, 60}}},
        {6,
         "both tables of special values, every cell >= 35 digits",
         {{"weight 2", "table-h2", everything, fixed(35), 0, 0, 32},
          {"weight 3", "table-h3", everything, fixed(35), 0, 0, 24}}},
        {7,
         "functional equations at 20 random z, residuals < 1e-45",
         {{"relations", "sum-rules", everything, fixed(45), 0, 0, 20 * 14}}},
        {8,
         "oracle equivalences: lattice 1e-6, finite differences digits/2, quadrature 25 digits",
         {{"lattice", "epstein-gz", lattice, fixed(6), 0, 0, 5},
          {"finite differences", "lemma-oracles", fd, fixed(25), 0, 0, 4},
          {"quadrature", "lemma-oracles", [fd](const std::string& id) { return !fd(id); }, fixed(25), 0, 0, 11}}},
        {9,
         "zeta(5), zeta(7), L(-4,4) by quadrature, >= 30 digits, each < 30 s",
         {{"integrals", "sec4", integral, fixed(30), 30000, 0, 3}}},
        {10,
         "hyperbolic and Eichler evaluations at 3 z each, >= 40 digits",
         {{"evaluations", "sec4", [integral](const std::string& id) { return !integral(id); }, fixed(40), 0, 0,
           3 * 7}}},
    };

    int failed = 0;
    std::printf("acceptance at %d digits, %d worker(s)\n", ctx.digits, jobs);
    for (const auto& c : criteria) {
        bool pass = true;
        std::string detail;
        std::vector<std::string> problems;
        for (const auto& g : c.groups) {
            Outcome o = run_group(g, ctx, jobs);
            pass = pass && o.pass;
            char buf[256];
            std::snprintf(buf, sizeof buf, "%s%s: %d checks, worst margin %.1f digits, slowest %.0f ms, total %.0f ms",
                          detail.empty() ? "" : "; ", g.label.c_str(), o.count, o.worst_margin, o.slowest_ms,
                          o.total_ms);
            detail += buf;
            problems.insert(problems.end(), o.problems.begin(), o.problems.end());
        }
        std::printf("criterion %2d: %s  %s [%s]\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                    detail.c_str());
        for (const auto& p : problems)
            std::printf("    %s\n", p.c_str());
        if (!pass)
            ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
