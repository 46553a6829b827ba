#include <algorithm>
#include <set>

#include "json.hpp"
#include "oracle.hpp"

#include "modzeta/constants.hpp"
#include "modzeta/modular.hpp"
#include "modzeta/verify.hpp"

using namespace modzeta;

namespace {

IdentityRecord constant_record(const std::string& id, long lhs, long rhs)
{
    IdentityRecord r;
    r.id = id;
    r.suite = "synthetic";
    r.description = "synthetic";
    r.lhs = [lhs](const PrecisionCtx&) { return Complex(lhs); };
    r.rhs = [rhs](const PrecisionCtx&) { return Complex(rhs); };
    r.tolerance = Tolerance::FULL;
    return r;
}

double residual_of(const Report& r, const std::string& id)
{
    for (const auto& x : r.results)
        if (x.id == id)
            return x.residual_log10;
    FAIL("missing id " << id);
    return 0;
}

}  // namespace

TEST_SUITE("verify")
{
    TEST_CASE("tolerance classes")
    {
        CHECK(tolerance_digits(Tolerance::FULL, 50) == 45);
        CHECK(tolerance_digits(Tolerance::BOUNDARY, 50) == 30);
        CHECK(tolerance_digits(Tolerance::BOUNDARY, 30) == 25);
        CHECK(tolerance_digits(Tolerance::HALF, 50) == 25);
        CHECK(tolerance_digits(Tolerance::LATTICE, 50) == 6);
    }

    TEST_CASE("suite registry")
    {
        auto names = suite_names();
        CHECK(std::find(names.begin(), names.end(), "all") != names.end());
        CHECK(std::find(names.begin(), names.end(), "sec4") != names.end());
        CHECK(is_suite("ramanujan-classical"));
        CHECK_FALSE(is_suite("nonsense"));
        CHECK_THROWS_AS(suite_records("nonsense"), std::invalid_argument);

        auto all = suite_records("all");
        std::set<std::string> ids;
        for (const auto& r : all) {
            CHECK(r.id.rfind(r.suite + "/", 0) == 0);
            ids.insert(r.id);
        }
        CHECK(ids.size() == all.size());
        CHECK(all.size() > 400);
    }

    TEST_CASE("random points follow the seed")
    {
        RegistryOptions a, b;
        b.seed = a.seed + 1;
        auto ra = suite_records("sum-rules", a);
        auto ra2 = suite_records("sum-rules", a);
        auto rb = suite_records("sum-rules", b);
        REQUIRE(ra.size() == rb.size());
        CHECK(ra.size() == 20 * 14);
        CHECK(ra.front().description == ra2.front().description);
        CHECK(ra.front().description != rb.front().description);
    }

    TEST_CASE("weight-2 ratios at sqrt(3) i / 2")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        UhpPoint z(Real(0), sqrt(Real(3)) / 2);
        QRatios q = q_ratios(z, c);
        CHECK_DIGITS(q.q1_lhs, q.q1_rhs, 45);
        CHECK_DIGITS(q.q2_lhs, q.q2_rhs, 45);
        RLinear r = r_linear(z, c);
        CHECK_DIGITS(r.r1_lhs, r.r1_rhs, 45);
        CHECK_DIGITS(r.r2_lhs, r.r2_rhs, 45);
    }

    TEST_CASE("T_r at 1/2 + i is -pi/96")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        UhpPoint z(Rational(1, 2).to_real(), Real(1));
        CHECK_DIGITS(t_r(z, Rational(1, 16), c), -oracle::mpfr_const_pi_raw() / 96, 45);
    }

    TEST_CASE("weight-3 ratios and linear forms at 1.3 i")
    {
        PrecisionCtx c(50);
        PrecisionScope s(c);
        UhpPoint z(Real(0), Real("1.3"));
        H3Values h = h3_ratios(z, c);
        CHECK_DIGITS(h.lhs1, h.rhs1, 45);
        CHECK_DIGITS(h.lhs2, h.rhs2, 45);
        H3Values l = h3_linear(z, c);
        CHECK_DIGITS(l.lhs1, l.rhs1, 45);
        CHECK_DIGITS(l.lhs2, l.rhs2, 45);
    }

    TEST_CASE("points off the admissible lines are rejected")
    {
        PrecisionCtx c(30);
        PrecisionScope s(c);
        UhpPoint z(Real("0.2"), Real(1));
        CHECK_THROWS_AS(q_ratios(z, c), DomainError);
        CHECK_THROWS_AS(h3_linear(z, c), DomainError);
    }

    TEST_CASE("empty record list gives an empty passing report")
    {
        Report r = run_records("empty", {}, PrecisionCtx(30), 4);
        CHECK(r.results.empty());
        CHECK(r.all_pass());
        CHECK(r.passed == 0);
        CHECK(r.failed == 0);
    }

    TEST_CASE("failures and thrown errors are counted")
    {
        std::vector<IdentityRecord> recs{constant_record("synthetic/equal", 3, 3),
                                         constant_record("synthetic/unequal", 3, 4)};
        IdentityRecord boom = constant_record("synthetic/throws", 0, 0);
        boom.lhs = [](const PrecisionCtx&) -> Complex { throw DomainError("no value here"); };
        recs.push_back(boom);
        Report r = run_records("synthetic", recs, PrecisionCtx(30), 2);
        CHECK(r.passed == 1);
        CHECK(r.failed == 2);
        CHECK_FALSE(r.all_pass());
        CHECK(r.results[2].id == "synthetic/unequal");
        CHECK(r.results[1].error == "no value here");
        CHECK(report_text(r).find("FAIL") != std::string::npos);
    }

    TEST_CASE("serial and parallel runs agree")
    {
        PrecisionCtx c(30);
        Report a = run_suite("ramanujan-classical", c, 1);
        Report b = run_suite("ramanujan-classical", c, 3);
        REQUIRE(a.results.size() == b.results.size());
        for (std::size_t i = 0; i < a.results.size(); ++i) {
            CHECK(a.results[i].id == b.results[i].id);
            CHECK(a.results[i].abs_residual == b.results[i].abs_residual);
            CHECK(a.results[i].lhs == b.results[i].lhs);
        }
    }

    TEST_CASE("JSON report round trip")
    {
        Report r = run_suite("h2-variants", PrecisionCtx(30), 1);
        auto j = nlohmann::json::parse(report_json(r));
        CHECK(j["summary"]["total"] == r.results.size());
        CHECK(j["summary"]["passed"] == r.passed);
        CHECK(j["summary"]["digits"] == 30);
        REQUIRE(j["results"].size() == r.results.size());
        for (std::size_t i = 0; i < r.results.size(); ++i) {
            CHECK(j["results"][i]["id"] == r.results[i].id);
            CHECK(j["results"][i]["abs_residual"] == r.results[i].abs_residual);
            CHECK(j["results"][i]["pass"] == r.results[i].pass);
        }
    }

    TEST_CASE("residuals shrink when the precision doubles")
    {
        Report lo = run_suite("ramanujan-classical", PrecisionCtx(30), 1);
        Report hi = run_suite("ramanujan-classical", PrecisionCtx(60), 1);
        for (const auto& r : lo.results) {
            CAPTURE(r.id);
            CHECK(residual_of(hi, r.id) < r.residual_log10 - 20);
        }
    }
}
