#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "modzeta");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = modzeta::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& body)
{
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_SUITE("cli")
{
    using namespace modzeta::cli;

    TEST_CASE("verify a passing suite exits 0")
    {
        Result r = run_cli({"verify", "--suite", "ramanujan-classical", "--digits", "30"});
        CHECK(r.code == kExitPass);
        CHECK(r.out.find("4/4 passed") != std::string::npos);
    }

    TEST_CASE("usage errors exit 2")
    {
        CHECK(run_cli({"verify", "--suite", "nonsense"}).code == kExitUsage);
        CHECK(run_cli({"verify", "--digits", "5"}).code == kExitUsage);
        CHECK(run_cli({"verify", "--digits", "1001"}).code == kExitUsage);
        CHECK(run_cli({"verify", "--format", "xml"}).code == kExitUsage);
        CHECK(run_cli({"frobnicate"}).code == kExitUsage);
        CHECK(run_cli({"eval", "nosuchfunction", "1"}).code == kExitUsage);
        CHECK(run_cli({"table", "h4"}).code == kExitUsage);
        Result r = run_cli({"verify", "--suite", "nonsense"});
        CHECK(r.err.find("ramanujan-classical") != std::string::npos);
    }

    TEST_CASE("a failing report maps to exit 1")
    {
        modzeta::Report ok, bad;
        bad.failed = 1;
        CHECK(exit_code(ok) == kExitPass);
        CHECK(exit_code(bad) == kExitFail);
    }

    TEST_CASE("eval prints values")
    {
        Result r = run_cli({"eval", "K", "0", "--digits", "20"});
        CHECK(r.code == kExitPass);
        CHECK(r.out.rfind("1.5707963267948966192", 0) == 0);
        Result j = run_cli({"eval", "zeta", "3", "--digits", "20", "--format", "json"});
        REQUIRE(j.code == kExitPass);
        auto v = nlohmann::json::parse(j.out);
        CHECK(v["function"] == "zeta");
        CHECK(std::string(v["value"]).rfind("1.202056903159594285", 0) == 0);
    }

    TEST_CASE("config file is read and flags override it")
    {
        fs::path cfg = write_temp("modzeta_test.cfg", "# comment\ndigits = 25\nsuite=h2-variants\n\nformat=json\n");
        Result r = run_cli({"verify", "--config", cfg.string()});
        REQUIRE(r.code == kExitPass);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["summary"]["digits"] == 25);
        CHECK(j["summary"]["suite"] == "h2-variants");

        Result o = run_cli({"verify", "--config", cfg.string(), "--digits", "35"});
        REQUIRE(o.code == kExitPass);
        CHECK(nlohmann::json::parse(o.out)["summary"]["digits"] == 35);
        fs::remove(cfg);
    }

    TEST_CASE("unknown and malformed config keys are rejected")
    {
        fs::path bad = write_temp("modzeta_bad.cfg", "digits=30\ncolour=blue\n");
        CHECK(run_cli({"verify", "--config", bad.string()}).code == kExitUsage);
        fs::path junk = write_temp("modzeta_junk.cfg", "digits\n");
        CHECK(run_cli({"verify", "--config", junk.string()}).code == kExitUsage);
        CHECK(run_cli({"verify", "--config", "/nonexistent/modzeta.cfg"}).code == kExitUsage);
        fs::remove(bad);
        fs::remove(junk);
    }

    TEST_CASE("digits from the environment sit below the config file")
    {
        setenv("MODZETA_DIGITS", "40", 1);
        Result r = run_cli({"verify", "--suite", "ramanujan-classical", "--format", "json"});
        CHECK(nlohmann::json::parse(r.out)["summary"]["digits"] == 40);
        fs::path cfg = write_temp("modzeta_env.cfg", "digits=20\n");
        Result c = run_cli({"verify", "--suite", "ramanujan-classical", "--format", "json", "--config", cfg.string()});
        CHECK(nlohmann::json::parse(c.out)["summary"]["digits"] == 20);
        setenv("MODZETA_DIGITS", "7", 1);
        CHECK(run_cli({"verify", "--suite", "ramanujan-classical"}).code == kExitUsage);
        unsetenv("MODZETA_DIGITS");
        fs::remove(cfg);
    }

    TEST_CASE("output file receives the report")
    {
        fs::path out = fs::temp_directory_path() / "modzeta_out.json";
        Result r = run_cli({"table", "h2", "--digits", "30", "--format", "json", "--out", out.string()});
        CHECK(r.code == kExitPass);
        std::ifstream in(out);
        auto j = nlohmann::json::parse(in);
        CHECK(j["summary"]["total"] == 32);
        fs::remove(out);
    }
}
