#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "modzeta/arith.hpp"
#include "modzeta/constants.hpp"
#include "modzeta/eichler.hpp"
#include "modzeta/verify.hpp"

namespace modzeta::cli {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    long out = 0;
    try {
        out = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw UsageError(key + ": not an integer: " + v);
    }
    if (pos != v.size())
        throw UsageError(key + ": not an integer: " + v);
    return out;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

void apply_config(CliConfig& cfg, const std::map<std::string, std::string>& kv)
{
    for (const auto& [key, value] : kv) {
        if (key == "digits")
            cfg.digits = static_cast<int>(parse_long(key, value));
        else if (key == "suite")
            cfg.suite = value;
        else if (key == "jobs")
            cfg.jobs = static_cast<int>(parse_long(key, value));
        else if (key == "format")
            cfg.format = value;
        else if (key == "out")
            cfg.out = value;
        else if (key == "seed")
            cfg.seed = static_cast<unsigned long long>(parse_long(key, value));
        else
            throw UsageError("unknown config key: " + key);
    }
}

void validate(const CliConfig& cfg)
{
    if (cfg.digits < 10 || cfg.digits > 1000)
        throw UsageError("digits must lie in [10, 1000], got " + std::to_string(cfg.digits));
    if (cfg.jobs < 1)
        throw UsageError("jobs must be positive");
    if (cfg.format != "text" && cfg.format != "json")
        throw UsageError("format must be text or json");
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

// Exact rational "p/q", integer, or decimal.
Real parse_real(const std::string& text)
{
    if (text.empty())
        throw UsageError("empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational q = Rational::parse(text);
        return q.to_real();
    }
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '+' || ch == 'e' ||
              ch == 'E'))
            throw UsageError("not a number: " + text);
    return Real(text);
}

// "a", "bi", "a+bi", "a-bi", "i", "-i"; each part a rational or decimal.
Complex parse_complex(const std::string& raw)
{
    std::string s;
    for (char ch : raw)
        if (ch != ' ')
            s += ch;
    if (s.empty())
        throw UsageError("empty argument");
    if (s.back() != 'i')
        return Complex(parse_real(s));
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    Real imag;
    if (im.empty() || im == "+")
        imag = Real(1);
    else if (im == "-")
        imag = Real(-1);
    else
        imag = parse_real(im[0] == '+' ? im.substr(1) : im);
    return Complex(re.empty() ? Real(0) : parse_real(re), imag);
}

UhpPoint parse_point(const std::string& s)
{
    Complex z = parse_complex(s);
    if (z.im.sign() <= 0)
        throw UsageError("point must lie in the upper half-plane: " + s);
    return UhpPoint(z);
}

Basis parse_basis(const std::string& name)
{
    static const std::map<std::string, Basis> table = {
        {"ONE", Basis::ONE},
        {"H1_K", Basis::H1_K},
        {"H1_2K", Basis::H1_2K},
        {"H2_K", Basis::H2_K},
        {"H2_2K", Basis::H2_2K},
        {"H3_K", Basis::H3_K},
        {"H3_2K", Basis::H3_2K},
        {"INVSQ_2K1", Basis::INVSQ_2K1},
        {"H2_2K_TIMES_DH1", Basis::H2_2K_TIMES_DH1},
        {"H2_K_TIMES_DH1", Basis::H2_K_TIMES_DH1},
        {"H3MIX", Basis::H3MIX},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw UsageError("unknown weight basis: " + name);
    return it->second;
}

// "H2_2K,-1/4*H2_K": comma-separated [coeff*]BASIS terms.
WeightSpec parse_weight(const std::string& text)
{
    WeightSpec w;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, ',')) {
        term = trim(term);
        auto star = term.find('*');
        Rational coeff(1);
        std::string basis = term;
        if (star != std::string::npos) {
            coeff = Rational::parse(term.substr(0, star));
            basis = term.substr(star + 1);
        }
        w.add(coeff, parse_basis(basis));
    }
    if (w.terms().empty())
        throw UsageError("empty weight specification");
    return w;
}

long parse_int_arg(const std::string& s)
{
    return parse_long("argument", s);
}

void require_arity(const std::string& fn, const std::vector<std::string>& args, std::size_t lo, std::size_t hi)
{
    if (args.size() < lo || args.size() > hi)
        throw UsageError(fn + ": expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                         " arguments, got " + std::to_string(args.size()));
}

const std::vector<std::string> kFunctions = {"L",  "zeta", "G",  "E",  "eichler4", "eichler6", "lambda", "eta", "E2",
                                             "E4", "E6",   "K",  "binom3", "binom2", "Srz", "Trz", "Urz"};

Complex evaluate_function(const std::string& fn, const std::vector<std::string>& a, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (fn == "L") {
        require_arity(fn, a, 2, 2);
        return Complex(dirichlet_l(parse_int_arg(a[0]), parse_int_arg(a[1]), ctx));
    }
    if (fn == "zeta") {
        require_arity(fn, a, 1, 1);
        long s = parse_int_arg(a[0]);
        if (s < 2)
            throw UsageError("zeta: argument must be an integer >= 2");
        return Complex(const_zeta(s, ctx));
    }
    if (fn == "G") {
        require_arity(fn, a, 0, 0);
        return Complex(const_catalan(ctx));
    }
    if (fn == "E") {
        require_arity(fn, a, 2, 2);
        long s = parse_int_arg(a[1]);
        UhpPoint z = parse_point(a[0]);
        if (s == 2)
            return Complex(epstein2(z, ctx));
        if (s == 3)
            return Complex(epstein3(z, ctx));
        throw UsageError("E: s must be 2 or 3");
    }
    if (fn == "eichler4" || fn == "eichler6") {
        require_arity(fn, a, 1, 2);
        int order = a.size() > 1 ? static_cast<int>(parse_int_arg(a[1])) : 0;
        UhpPoint z = parse_point(a[0]);
        return fn == "eichler4" ? eichler4(z, order, ctx) : eichler6(z, order, ctx);
    }
    if (fn == "lambda" || fn == "eta" || fn == "E2" || fn == "E4" || fn == "E6") {
        require_arity(fn, a, 1, 1);
        UhpPoint z = parse_point(a[0]);
        if (fn == "lambda")
            return lambda_fn(z, ctx);
        if (fn == "eta")
            return eta(z, ctx);
        return eisenstein(z, fn[1] - '0', ctx);
    }
    if (fn == "K") {
        require_arity(fn, a, 1, 1);
        return ell_k(parse_complex(a[0]), ctx);
    }
    if (fn == "binom3") {
        require_arity(fn, a, 1, 4);
        Complex x = parse_complex(a[0]);
        LinearFactor f = LinearFactor::of(0, 1);
        if (a.size() >= 3)
            f = {parse_complex(a[1]), parse_complex(a[2])};
        else if (a.size() == 2)
            throw UsageError("binom3: give both a and b of the linear factor a k + b");
        WeightSpec w = a.size() == 4 ? parse_weight(a[3]) : WeightSpec::one();
        bool boundary = std::abs(64 * abs(x).to_double() - 1) < 1e-10;
        return binom3_series(x, f, w, ctx, boundary);
    }
    if (fn == "binom2") {
        require_arity(fn, a, 1, 2);
        WeightSpec w = a.size() == 2 ? parse_weight(a[1]) : WeightSpec::one();
        return binom2_series(parse_complex(a[0]), w, ctx);
    }
    if (fn == "Srz" || fn == "Trz" || fn == "Urz") {
        require_arity(fn, a, 2, 2);
        UhpPoint z = parse_point(a[0]);
        Rational r = Rational::parse(a[1]);
        if (fn == "Srz")
            return s_r(z, r, ctx);
        if (fn == "Trz")
            return t_r(z, r, ctx);
        return u_check(z, r, ctx);
    }
    throw UsageError("unknown function " + fn + "; available: " + join(kFunctions, ", "));
}

std::string format_value(const Complex& z, int digits)
{
    if (z.im.is_zero())
        return to_string(z.re, digits);
    return to_string(z, digits);
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open output file " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string table_text(const Report& report, int digits)
{
    std::ostringstream os;
    int shown = std::min(digits, 30);
    for (const auto& r : report.results) {
        os << r.id << "  " << (r.pass ? "pass" : "FAIL") << "\n";
        os << "    " << r.description << "\n";
        if (!r.error.empty()) {
            os << "    error: " << r.error << "\n";
            continue;
        }
        auto cut = [shown](const std::string& s) {
            // mantissa already has `digits` significant digits; shorten for display
            auto e = s.find('e');
            if (e == std::string::npos || s.find('i') != std::string::npos)
                return s;
            std::size_t keep = static_cast<std::size_t>(shown) + (s[0] == '-' ? 2 : 1);
            return s.substr(0, std::min(e, keep)) + s.substr(e);
        };
        os << "    computed    " << cut(r.lhs) << "\n";
        os << "    closed form " << cut(r.rhs) << "\n";
        os << "    residual    " << r.abs_residual << "\n";
    }
    os << report.passed << "/" << report.results.size() << " cells match to " << tolerance_digits(Tolerance::FULL, digits)
       << " digits (boundary cells " << tolerance_digits(Tolerance::BOUNDARY, digits) << ")\n";
    return os.str();
}

}  // namespace

int exit_code(const Report& report)
{
    return report.all_pass() ? kExitPass : kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"High-precision checks of Eichler-integral evaluations of harmonic binomial series", "modzeta"};
    app.require_subcommand(1);

    int digits = 0;
    int jobs = 0;
    std::string format, out_path, config_path, suite;
    unsigned long long seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--digits", digits, "decimal digits, 10..1000 (default 50 or MODZETA_DIGITS)");
        sub->add_option("--jobs", jobs, "worker threads");
        sub->add_option("--format", format, "text or json");
        sub->add_option("--out", out_path, "write output to this file");
        sub->add_option("--seed", seed, "seed for random-point suites");
        sub->add_option("--config", config_path, "flat key=value configuration file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
    add_common(verify);
    verify->add_option("--suite", suite, "suite name: " + join(suite_names(), ", "));

    CLI::App* eval = app.add_subcommand("eval", "evaluate a single function");
    add_common(eval);
    std::string fn;
    std::vector<std::string> fn_args;
    eval->add_option("function", fn, "one of " + join(kFunctions, ", "))->required();
    eval->add_option("args", fn_args, "rationals p/q or complex decimals a+bi");

    CLI::App* table = app.add_subcommand("table", "recompute a table of special values");
    add_common(table);
    std::string which;
    table->add_option("which", which, "h2 or h3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitPass;
        }
        err << "modzeta: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    CliConfig cfg;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    try {
        if (const char* env = std::getenv("MODZETA_DIGITS"))
            cfg.digits = static_cast<int>(parse_long("MODZETA_DIGITS", env));
        if (!config_path.empty())
            apply_config(cfg, read_config_file(config_path));
        if (sub->count("--digits"))
            cfg.digits = digits;
        if (sub->count("--jobs"))
            cfg.jobs = jobs;
        if (sub->count("--format"))
            cfg.format = format;
        if (sub->count("--out"))
            cfg.out = out_path;
        if (sub->count("--seed"))
            cfg.seed = seed;
        if (sub == verify && verify->count("--suite"))
            cfg.suite = suite;
        validate(cfg);
    } catch (const UsageError& e) {
        err << "modzeta: " << e.what() << "\n";
        return kExitUsage;
    }

    PrecisionCtx ctx(cfg.digits);
    RegistryOptions opts;
    opts.seed = cfg.seed;

    try {
        if (sub == verify) {
            if (!is_suite(cfg.suite)) {
                err << "modzeta: unknown suite '" << cfg.suite << "'; available: " << join(suite_names(), ", ")
                    << "\n";
                return kExitUsage;
            }
            Report report = run_suite(cfg.suite, ctx, cfg.jobs, opts);
            Output o(cfg.out, out);
            o.get() << (cfg.format == "json" ? report_json(report) : report_text(report));
            return exit_code(report);
        }
        if (sub == eval) {
            Complex v = evaluate_function(fn, fn_args, ctx);
            Output o(cfg.out, out);
            std::string text = format_value(v, cfg.digits);
            if (cfg.format == "json") {
                nlohmann::ordered_json j;
                j["function"] = fn;
                j["args"] = fn_args;
                j["digits"] = cfg.digits;
                j["value"] = text;
                o.get() << j.dump(2) << "\n";
            } else {
                o.get() << text << "\n";
            }
            return kExitPass;
        }
        if (which != "h2" && which != "h3") {
            err << "modzeta: table must be h2 or h3\n";
            return kExitUsage;
        }
        std::string name = which == "h2" ? "table-h2" : "table-h3";
        Report report = run_suite(name, ctx, cfg.jobs, opts);
        Output o(cfg.out, out);
        o.get() << (cfg.format == "json" ? report_json(report) : table_text(report, cfg.digits));
        return exit_code(report);
    } catch (const UsageError& e) {
        err << "modzeta: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "modzeta: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "modzeta: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace modzeta::cli
