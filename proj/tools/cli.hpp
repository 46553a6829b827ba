#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modzeta/verify.hpp"

namespace modzeta::cli {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
    int digits = 50;
    std::string suite = "all";
    int jobs = 1;
    std::string format = "text";
    std::string out;
    unsigned long long seed = 20250101;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flat key=value file; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> read_config_file(const std::string& path);
void apply_config(CliConfig& cfg, const std::map<std::string, std::string>& kv);
void validate(const CliConfig& cfg);

int exit_code(const Report& report);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modzeta::cli
