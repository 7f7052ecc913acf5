#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace radalg::cli {

struct Caps {
    std::uint64_t oracle_level = 3;
    std::uint64_t explicit_w = 16;
    std::uint64_t e_member_budget = std::uint64_t{1} << 18;
    std::uint64_t growth_degree = 10;
    std::uint64_t max_power = 8;
};

struct Config {
    std::string field = "gf:2";
    std::string schedule = "paper";
    std::uint64_t depth = 16;
    Caps caps;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string out = "radalg-out";
    std::string provider = "zero";
    std::string state;  // load instead of building when set

    // Command arguments.
    std::string poly = "1*x";
    std::uint64_t quasi_length = 3;
    std::string matrix = "1*x,1*y;1*z,1*x";
    std::uint64_t horizon = 10000;
};

enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_config_error = 2 };

/// Validates the config; throws ConfigError with an actionable message.
void validate(const Config& c);

/// Runs one command, writing artifacts under c.out and a summary to os.
int run(const std::string& command, const Config& c, std::ostream& os);

}  // namespace radalg::cli
