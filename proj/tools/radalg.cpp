// radalg: build, verify and explore the graded algebra level by level.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "radalg/errors.hpp"

int main(int argc, char** argv) {
    using namespace radalg::cli;
    Config c;
    std::string command;

    CLI::App app{"Exact construction and verification of a graded radical algebra"};
    app.set_config("--config", "", "Config file (key = value lines; flags override it)");
    app.add_option("command", command, "build | verify | witness | growth | quasi | nilpotency | matrix-demo | enum-check")
        ->required()
        ->check(CLI::IsMember({"build", "verify", "witness", "growth", "quasi", "nilpotency", "matrix-demo", "enum-check"}));
    app.add_option("--field", c.field, "rationals or gf:<prime>")->capture_default_str();
    app.add_option("--schedule", c.schedule, "paper | trivial | windows:(i,e);(i,e)...")->capture_default_str();
    app.add_option("--depth", c.depth, "levels to build")->capture_default_str();
    app.add_option("--caps.oracle_level", c.caps.oracle_level, "deepest explicit-oracle level")->capture_default_str();
    app.add_option("--caps.explicit_w", c.caps.explicit_w, "longest explicitly expanded w-word")->capture_default_str();
    app.add_option("--caps.e_member_budget", c.caps.e_member_budget, "largest exhaustive border count")->capture_default_str();
    app.add_option("--caps.growth_degree", c.caps.growth_degree, "highest degree in the growth table")->capture_default_str();
    app.add_option("--caps.max_power", c.caps.max_power, "highest power tried by nilpotency and matrix-demo")->capture_default_str();
    app.add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
    app.add_option("--out", c.out, "output directory")->capture_default_str();
    app.add_option("--provider", c.provider, "zero | residual")->capture_default_str();
    app.add_option("--state", c.state, "load a saved state instead of building");
    app.add_option("--poly", c.poly, "polynomial for quasi and nilpotency, e.g. \"1*xy + 2*z\"")->capture_default_str();
    app.add_option("--length", c.quasi_length, "number of terms of the truncated quasi-inverse")->capture_default_str();
    app.add_option("--matrix", c.matrix, "square matrix: rows separated by ';', entries by ','")->capture_default_str();
    app.add_option("--horizon", c.horizon, "enumeration horizon for enum-check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_config_error;
    }

    try {
        return run(command, c, std::cout);
    } catch (const radalg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
    } catch (const radalg::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\nresult: FAIL (incomplete)\n";
        return exit_check_failed;
    }
    return exit_config_error;
}
