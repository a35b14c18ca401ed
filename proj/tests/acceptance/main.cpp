#include "acceptance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app("desk-scale acceptance criteria");
    acceptance::Options opts;
    app.add_option("--cli", opts.cli_path, "emzeta executable for the determinism check");
    app.add_flag("--skip-long", opts.skip_long, "skip the 10000-digit zero run");
    app.add_option("--workers", opts.workers, "power-sum threads")->check(CLI::PositiveNumber);
    std::string log_path;
    app.add_option("--log", log_path, "also write the result lines to this file");
    CLI11_PARSE(app, argc, argv);

    std::ofstream log;
    if (!log_path.empty()) {
        log.open(log_path);
    }

    bool ok = true;
    acceptance::run_all(opts, [&](const acceptance::Outcome &o) {
        std::cout << acceptance::format_line(o) << std::endl;
        if (log) {
            log << acceptance::format_line(o) << std::endl;
        }
        ok = ok && o.pass;
    });
    return ok ? 0 : 1;
}
