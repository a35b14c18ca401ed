#ifndef EMZ_ACCEPTANCE_HPP
#define EMZ_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace acceptance
{

struct Outcome
{
    int id = 0;
    bool pass = false;
    std::string name;
    std::string detail;
    double seconds = 0;
};

struct Options
{
    // emzeta executable used by the determinism criterion.
    std::string cli_path;
    // Skip the 10000-digit zero run (reported, and counted as a failure).
    bool skip_long = false;
    int workers = 1;
};

// "PASS 3 bound soundness: ..." / "FAIL ..."
std::string format_line(const Outcome &o);

// Runs criteria 1..10 in order, calling report after each one.
std::vector<Outcome> run_all(const Options &opts, const std::function<void(const Outcome &)> &report);

} // namespace acceptance

#endif
