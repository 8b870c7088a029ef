// Acceptance report: one line per criterion (id, suite, measured, bound, verdict).
// Exit status is non-zero when any criterion fails.

#include <iostream>

#include "ww/suites.hpp"

int main() {
    const auto crit = ww::run_suite("all");
    ww::print_report(std::cout, crit);
    for (const auto& c : crit)
        if (!c.pass()) return 1;
    return 0;
}
