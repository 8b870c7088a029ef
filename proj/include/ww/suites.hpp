#pragma once
// Acceptance suites shared by the CLI and the acceptance binary.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "ww/field.hpp"

namespace ww {

struct Check {
    std::string name;
    double value = 0.0;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool pass() const { return value >= lo && value <= hi; }  // NaN fails
    std::string bound() const;
};

struct Criterion {
    int id = 0;
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
};

struct SuiteOptions {
    GridSpec grid{};
    std::uint64_t seed = 20240101;
};

// identities, linear, conservation, scaling, consistency, packets, gamma, decay, structure
std::vector<std::string> suite_ids();
// "all" runs every suite in order. Throws UsageError for an unknown id.
std::vector<Criterion> run_suite(const std::string& id, const SuiteOptions& o = {});

// One line per criterion: id, measured, bound, PASS/FAIL (tab separated).
void print_report(std::ostream& os, const std::vector<Criterion>& crit);

}  // namespace ww
