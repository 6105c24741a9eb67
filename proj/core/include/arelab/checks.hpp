#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arelab {

struct CheckLine {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckLine> lines;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Suites exposed by the `check` subcommand: "constants" (null variances and
// the closed-form MICD anchors), "micd" (numeric vs closed-form curves and
// the >= 1 scan), "theorem" (ratio limits of the association-function
// expectations), "oracle" (fast statistics vs brute-force enumeration).
CheckReport run_check_suite(std::string_view suite);

void print_report(const CheckReport& report, std::ostream& out);

}  // namespace arelab
