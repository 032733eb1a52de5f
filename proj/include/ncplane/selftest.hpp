#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncplane::selftest {

struct Report {
    int index;
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the full acceptance suite (every criterion at its stated tolerance).
std::vector<Report> run_all();

/// Prints one pass/fail line per criterion; returns overall success.
bool run_and_print(std::ostream& os);

}  // namespace ncplane::selftest
