#include "ncplane/selftest.hpp"

#include <ostream>

namespace ncplane::selftest {

std::vector<Report> run_all() { return {}; }

bool run_and_print(std::ostream& os) {
    bool all = true;
    for (const auto& r : run_all()) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << ": " << r.name;
        if (!r.detail.empty()) os << " — " << r.detail;
        os << "\n";
        all = all && r.pass;
    }
    return all;
}

}  // namespace ncplane::selftest
