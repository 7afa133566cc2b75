#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "mjets/app/scenarios.hpp"

using namespace mjets;

namespace {

const char* label(Outcome o) {
    switch (o) {
        case Outcome::pass:
            return "PASS";
        case Outcome::deviation:
            return "FAIL (documented deviation)";
        case Outcome::fail:
            return "FAIL";
    }
    return "?";
}

}  // namespace

// Arguments: criterion numbers to run (default all); -v also prints the
// scenario notes.
int main(int argc, char** argv) {
    bool verbose = false;
    std::vector<std::string> only;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "-v") {
            verbose = true;
        } else {
            only.emplace_back(argv[i]);
        }
    }
    int unexpected = 0;
    for (const Scenario& s : scenarios()) {
        if (!only.empty() && std::find(only.begin(), only.end(), std::to_string(s.criterion)) == only.end()) continue;
        const ScenarioResult r = run_scenario(s);
        const Outcome o = r.outcome();
        if (o == Outcome::fail) ++unexpected;
        char time[32];
        std::snprintf(time, sizeof time, "%.2f s", r.seconds);
        std::cout << "criterion " << r.criterion << ": " << label(o) << "  " << r.title << " [" << r.id << ", " << time
                  << "]" << std::endl;
        for (const Check& c : r.checks) {
            if (c.ok) continue;
            std::cout << "    " << (c.deviation.empty() ? "failed: " : "deviation: ") << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << std::endl;
            if (!c.deviation.empty()) std::cout << "      " << c.deviation << std::endl;
        }
        if (verbose) {
            for (const std::string& n : r.notes) std::cout << "    " << n << std::endl;
        }
    }
    return unexpected == 0 ? 0 : 1;
}
