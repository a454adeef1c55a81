// Acceptance gate: runs the full reproduction battery and prints one
// pass/fail line per criterion.  Exit status is nonzero if anything fails.

#include <cstdio>

#include "latpol/checks.hpp"

int main() {
    bool all = true;
    for (const auto& r : latpol::checks::run_paper_suite()) {
        std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : " — ", r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
