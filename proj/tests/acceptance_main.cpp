// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure.

#include <cstdio>

#include "arlab/acceptance.hpp"

int main() {
    int failures = 0;
    for (const auto& r : arlab::run_acceptance_suite()) {
        std::printf("[%s] criterion %2d (%6.1fs): %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.seconds, r.name.c_str(), r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
