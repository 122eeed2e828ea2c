/* End-to-end acceptance checks.  Each check prints exactly one PASS/FAIL
   line; the process exits 0 iff every check passes.  All comparisons are
   exact (rational or quadratic-irrational arithmetic). */

#include <cstdio>

#include "singlet/verification.hpp"

int main() {
    int failures = 0;
    for (const auto& r : singlet::run_verification_suite()) {
        std::printf("[%s] %2d %s\n", r.pass ? "PASS" : "FAIL", r.id, r.label.c_str());
        if (!r.note.empty()) std::printf("        %s\n", r.note.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all 10 checks passed\n");
        return 0;
    }
    std::printf("acceptance: %d check(s) failed\n", failures);
    return 1;
}
