// Acceptance suite: one PASS/FAIL line per criterion, then the individual
// checks. Exit status is nonzero when any criterion fails.
#include "hopfcm/claims.hpp"

#include <cstdio>
#include <exception>

int main(int argc, char** argv) {
    hopfcm::ClaimOptions opt;
    if (argc > 1) opt.out_dir = argv[1];

    int failed = 0;
    for (const auto& info : hopfcm::claim_list()) {
        hopfcm::ClaimResult r;
        std::string error;
        try {
            r = hopfcm::verify_claim(info.id, opt);
        } catch (const std::exception& e) {
            r.id = info.id;
            r.criterion = info.criterion;
            r.title = info.title;
            error = e.what();
        }
        const bool pass = error.empty() && r.pass();
        failed += !pass;
        std::printf("%s criterion %d %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", info.criterion, info.id.c_str(),
                    info.title.c_str(), r.seconds);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (const auto& c : r.checks)
            std::printf("    [%s] %s\n        %s\n", c.pass ? "ok" : "failed", c.name.c_str(), c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(hopfcm::claim_list().size()) - failed,
                hopfcm::claim_list().size());
    return failed == 0 ? 0 : 1;
}
