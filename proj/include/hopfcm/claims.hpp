#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hopfcm {

struct ClaimCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ClaimResult {
    std::string id;
    int criterion = 0;
    std::string title;
    std::vector<ClaimCheck> checks;
    double seconds = 0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

struct ClaimOptions {
    std::filesystem::path out_dir = "figures";  // CSV and plot-script outputs
};

struct ClaimInfo {
    std::string id;
    int criterion;
    std::string title;
};

std::vector<ClaimInfo> claim_list();
// Throws UsageError for an unknown id.
ClaimResult verify_claim(const std::string& id, const ClaimOptions& opt = {});

}  // namespace hopfcm
