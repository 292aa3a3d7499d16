#pragma once

#include <string>
#include <vector>

namespace pslab {

enum class CheckStatus { pass, fail, corrected };

std::string to_string(CheckStatus s);

// One closed form whose printed source disagreed with enumeration, together
// with the correction that enumeration confirms.
struct Discrepancy {
    std::string formula;
    int n = 0;
    std::string printed;
    std::string corrected;
    std::string enumerated;
};

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::vector<std::string> failures;       // empty unless status == fail
    std::vector<Discrepancy> discrepancies;  // nonempty when status == corrected
};

struct VerifySuiteResult {
    int max_n = 0;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

// Runs every verification check.  Each check has its own ceiling (the range
// the claims are stated for); max_n lowers but never raises it.  filter, if
// nonempty, selects checks whose id contains it.
VerifySuiteResult run_verify_suite(int max_n, const std::string& filter = "");

std::vector<std::string> verify_check_ids();

}  // namespace pslab
