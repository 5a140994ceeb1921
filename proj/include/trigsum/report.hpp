#pragma once

// Shared result type for verification checks. A run passes iff no check has
// status `fail`; `report_only_discrepancy` records a divergence that the
// surrounding evidence (independent computation routes agreeing with each
// other) attributes to the reference data rather than the implementation.

#include <string>
#include <vector>

namespace trigsum {

enum class CheckStatus { pass, fail, report_only_discrepancy };

struct CheckResult {
    std::string id;
    std::string desc;
    CheckStatus status = CheckStatus::pass;
    std::string lhs;
    std::string rhs;
    double elapsed_sec = 0.0;
};

using CheckReport = std::vector<CheckResult>;

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::report_only_discrepancy: return "report-only-discrepancy";
    }
    return "?";
}

inline bool report_passes(const CheckReport& r) {
    for (const auto& c : r)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

}  // namespace trigsum
