#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmcrot {

struct CheckResult {
    std::string suite; // module the check belongs to
    std::string id;
    bool pass = false;
    double residual = 0.0; // worst measured residual (check-specific meaning)
    double seconds = 0.0;
    std::string note;
};

// Run the library's invariant checks at desk scale. suite_filter selects one
// suite ("curvature", "potential", "period", "limits", "existence", "profile");
// empty runs everything. seed fixes the random parameter draws.
std::vector<CheckResult> run_verification(const std::string& suite_filter = "",
                                          std::uint64_t seed = 12345);

} // namespace cmcrot
