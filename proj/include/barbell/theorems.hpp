#pragma once

#include <string>
#include <vector>

namespace barbell {

// Named verification suites.  Each one re-checks a family of claims against
// an independent oracle (exhaustive enumeration, brute force, or a second
// computation route) and reports pass/fail with a one-line summary.  The
// `theorems` CLI command and the acceptance binary both run these.
struct TheoremResult {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

std::vector<std::string> theorem_names();

// Runs every suite whose name contains `filter` (all when empty).
std::vector<TheoremResult> run_theorems(const std::string& filter = "");

}  // namespace barbell
