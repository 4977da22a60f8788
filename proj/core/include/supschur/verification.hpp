#pragma once

// Result type shared by every identity verifier: a named list of exact
// checks, each either passing (zero residual) or carrying the size of the
// nonzero residual it found.

#include <cstdint>
#include <string>
#include <vector>

namespace supschur {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::size_t residual_terms = 0;  // term count of (actual - expected)
};

struct VerificationReport {
    unsigned r = 0;
    std::vector<CheckResult> checks;
    std::int64_t ms = 0;  // wall-clock duration of the whole run

    bool all_pass() const;
    /* {"r": n, "checks": [{"name": ..., "pass": ..., "residual_terms": ...},
        ...], "ms": t} */
    std::string to_json_string(int indent = 2) const;
    /* One line per check, e.g. "A3    pass" / "III22 FAIL (12 residual terms)". */
    std::string to_text() const;
};

}  // namespace supschur
