#pragma once

// The acceptance battery: numbered, self-contained checks covering the
// statistical and analytic contracts of the whole pipeline.  Run by the
// dedicated acceptance binary (all of them) and by `gsee selftest` (the fast
// subset).

#include <cstdint>
#include <string>
#include <vector>

#include "gsee/problem.hpp"

namespace gsee::testkit {

struct CheckContext {
    std::uint64_t seed = 20240817;
    int workers = 1;
    // Path to the gsee CLI binary; required by the determinism check, which
    // re-runs commands as subprocesses.
    std::string cli_path;
    // Scales the production l1 closed form inside the l1 cross-check; a
    // value != 1 simulates a corrupted formula and must make that check
    // fail.  Used by `gsee selftest --mutate` to prove the suite has teeth.
    double l1_mutation = 1.0;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    int id;
    const char* name;
    bool fast;  // cheap enough for `gsee selftest`
    CheckResult (*fn)(const CheckContext&);
};

const std::vector<Check>& all_checks();
CheckResult run_check(const Check& check, const CheckContext& ctx);

// Shipped demo instances, duplicated here in code so the battery cannot be
// broken by editing data files.
ProblemInstance three_level_demo();
ProblemInstance two_level_demo();

}  // namespace gsee::testkit
