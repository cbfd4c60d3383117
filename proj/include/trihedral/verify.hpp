#pragma once

#include <string>

namespace trihedral {
namespace verify {

struct Options {
    int level = 3;
    double tol = 1e-9;
};

struct Outcome {
    bool ok = false;
    std::string report;  // one pass/fail line per check, deterministic
};

// Runs the per-level verification table (the CLI's verify-all subcommand).
Outcome verify_all(const Options& opt);

}  // namespace verify
}  // namespace trihedral
