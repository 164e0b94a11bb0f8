#pragma once

// Formula-versus-oracle sweep over D_n for a range of n, backing the CLI
// `verify` subcommand.

#include <string>
#include <vector>

#include "dihedral/modring.hpp"

namespace dihedral {

struct VerifyOptions {
    Int min_n = 3;
    Int max_n = 30;
    Int max_k = 4;
    /// Pairwise conjugacy searches run only up to this n.
    Int equivalence_max_n = 24;
};

struct CheckResult {
    Int n;
    std::string check;
    bool ok;
    std::string detail;  // first mismatch, empty when ok
};

struct VerifyReport {
    std::vector<CheckResult> results;  // sorted by n, then check order

    bool ok() const;
    std::size_t failures() const;
};

/// Runs every check for one n.
std::vector<CheckResult> verify_modulus(Modulus n, const VerifyOptions& options);

/// Fans out over n and merges the results in ascending n.
VerifyReport verify_sweep(const VerifyOptions& options);

}  // namespace dihedral
