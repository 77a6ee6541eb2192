#pragma once

#include <string>
#include <vector>

namespace adem {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full self-verification suite: classical identities of the algebras, the
/// lifting sweep, pairing-matrix triangularity and rank, dimension series,
/// the phi and Sq-power propositions, action well-definedness, coalgebra
/// laws, and the rewriting-order properties. Everything is deterministic
/// and finishes in seconds.
std::vector<CheckResult> run_verification();

}  // namespace adem
