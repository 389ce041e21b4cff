#pragma once

#include <functional>
#include <string>
#include <vector>

#include "voa/engine.hpp"

namespace voa {

struct CheckResult {
    std::string law;
    bool pass = true;
    std::string witness;  // first counterexample, empty when pass
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Exhaustive small-bound checks of the identities rank computations rely
/// on: the product law for FA-matrices, the trace law, the averaging-matrix
/// identity, and agreement with the state-sum oracle. Failures carry the
/// first counterexample found.
VerifyReport verify_fa_properties(const FaEngine& engine, int max_n, int max_g,
                                  bool with_oracle = true);

/// Calls fn for every insertion multiset with total size <= max_n.
void for_each_multiset(int module_count, int max_n, const std::function<void(const Insertion&)>& fn);

}  // namespace voa
