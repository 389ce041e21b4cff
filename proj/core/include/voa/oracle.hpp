#pragma once

#include "voa/engine.hpp"

namespace voa {

/// State sum over a caterpillar chain with genus self-loops appended: every
/// labeling of the internal edges contributes the product of three-point
/// ranks at the vertices. Exponential; intended for small queries.
Int oracle_caterpillar(const VoaSpec& spec, const Insertion& ins, long long genus);

/// State sum over a balanced pair-of-pants tree (genus handled by summing
/// over dual module pairs first). Deliberately a different decomposition
/// from the chain so the two agree only if factorization holds.
Int oracle_tree(const VoaSpec& spec, const Insertion& ins, long long genus);

/// Computes both decompositions, fails hard on disagreement, returns the
/// common value.
Int rank_oracle(const VoaSpec& spec, const Insertion& ins, long long genus);

/// Rough number of vertex evaluations a caterpillar sum may visit; callers
/// use it to keep randomized queries within budget.
double oracle_cost_estimate(const VoaSpec& spec, const Insertion& ins, long long genus);

}  // namespace voa
