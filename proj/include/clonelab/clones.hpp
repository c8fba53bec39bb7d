#pragma once

#include "clonelab/core.hpp"
#include "clonelab/set_family.hpp"

namespace clonelab {

/// True iff every voter ranks the members of x consecutively.
bool is_clone_set(const Profile& p, const CandidateSet& x);

/// The clone structure C(R): every clone set of p, in canonical order.
/// Enumerates the O(m^2) intervals of voter 1's order and keeps those
/// contiguous for every other voter; a set contiguous in all orders is
/// necessarily an interval of voter 1's order.
SetFamily all_clone_sets(const Profile& p);

/// Testing oracle with the same contract, by exhausting all 2^m - 1
/// subsets. Requires m <= 16.
SetFamily brute_force_clone_sets(const Profile& p);

}  // namespace clonelab
