#pragma once

#include <array>

#include "clonelab/core.hpp"
#include "clonelab/set_family.hpp"

namespace clonelab {

/// Order in which voters sit along the spectrum, first voter first.
struct VoterOrder {
    std::vector<int> order;

    bool operator==(const VoterOrder&) const = default;
};

/// True iff for every candidate pair the preference switches at most once
/// when voters are read in the given order.
bool single_crossing_wrt(const Profile& p, const VoterOrder& ord);

/// Witness-producing recognition. For each choice of first voter, builds
/// the directed voter graph with an edge j -> k whenever some candidate
/// pair has j agreeing with the first voter and k disagreeing; an acyclic
/// graph yields the witness by topological order. Voters are tried in
/// index order and the witness is re-verified before return.
std::optional<VoterOrder> is_single_crossing(const Profile& p);

/// Testing oracle: try all n! voter orders. Requires n <= 8.
std::optional<VoterOrder> brute_force_sc(const Profile& p);

/// For every pair whose preference switches at least twice along ord, the
/// smallest clone set containing it (the span closure over all voters).
/// Closures of distinct pairs may cross, but the maximal ones are always
/// pairwise disjoint.
std::vector<CandidateSet> sc_violation_closures(const Profile& p, const VoterOrder& ord);

/// Collapse the maximal violation closures. The output is single-crossing
/// with respect to ord and keeps the maximum number of candidates among
/// all declonings that are single-crossing with respect to ord.
DecloneResult sc_declone_fixed(const Profile& p, const VoterOrder& ord);

/// Exhaustive search over clone-set collapses (deduplicated by canonical
/// profile, best candidate count first) for a single-crossing decloning
/// with at least k candidates; absent if none exists. Throws if the search
/// exceeds max_states explored profiles.
std::optional<DecloneResult> sc_declone_exact(const Profile& p, int k, int max_states = 100000);

/// Exact Cover by 3-Sets instance: base set 0..3k-1 and 3-element subsets.
struct X3CInstance {
    int k = 0;
    std::vector<std::array<int, 3>> sets;
};

/// One set per line, three whitespace-separated element indices. The base
/// size 3k is inferred from the largest element unless `base` is given.
X3CInstance parse_x3c(std::istream& in, int base = -1);

struct X3CReduction {
    Profile profile;
    long long target = 0;            // candidate count to ask the solver for
    std::vector<CandidateSet> groups;  // groups[j] encodes input set j
};

/// Decloning instance such that a single-crossing decloning with at least
/// `target` candidates exists iff the X3C instance has an exact cover.
/// The set list is padded by cyclic duplication until s > 3k. Over the
/// candidate set this builds a slide over s slots, each slot blown up to a
/// 6s-candidate slide with voter swaps tied to the slot's base elements.
X3CReduction x3c_reduction(const X3CInstance& inst);

}  // namespace clonelab
