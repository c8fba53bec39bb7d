#pragma once

#include "clonelab/core.hpp"
#include "clonelab/pqtree.hpp"
#include "clonelab/set_family.hpp"

namespace clonelab {

/// Societal axis: a linear order over candidates, leftmost end first.
struct Axis {
    std::vector<CandidateId> order;

    bool operator==(const Axis&) const = default;
};

/// True iff the ranking descends monotonically on both sides of its peak
/// along ax; equivalently, every top-t prefix is an interval of ax.
bool compatible(const LinearOrder& r, const Axis& ax);

/// True iff every voter's order is compatible with ax.
bool single_peaked_wrt(const Profile& p, const Axis& ax);

/// Witness-producing recognition. Builds the axis from the ends inward:
/// each round, the candidates ranked last among the unplaced ones must
/// occupy the two open ends (three or more distinct ones means failure);
/// the at-most-two side assignments per round are searched with per-voter
/// consumption pruning. The returned axis is re-verified before return.
std::optional<Axis> is_single_peaked(const Profile& p);

/// Testing oracle: try all m! axes. Requires m <= 8.
std::optional<Axis> brute_force_axis(const Profile& p);

/// The two peaks extreme along ax. Requires p single-peaked w.r.t. ax and
/// at least two distinct peaks; the pair is independent of the witnessing
/// axis (up to swapping ends).
std::pair<CandidateId, CandidateId> extreme_peaks(const Profile& p, const Axis& ax);

/// Partition of the candidates induced by a clone set D on an axis:
/// A1 > D1 > P > D2 > A2, with D = D1 u D2 split into its (at most two)
/// axis blocks. When D is contiguous, P is empty (what would be P merges
/// into A1) and D is split as D1 = all but its last axis element,
/// D2 = that last element.
struct ClonePartition {
    CandidateSet a1, d1, p, d2, a2;
};

ClonePartition clone_partition(const Profile& p, const Axis& ax, const CandidateSet& d);

enum class CloneType { First, Second };

/// First type iff D is contiguous in ax.
CloneType classify_clone_type(const Profile& p, const Axis& ax, const CandidateSet& d);

/// Greedy subtree decloning over the PQ-tree of p's clone structure:
/// starting all-black (everything collapsed), nodes are whitened in BFS
/// order whenever the induced decloned profile stays single-peaked. The
/// result is optimal among declonings that collapse whole subtrees.
struct SpDecloneOutcome {
    DecloneResult result;
    PQTree tree;
    std::vector<bool> black;  // final coloring, indexed like tree.nodes
};

SpDecloneOutcome basic_declone_sp(const Profile& p);

/// Optimal single-peaked decloning. Follows basic_declone_sp, except that
/// a blocked Q-node is additionally split two ways — (first child, rest)
/// and (rest, last child) — with the kept end expanded recursively; the
/// split keeping more candidates wins, ties going to the prefix split.
DecloneResult declone_sp(const Profile& p);

/// Testing oracle: exhaustive search over all sequences of clone-set
/// collapses (deduplicated by canonical profile), returning a
/// single-peaked result with maximum candidate count. Requires m <= 7.
DecloneResult brute_force_optimal_sp_declone(const Profile& p);

}  // namespace clonelab
