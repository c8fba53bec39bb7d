#pragma once

#include "clonelab/core.hpp"
#include "clonelab/pqtree.hpp"
#include "clonelab/set_family.hpp"

namespace clonelab {

/// One voter ranking 0 > 1 > ... > m-1; its clone structure is the string
/// of sausages (all intervals).
Profile implement_string(int m);

/// A profile whose clone structure is the fat sausage over m candidates,
/// with the fewest voters possible: one for m = 2, two for even m > 3 and
/// odd m > 3 (interleaving constructions), three for m = 3.
Profile implement_fat(int m);

/// Substitute the profile f for candidate c of e, voter by voter. Voter
/// counts are equalized to max(|e|, |f|, 2) by repeating last orders. If
/// plain substitution leaks "parasite" clones across the boundary, f's
/// block in the last voter is reversed, which removes them. f's candidate
/// j becomes c + j; e's candidates above c shift up by |f| - 1.
Profile compose(const Profile& e, CandidateId c, const Profile& f);

/// A profile with at most three voters whose clone structure is exactly f:
/// one voter when f is a string of sausages, two when T(f) has no
/// three-child P-node, three otherwise. Throws if f fails the axioms.
Profile implement_family(const SetFamily& f);

/// m voters over m candidates: candidate 0 starts on top and moves down
/// one position per successive voter while 1..m-1 keep their order.
/// Single-crossing, and its clone structure is the fat sausage. m > 2.
Profile slide(int m);

/// A single-crossing profile whose clone structure is exactly f. Strings
/// use one voter, fat sausages use slides, and embeddings double the voter
/// count with the last block substituted through the child's successive
/// orders (the child's final order is the reverse of its first).
Profile implement_single_crossing(const SetFamily& f);

/// A profile that is single-peaked with respect to the left-to-right leaf
/// order of t and whose clone structure is tree_to_family(t). Requires
/// every Q-node's middle children (all but the first and last) to be
/// leaves; throws std::invalid_argument otherwise. This is a sufficient
/// condition only: some single-peaked structures fall outside it.
Profile implement_single_peaked_tree(const PQTree& t);

}  // namespace clonelab
