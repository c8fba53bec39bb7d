#pragma once

#include "clonelab/set_family.hpp"

namespace clonelab {

enum class Axiom { A1, A2, A3, A4, A5 };
const char* axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::vector<CandidateSet> witnesses;
    std::string detail;
};

/// verdict is true iff violations is empty. At most one violation (the
/// first witness found in canonical order) is reported per axiom.
struct AxiomReport {
    bool verdict = false;
    std::vector<AxiomViolation> violations;

    bool violated(Axiom a) const;
};

std::string report_to_json(const AxiomReport& r, int indent = 2);

/// Cyclic sequence A_0..A_{k-1}, k >= 3, with A_{i-1} crossing A_i, empty
/// triple intersections and each set covered by its two neighbours
/// (indices mod k).
struct BicycleChain {
    std::vector<CandidateSet> chain;
};

/// Re-evaluates the three chain conditions on a candidate witness.
bool is_bicycle_chain(const std::vector<CandidateSet>& chain);

/// Checks richness and sparsity axioms:
///   A1: all singletons present, empty set absent, ground set present;
///   A2: union and intersection closure for intersecting pairs;
///   A3: difference closure for nontrivially intersecting pairs;
///   A4: every set has at most two proper minimal supersets.
AxiomReport check_axioms_a1_a4(const SetFamily& f);

/// All Z in f with X strictly inside Z and no member of f strictly between.
std::vector<CandidateSet> minimal_proper_supersets(const SetFamily& f, const CandidateSet& x);

/// Searches for a bicycle chain (axiom A5). Size-3 chains are found by
/// triple enumeration; longer ones through the directed graph on ordered
/// crossing pairs (X,Y) with an edge (X,Y)->(Y,Z) whenever X,Y,Z can be
/// consecutive chain members; a directed cycle decodes into a chain.
std::optional<BicycleChain> find_bicycle_chain(const SetFamily& f);

/// Full recognition: f is the clone structure of some profile iff it
/// satisfies A1-A5.
AxiomReport is_clone_structure(const SetFamily& f);

}  // namespace clonelab
