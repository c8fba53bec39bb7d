#pragma once

#include "clonelab/core.hpp"

namespace clonelab {

// Elementary operations on sorted CandidateSets.
CandidateSet set_union(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_intersection(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_difference(const CandidateSet& a, const CandidateSet& b);
bool is_subset(const CandidateSet& a, const CandidateSet& b);
bool intersects(const CandidateSet& a, const CandidateSet& b);
/// Nontrivial intersection: both share elements and both keep private ones.
bool crosses(const CandidateSet& a, const CandidateSet& b);

/// A collection of candidate subsets over ground set 0..m-1, kept in
/// canonical order (by size, then lexicographically). Families produced by
/// clone detection never contain the empty set; families loaded from JSON
/// may, so that the axiom checker can report it.
struct SetFamily {
    int ground = 0;
    std::vector<CandidateSet> sets;

    bool operator==(const SetFamily&) const = default;

    static SetFamily of(int ground, std::vector<CandidateSet> sets);

    int size() const { return static_cast<int>(sets.size()); }
    bool contains(const CandidateSet& x) const;
    void canonicalize();
};

/// All sets of f contained in e. The result is relabeled to ground 0..|e|-1
/// following e's sorted order; also returns e itself relabeled implicitly.
SetFamily subfamily_below(const SetFamily& f, const CandidateSet& e);

/// True iff e is the support of a subfamily of f: no set of f crosses e.
bool is_support(const SetFamily& f, const CandidateSet& e);

/// Embedding e(elem -> f): every set of e containing elem has elem replaced
/// by all of f's ground, and f's sets are added. Ids follow the slot
/// convention used by profile composition: f's candidate j becomes
/// elem + j, and e's candidates above elem shift up by |f| - 1.
SetFamily embed_family(const SetFamily& e, CandidateId elem, const SetFamily& f);

/// True iff f is exactly the interval family of some order over its ground
/// set; if so and order != nullptr, one such order is stored (the one whose
/// first element is the smaller endpoint).
bool is_string_of_sausages(const SetFamily& f, std::vector<CandidateId>* order = nullptr);

/// True iff f consists of the singletons plus the full ground set.
bool is_fat_sausage(const SetFamily& f);

// JSON: {"m": int, "sets": [[ids...], ...]} in canonical order.
std::string family_to_json(const SetFamily& f, int indent = 2);
SetFamily family_from_json(const std::string& json_text);

}  // namespace clonelab
