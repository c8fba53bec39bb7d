#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clonelab {

/// Dense candidate index. Within one election the ids are exactly 0..m-1.
using CandidateId = int;

/// Sorted set of candidate ids, no duplicates.
using CandidateSet = std::vector<CandidateId>;

/// One voter's ranking, most preferred candidate first. Always a
/// permutation of 0..m-1.
struct LinearOrder {
    std::vector<CandidateId> ranking;

    bool operator==(const LinearOrder&) const = default;

    int size() const { return static_cast<int>(ranking.size()); }
    CandidateId top() const { return ranking.front(); }

    /// positions()[c] = rank of candidate c (0 = most preferred).
    std::vector<int> positions() const;
};

LinearOrder reverse_order(const LinearOrder& r);

/// A preference profile: m candidates, at least one voter, every order a
/// permutation of 0..m-1. Display names are optional and purely
/// presentational; all algorithms work on ids.
struct Profile {
    int m = 0;
    std::optional<std::vector<std::string>> names;
    std::vector<LinearOrder> orders;

    bool operator==(const Profile&) const = default;

    int voters() const { return static_cast<int>(orders.size()); }

    /// Throws std::invalid_argument if an invariant is broken.
    void validate() const;
};

/// Candidates ranked first by at least one voter.
CandidateSet peaks(const Profile& p);

/// Result of collapsing disjoint clone sets, each to one fresh candidate.
/// Survivors keep their relative numbering (0..k-1), fresh candidates are
/// appended in the order their sets were given.
struct DecloneResult {
    Profile profile;
    // (collapsed set in the original election, fresh id in the new one)
    std::vector<std::pair<CandidateSet, CandidateId>> mapping;
    std::map<CandidateId, CandidateId> survivors;
};

/// Replace each set's contiguous block with one fresh candidate, in every
/// voter's order. Every set must be contiguous in every order (i.e. a clone
/// set) and the sets must be pairwise disjoint; otherwise throws.
DecloneResult declone(const Profile& p, const std::vector<CandidateSet>& sets);

/// Parse error with 1-based location information.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Profile text format:
//   line 1:  m n
//   line 2:  names: n1,n2,...      (optional, m comma-separated tokens)
//   then n lines, each m comma-separated candidate names or indices,
//   most preferred first. '#' starts a comment. Serialization is
//   bit-exact: LF endings, no trailing whitespace, no comments.
Profile parse_profile(std::istream& in);
Profile parse_profile(const std::string& text);
Profile load_profile_file(const std::string& path);
std::string serialize_profile(const Profile& p);

// JSON mirror: {"m": int, "names": [...]?, "orders": [[ids...], ...]}.
std::string profile_to_json(const Profile& p, int indent = 2);
Profile profile_from_json(const std::string& json_text);

// {"profile": {...}, "mapping": [{"set": [...], "fresh": id}, ...],
//  "survivors": [[original, new], ...]}
std::string declone_result_to_json(const DecloneResult& r, int indent = 2);

}  // namespace clonelab
