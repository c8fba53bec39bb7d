#include "clonelab/clones.hpp"

#include <algorithm>

namespace clonelab {

bool is_clone_set(const Profile& p, const CandidateSet& x) {
    if (x.empty()) throw std::invalid_argument("is_clone_set: empty set");
    for (CandidateId c : x)
        if (c < 0 || c >= p.m) throw std::invalid_argument("is_clone_set: member out of range");
    const int k = static_cast<int>(x.size());
    for (const auto& r : p.orders) {
        auto pos = r.positions();
        int lo = p.m, hi = -1;
        for (CandidateId c : x) {
            lo = std::min(lo, pos[c]);
            hi = std::max(hi, pos[c]);
        }
        if (hi - lo + 1 != k) return false;
    }
    return true;
}

SetFamily all_clone_sets(const Profile& p) {
    const int m = p.m;
    const int n = p.voters();
    std::vector<std::vector<int>> pos(n);
    for (int v = 0; v < n; ++v) pos[v] = p.orders[v].positions();

    const auto& anchor = p.orders[0].ranking;
    SetFamily out;
    out.ground = m;
    // Extend [i, j] one candidate at a time, tracking each voter's min/max
    // position so every interval test is O(n).
    std::vector<int> lo(n), hi(n);
    for (int i = 0; i < m; ++i) {
        for (int v = 0; v < n; ++v) lo[v] = hi[v] = pos[v][anchor[i]];
        for (int j = i; j < m; ++j) {
            bool contiguous = true;
            for (int v = 0; v < n; ++v) {
                int q = pos[v][anchor[j]];
                lo[v] = std::min(lo[v], q);
                hi[v] = std::max(hi[v], q);
                if (hi[v] - lo[v] != j - i) contiguous = false;
            }
            if (contiguous) {
                CandidateSet s(anchor.begin() + i, anchor.begin() + j + 1);
                std::sort(s.begin(), s.end());
                out.sets.push_back(std::move(s));
            }
        }
    }
    out.canonicalize();
    return out;
}

SetFamily brute_force_clone_sets(const Profile& p) {
    if (p.m > 16) throw std::invalid_argument("brute_force_clone_sets: m too large");
    SetFamily out;
    out.ground = p.m;
    for (uint32_t mask = 1; mask < (1u << p.m); ++mask) {
        CandidateSet s;
        for (int c = 0; c < p.m; ++c)
            if (mask & (1u << c)) s.push_back(c);
        if (is_clone_set(p, s)) out.sets.push_back(std::move(s));
    }
    out.canonicalize();
    return out;
}

}  // namespace clonelab
