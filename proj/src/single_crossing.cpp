#include "clonelab/single_crossing.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "clonelab/clones.hpp"
#include "clonelab/synthesis.hpp"

namespace clonelab {

bool single_crossing_wrt(const Profile& p, const VoterOrder& ord) {
    const int n = p.voters();
    if (static_cast<int>(ord.order.size()) != n) return false;
    std::vector<std::vector<int>> pos(n);
    for (int t = 0; t < n; ++t) pos[t] = p.orders[ord.order[t]].positions();
    for (CandidateId x = 0; x < p.m; ++x)
        for (CandidateId y = x + 1; y < p.m; ++y) {
            bool prev = pos[0][x] < pos[0][y];
            int switches = 0;
            for (int t = 1; t < n; ++t) {
                bool cur = pos[t][x] < pos[t][y];
                if (cur != prev) {
                    if (++switches > 1) return false;
                    prev = cur;
                }
            }
        }
    return true;
}

namespace {

// One bit per unordered candidate pair {x, y}, x < y: set iff the voter
// prefers x to y.
struct PairBits {
    int m = 0;
    int words = 0;
    std::vector<std::vector<uint64_t>> per_voter;

    PairBits(const Profile& p) : m(p.m) {
        const long long pairs = static_cast<long long>(m) * (m - 1) / 2;
        words = static_cast<int>((pairs + 63) / 64);
        per_voter.assign(p.voters(), std::vector<uint64_t>(words, 0));
        for (int v = 0; v < p.voters(); ++v) {
            const auto& r = p.orders[v].ranking;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    CandidateId cx = r[a], cy = r[b];  // cx preferred
                    if (cx < cy) {
                        long long t = static_cast<long long>(cx) * m -
                                      static_cast<long long>(cx) * (cx + 1) / 2 + (cy - cx - 1);
                        per_voter[v][t >> 6] |= 1ull << (t & 63);
                    }
                }
        }
    }
};

}  // namespace

std::optional<VoterOrder> is_single_crossing(const Profile& p) {
    const int n = p.voters();
    if (n == 1) return VoterOrder{{0}};
    PairBits bits(p);
    const int W = bits.words;

    std::vector<std::vector<uint64_t>> diff(n, std::vector<uint64_t>(W));
    for (int first = 0; first < n; ++first) {
        for (int j = 0; j < n; ++j)
            for (int w = 0; w < W; ++w)
                diff[j][w] = bits.per_voter[j][w] ^ bits.per_voter[first][w];

        // edge j -> k iff some pair has j agreeing with `first` and k not,
        // i.e. diff[k] is not a subset of diff[j].
        auto edge = [&](int j, int k) {
            for (int w = 0; w < W; ++w)
                if (diff[k][w] & ~diff[j][w]) return true;
            return false;
        };
        bool cyclic = false;
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (int j = 0; j < n && !cyclic; ++j)
            for (int k = j + 1; k < n && !cyclic; ++k) {
                bool jk = edge(j, k);
                bool kj = edge(k, j);
                if (jk && kj) cyclic = true;  // two-cycle, no topological order
                adj[j][k] = jk;
                adj[k][j] = kj;
            }
        if (cyclic) continue;

        std::vector<int> indeg(n, 0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (adj[j][k]) ++indeg[k];
        VoterOrder out;
        std::set<int> ready;
        for (int j = 0; j < n; ++j)
            if (indeg[j] == 0) ready.insert(j);
        while (!ready.empty()) {
            int j = *ready.begin();
            ready.erase(ready.begin());
            out.order.push_back(j);
            for (int k = 0; k < n; ++k)
                if (adj[j][k] && --indeg[k] == 0) ready.insert(k);
        }
        if (static_cast<int>(out.order.size()) != n) continue;  // longer cycle
        if (!single_crossing_wrt(p, out))
            throw std::logic_error("is_single_crossing: witness failed");
        return out;
    }
    return std::nullopt;
}

std::optional<VoterOrder> brute_force_sc(const Profile& p) {
    if (p.voters() > 8) throw std::invalid_argument("brute_force_sc: n too large");
    VoterOrder ord;
    for (int i = 0; i < p.voters(); ++i) ord.order.push_back(i);
    do {
        if (single_crossing_wrt(p, ord)) return ord;
    } while (std::next_permutation(ord.order.begin(), ord.order.end()));
    return std::nullopt;
}

namespace {

// Smallest clone set containing seed: close under spans in every voter.
CandidateSet span_closure(const Profile& p, CandidateSet seed) {
    std::vector<char> in(p.m, 0);
    for (CandidateId c : seed) in[c] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& r : p.orders) {
            int lo = p.m, hi = -1;
            for (int i = 0; i < p.m; ++i)
                if (in[r.ranking[i]]) {
                    lo = std::min(lo, i);
                    hi = std::max(hi, i);
                }
            for (int i = lo; i <= hi; ++i)
                if (!in[r.ranking[i]]) {
                    in[r.ranking[i]] = 1;
                    grew = true;
                }
        }
    }
    CandidateSet out;
    for (CandidateId c = 0; c < p.m; ++c)
        if (in[c]) out.push_back(c);
    return out;
}

}  // namespace

std::vector<CandidateSet> sc_violation_closures(const Profile& p, const VoterOrder& ord) {
    const int n = p.voters();
    if (static_cast<int>(ord.order.size()) != n)
        throw std::invalid_argument("sc_violation_closures: order size mismatch");
    std::vector<std::vector<int>> pos(n);
    for (int t = 0; t < n; ++t) pos[t] = p.orders[ord.order[t]].positions();

    std::set<CandidateSet> closures;
    for (CandidateId x = 0; x < p.m; ++x)
        for (CandidateId y = x + 1; y < p.m; ++y) {
            bool prev = pos[0][x] < pos[0][y];
            int switches = 0;
            for (int t = 1; t < n && switches < 2; ++t) {
                bool cur = pos[t][x] < pos[t][y];
                if (cur != prev) {
                    ++switches;
                    prev = cur;
                }
            }
            if (switches >= 2) closures.insert(span_closure(p, {x, y}));
        }
    return {closures.begin(), closures.end()};
}

DecloneResult sc_declone_fixed(const Profile& p, const VoterOrder& ord) {
    auto closures = sc_violation_closures(p, ord);
    std::vector<CandidateSet> maximal;
    for (const auto& c : closures) {
        bool is_max = true;
        for (const auto& d : closures)
            if (c != d && is_subset(c, d)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(c);
    }
    DecloneResult res = declone(p, maximal);
    VoterOrder same = ord;
    if (!single_crossing_wrt(res.profile, same))
        throw std::logic_error("sc_declone_fixed: result not single-crossing");
    return res;
}

std::optional<DecloneResult> sc_declone_exact(const Profile& p, int k, int max_states) {
    if (k < 1) throw std::invalid_argument("sc_declone_exact: k must be positive");
    if (k > p.m) return std::nullopt;

    struct State {
        Profile prof;
        std::vector<CandidateSet> groups;
    };
    auto key_of = [](const Profile& q) {
        Profile bare = q;
        bare.names.reset();
        return serialize_profile(bare);
    };

    State start;
    start.prof = p;
    start.prof.names.reset();
    for (CandidateId c = 0; c < p.m; ++c) start.groups.push_back({c});

    // Best-first on candidate count so the first single-crossing hit has
    // the most candidates; key breaks ties deterministically.
    using QKey = std::pair<int, std::string>;
    std::map<QKey, State> frontier;
    std::set<std::string> seen;
    auto push = [&](State st) {
        if (st.prof.m < k) return;
        std::string key = key_of(st.prof);
        if (!seen.insert(key).second) return;
        if (static_cast<int>(seen.size()) > max_states)
            throw std::invalid_argument("sc_declone_exact: instance too large");
        frontier.emplace(QKey{-st.prof.m, std::move(key)}, std::move(st));
    };
    push(std::move(start));

    while (!frontier.empty()) {
        auto it = frontier.begin();
        State st = std::move(it->second);
        frontier.erase(it);
        if (is_single_crossing(st.prof)) {
            std::vector<CandidateSet> collapse;
            for (const auto& g : st.groups)
                if (g.size() >= 2) collapse.push_back(g);
            return declone(p, collapse);
        }
        auto fam = all_clone_sets(st.prof);
        for (const auto& x : fam.sets) {
            if (x.size() < 2) continue;
            bool minimal = true;
            for (const auto& y : fam.sets)
                if (y.size() >= 2 && y.size() < x.size() && is_subset(y, x)) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            auto dr = declone(st.prof, {x});
            State nxt;
            nxt.prof = dr.profile;
            nxt.prof.names.reset();
            nxt.groups.assign(nxt.prof.m, {});
            for (auto [orig, nid] : dr.survivors) nxt.groups[nid] = st.groups[orig];
            CandidateSet merged;
            for (CandidateId c : x) merged = set_union(merged, st.groups[c]);
            nxt.groups[dr.mapping[0].second] = std::move(merged);
            push(std::move(nxt));
        }
    }
    return std::nullopt;
}

X3CInstance parse_x3c(std::istream& in, int base) {
    X3CInstance inst;
    std::string line;
    int max_elem = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<int> elems;
        int e;
        while (ls >> e) elems.push_back(e);
        if (elems.empty()) continue;
        if (elems.size() != 3)
            throw parse_error("x3c line " + std::to_string(lineno) + ": expected three elements");
        std::sort(elems.begin(), elems.end());
        if (elems[0] == elems[1] || elems[1] == elems[2])
            throw parse_error("x3c line " + std::to_string(lineno) + ": repeated element");
        if (elems[0] < 0) throw parse_error("x3c line " + std::to_string(lineno) + ": negative element");
        max_elem = std::max(max_elem, elems[2]);
        inst.sets.push_back({elems[0], elems[1], elems[2]});
    }
    int size = base >= 0 ? base : max_elem + 1;
    if (size <= 0 || size % 3 != 0)
        throw parse_error("x3c: base set size " + std::to_string(size) + " is not a multiple of 3");
    if (max_elem >= size) throw parse_error("x3c: element exceeds base set");
    inst.k = size / 3;
    return inst;
}

X3CReduction x3c_reduction(const X3CInstance& inst) {
    if (inst.k < 1) throw std::invalid_argument("x3c_reduction: degenerate instance (k = 0)");
    if (inst.sets.empty())
        throw std::invalid_argument("x3c_reduction: need at least one set to pad from");
    for (const auto& s : inst.sets)
        for (int e : s)
            if (e < 0 || e >= 3 * inst.k)
                throw std::invalid_argument("x3c_reduction: element out of base set");

    std::vector<std::array<int, 3>> sets = inst.sets;
    for (auto& s : sets) std::sort(s.begin(), s.end());
    for (size_t i = 0; static_cast<int>(sets.size()) <= 3 * inst.k; ++i)
        sets.push_back(sets[i % inst.sets.size()]);
    const int s = static_cast<int>(sets.size());
    const int block = 6 * s;

    // Inner slides with the swapped voter pairs for each set index.
    Profile outer = slide(s);
    std::vector<Profile> q(s);
    for (int j = 0; j < s; ++j) {
        q[j] = slide(block);
        for (int third = 0; third < 3; ++third)
            std::swap(q[j].orders[third * 2 * s + 2 * j], q[j].orders[third * 2 * s + 2 * j + 1]);
    }

    // Row of q[j] used by voter l of group i, following the placement rules.
    auto row = [&](int j, int i, int l) {
        const auto& [x, y, z] = sets[j];
        if (i < x) return 0;
        if (i == x) return l;
        if (i < y) return 2 * s - 1;
        if (i == y) return 2 * s + l;
        if (i < z) return 4 * s - 1;
        if (i == z) return 4 * s + l;
        return 6 * s - 1;
    };

    X3CReduction red;
    red.profile.m = s * block;
    for (int i = 0; i < s; ++i)
        for (int l = 0; l < 2 * s; ++l) {
            LinearOrder r;
            r.ranking.reserve(red.profile.m);
            for (CandidateId slot : outer.orders[i].ranking)
                for (CandidateId c : q[slot].orders[row(slot, i, l)].ranking)
                    r.ranking.push_back(slot * block + c);
            red.profile.orders.push_back(std::move(r));
        }
    red.target = 6ll * s * inst.k + (s - inst.k);
    for (int j = 0; j < s; ++j) {
        CandidateSet g;
        for (int c = 0; c < block; ++c) g.push_back(j * block + c);
        red.groups.push_back(std::move(g));
    }
    return red;
}

}  // namespace clonelab
