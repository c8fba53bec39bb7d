#include "clonelab/single_peaked.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "clonelab/clones.hpp"

namespace clonelab {

bool compatible(const LinearOrder& r, const Axis& ax) {
    const int m = r.size();
    std::vector<int> pos(m, -1);
    for (int i = 0; i < m; ++i) pos[ax.order[i]] = i;
    int lo = pos[r.ranking[0]], hi = lo;
    for (int i = 1; i < m; ++i) {
        int q = pos[r.ranking[i]];
        if (q == lo - 1)
            lo = q;
        else if (q == hi + 1)
            hi = q;
        else
            return false;
    }
    return true;
}

bool single_peaked_wrt(const Profile& p, const Axis& ax) {
    for (const auto& r : p.orders)
        if (!compatible(r, ax)) return false;
    return true;
}

namespace {

// Backtracking over the forced end-placement rounds. The axis is built
// outside-in as two lists (left list holds axis positions 0,1,2,... and
// right list positions m-1, m-2, ...). Each voter consumes the axis from
// both ends of the full axis inward, with its own pair of position
// pointers; the meeting point differs per voter, so a voter's outer tail
// may reach past the construction's split point.
struct AxisSearch {
    int m, n;
    std::vector<std::vector<CandidateId>> rev;     // per voter, worst first
    std::vector<std::vector<CandidateId>> rounds;  // forced end candidates

    std::vector<CandidateId> left, right;
    std::vector<char> placed;
    std::vector<int> kptr;  // per voter: consumed prefix of rev
    std::vector<int> lpos;  // per voter: next axis position from the left
    std::vector<int> rpos;  // per voter: next axis position from the right

    explicit AxisSearch(const Profile& p) : m(p.m), n(p.voters()) {
        rev.resize(n);
        for (int i = 0; i < n; ++i) {
            rev[i] = p.orders[i].ranking;
            std::reverse(rev[i].begin(), rev[i].end());
        }
        placed.assign(m, 0);
        kptr.assign(n, 0);
        lpos.assign(n, 0);
        rpos.assign(n, m - 1);
    }

    bool compute_rounds() {
        std::vector<char> in_s(m, 1);
        std::vector<int> ptr(n, 0);
        int remaining = m;
        while (remaining > 0) {
            std::set<CandidateId> ends;
            for (int i = 0; i < n; ++i) {
                while (!in_s[rev[i][ptr[i]]]) ++ptr[i];
                ends.insert(rev[i][ptr[i]]);
            }
            if (ends.size() > 2) return false;
            rounds.emplace_back(ends.begin(), ends.end());
            for (CandidateId c : ends) {
                in_s[c] = 0;
                --remaining;
            }
        }
        return true;
    }

    bool known(int t) const {
        return t < static_cast<int>(left.size()) || t >= m - static_cast<int>(right.size());
    }
    CandidateId content(int t) const {
        return t < static_cast<int>(left.size()) ? left[t] : right[m - 1 - t];
    }

    // Advance every voter as far as determined. Once both of a voter's next
    // positions are filled and neither holds its next candidate (which is
    // already placed somewhere), the voter can never finish.
    bool advance() {
        for (int i = 0; i < n; ++i) {
            while (kptr[i] < m) {
                CandidateId c = rev[i][kptr[i]];
                if (known(lpos[i]) && content(lpos[i]) == c) {
                    ++lpos[i];
                    ++kptr[i];
                } else if (known(rpos[i]) && content(rpos[i]) == c) {
                    --rpos[i];
                    ++kptr[i];
                } else if (!placed[c]) {
                    break;
                } else if (known(lpos[i]) && known(rpos[i])) {
                    return false;
                } else {
                    break;
                }
            }
        }
        return true;
    }

    bool dfs(size_t round) {
        if (round == rounds.size()) return true;  // advance() already consumed everything
        const auto& e = rounds[round];
        auto saved_left = left;
        auto saved_right = right;
        auto sk = kptr;
        auto sl = lpos;
        auto sr = rpos;
        auto restore = [&] {
            left = saved_left;
            right = saved_right;
            kptr = sk;
            lpos = sl;
            rpos = sr;
            for (CandidateId c : e) placed[c] = 0;
        };
        for (int v = 0; v < 2; ++v) {
            if (e.size() == 1) {
                (v == 0 ? left : right).push_back(e[0]);
                placed[e[0]] = 1;
            } else {
                left.push_back(e[v]);
                right.push_back(e[1 - v]);
                placed[e[0]] = placed[e[1]] = 1;
            }
            if (advance() && dfs(round + 1)) return true;
            restore();
        }
        return false;
    }
};

}  // namespace

std::optional<Axis> is_single_peaked(const Profile& p) {
    if (p.m == 1) return Axis{{0}};
    AxisSearch search(p);
    if (!search.compute_rounds()) return std::nullopt;
    if (!search.dfs(0)) return std::nullopt;
    Axis ax;
    ax.order = search.left;
    ax.order.insert(ax.order.end(), search.right.rbegin(), search.right.rend());
    if (!single_peaked_wrt(p, ax)) throw std::logic_error("is_single_peaked: witness failed");
    return ax;
}

std::optional<Axis> brute_force_axis(const Profile& p) {
    if (p.m > 8) throw std::invalid_argument("brute_force_axis: m too large");
    Axis ax;
    for (CandidateId c = 0; c < p.m; ++c) ax.order.push_back(c);
    do {
        if (single_peaked_wrt(p, ax)) return ax;
    } while (std::next_permutation(ax.order.begin(), ax.order.end()));
    return std::nullopt;
}

std::pair<CandidateId, CandidateId> extreme_peaks(const Profile& p, const Axis& ax) {
    if (!single_peaked_wrt(p, ax))
        throw std::invalid_argument("extreme_peaks: profile not single-peaked w.r.t. axis");
    CandidateSet pk = peaks(p);
    if (pk.size() < 2) throw std::invalid_argument("extreme_peaks: fewer than two distinct peaks");
    std::vector<int> pos(p.m);
    for (int i = 0; i < p.m; ++i) pos[ax.order[i]] = i;
    CandidateId lo = pk[0], hi = pk[0];
    for (CandidateId c : pk) {
        if (pos[c] < pos[lo]) lo = c;
        if (pos[c] > pos[hi]) hi = c;
    }
    return {lo, hi};
}

ClonePartition clone_partition(const Profile& p, const Axis& ax, const CandidateSet& d) {
    if (d.size() < 2) throw std::invalid_argument("clone_partition: |D| must be at least 2");
    if (!is_clone_set(p, d)) throw std::invalid_argument("clone_partition: D is not a clone set");
    if (!single_peaked_wrt(p, ax))
        throw std::invalid_argument("clone_partition: profile not single-peaked w.r.t. axis");

    std::vector<char> in_d(p.m, 0);
    for (CandidateId c : d) in_d[c] = 1;
    // Maximal runs of D along the axis.
    std::vector<std::pair<int, int>> runs;  // [from, to] axis indices
    for (int i = 0; i < p.m; ++i) {
        if (!in_d[ax.order[i]]) continue;
        if (!runs.empty() && runs.back().second == i - 1)
            runs.back().second = i;
        else
            runs.emplace_back(i, i);
    }
    if (runs.size() > 2)
        throw std::invalid_argument("clone_partition: D occupies more than two axis blocks");

    auto slice = [&](int from, int to) {  // inclusive, sorted
        CandidateSet s;
        for (int i = from; i <= to; ++i) s.push_back(ax.order[i]);
        std::sort(s.begin(), s.end());
        return s;
    };
    ClonePartition part;
    if (runs.size() == 2) {
        part.a1 = runs[0].first > 0 ? slice(0, runs[0].first - 1) : CandidateSet{};
        part.d1 = slice(runs[0].first, runs[0].second);
        part.p = slice(runs[0].second + 1, runs[1].first - 1);
        part.d2 = slice(runs[1].first, runs[1].second);
        part.a2 = runs[1].second < p.m - 1 ? slice(runs[1].second + 1, p.m - 1) : CandidateSet{};
    } else {
        auto [from, to] = runs[0];
        part.a1 = from > 0 ? slice(0, from - 1) : CandidateSet{};
        part.d1 = slice(from, to - 1);
        part.d2 = slice(to, to);
        part.a2 = to < p.m - 1 ? slice(to + 1, p.m - 1) : CandidateSet{};
    }
    return part;
}

CloneType classify_clone_type(const Profile& p, const Axis& ax, const CandidateSet& d) {
    auto part = clone_partition(p, ax, d);
    return part.p.empty() ? CloneType::First : CloneType::Second;
}

namespace {

// Maximal black internal nodes' leaf sets (size >= 2) under a coloring.
std::vector<CandidateSet> black_blocks(const PQTree& t, const std::vector<bool>& black) {
    std::vector<CandidateSet> out;
    std::function<void(int)> walk = [&](int u) {
        if (black[u]) {
            auto ls = t.leaf_set(u);
            if (ls.size() >= 2) out.push_back(ls);
            return;
        }
        for (int c : t.nodes[u].children) walk(c);
    };
    walk(t.root);
    return out;
}

}  // namespace

SpDecloneOutcome basic_declone_sp(const Profile& p) {
    PQTree t = build_tree(all_clone_sets(p));
    std::vector<bool> black(t.nodes.size(), true);
    std::deque<int> queue{t.root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        black[v] = false;
        auto dr = declone(p, black_blocks(t, black));
        if (is_single_peaked(dr.profile)) {
            for (int c : t.nodes[v].children) queue.push_back(c);
        } else {
            black[v] = true;
        }
    }
    DecloneResult res = declone(p, black_blocks(t, black));
    return {std::move(res), std::move(t), std::move(black)};
}

namespace {

int collapsed_excess(const std::vector<CandidateSet>& sets) {
    int e = 0;
    for (const auto& s : sets) e += static_cast<int>(s.size()) - 1;
    return e;
}

}  // namespace

DecloneResult declone_sp(const Profile& p) {
    PQTree t = build_tree(all_clone_sets(p));

    auto sp_with = [&](const std::vector<CandidateSet>& blocks) {
        return is_single_peaked(declone(p, blocks).profile).has_value();
    };
    auto concat = [](std::vector<CandidateSet> a, const std::vector<CandidateSet>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    // Best collapse sets within subtree(v), given collapses fixed outside it.
    std::function<std::vector<CandidateSet>(int, const std::vector<CandidateSet>&)> solve =
        [&](int v, const std::vector<CandidateSet>& ctx) -> std::vector<CandidateSet> {
        const auto& nd = t.nodes[v];
        if (nd.kind == PQTree::Kind::Leaf) return {};

        std::vector<CandidateSet> child_blocks;
        for (int c : nd.children) {
            auto ls = t.leaf_set(c);
            if (ls.size() >= 2) child_blocks.push_back(std::move(ls));
        }
        if (sp_with(concat(ctx, child_blocks))) {
            std::vector<CandidateSet> acc = child_blocks;
            for (int c : nd.children) {
                if (t.nodes[c].kind == PQTree::Kind::Leaf) continue;
                auto ls = t.leaf_set(c);
                acc.erase(std::find(acc.begin(), acc.end(), ls));
                auto sub = solve(c, concat(ctx, acc));
                for (auto& s : sub) acc.push_back(std::move(s));
            }
            return acc;
        }
        if (nd.kind == PQTree::Kind::P) return {t.leaf_set(v)};

        // Blocked Q-node: split ({first}, rest) and (rest, {last}).
        auto eval_split = [&](int kept, CandidateSet rest)
            -> std::optional<std::vector<CandidateSet>> {
            std::vector<CandidateSet> base{std::move(rest)};
            auto probe = concat(ctx, base);
            auto kept_ls = t.leaf_set(kept);
            if (kept_ls.size() >= 2) probe.push_back(kept_ls);
            if (!sp_with(probe)) return std::nullopt;
            auto out = base;
            if (t.nodes[kept].kind != PQTree::Kind::Leaf) {
                auto sub = solve(kept, concat(ctx, base));
                for (auto& s : sub) out.push_back(std::move(s));
            }
            return out;
        };
        const auto& kids = nd.children;
        CandidateSet rest_of_first, rest_of_last;
        for (size_t i = 1; i < kids.size(); ++i)
            rest_of_first = set_union(rest_of_first, t.leaf_set(kids[i]));
        for (size_t i = 0; i + 1 < kids.size(); ++i)
            rest_of_last = set_union(rest_of_last, t.leaf_set(kids[i]));
        auto s1 = eval_split(kids.front(), rest_of_first);
        auto s2 = eval_split(kids.back(), rest_of_last);
        if (s1 && (!s2 || collapsed_excess(*s1) <= collapsed_excess(*s2))) return *s1;
        if (s2) return *s2;
        return {t.leaf_set(v)};
    };

    auto sets = solve(t.root, {});
    return declone(p, sets);
}

DecloneResult brute_force_optimal_sp_declone(const Profile& p) {
    if (p.m > 7) throw std::invalid_argument("brute_force_optimal_sp_declone: m too large");

    struct State {
        Profile prof;
        std::vector<CandidateSet> groups;  // original ids behind each current candidate
    };
    auto key_of = [](const Profile& q) {
        std::string k = std::to_string(q.m);
        for (const auto& r : q.orders) {
            k += '|';
            for (CandidateId c : r.ranking) k += static_cast<char>('0' + c);
        }
        return k;
    };

    State start;
    start.prof = p;
    start.prof.names.reset();
    for (CandidateId c = 0; c < p.m; ++c) start.groups.push_back({c});

    std::set<std::string> seen{key_of(start.prof)};
    std::deque<State> queue{start};
    std::optional<State> best;
    while (!queue.empty()) {
        State st = std::move(queue.front());
        queue.pop_front();
        if (is_single_peaked(st.prof) && (!best || st.prof.m > best->prof.m)) best = st;
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
            if (!seen.insert(key_of(dr.profile)).second) continue;
            State nxt;
            nxt.prof = dr.profile;
            nxt.prof.names.reset();
            nxt.groups.assign(nxt.prof.m, {});
            for (auto [orig, nid] : dr.survivors) nxt.groups[nid] = st.groups[orig];
            CandidateSet merged;
            for (CandidateId c : x) merged = set_union(merged, st.groups[c]);
            nxt.groups[dr.mapping[0].second] = std::move(merged);
            queue.push_back(std::move(nxt));
        }
    }
    // The all-collapsed profile is always reachable and single-peaked.
    std::vector<CandidateSet> collapse;
    for (const auto& g : best->groups)
        if (g.size() >= 2) collapse.push_back(g);
    return declone(p, collapse);
}

}  // namespace clonelab
